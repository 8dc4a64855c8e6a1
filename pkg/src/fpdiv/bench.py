"""Benchmark harness: the four k-parameterized workloads, three methods.

Workloads follow the affine generators a(k) = a0 + da*k, b(k) = b0 + db*k
over 10000 iterations: a 64-bit and a 32-bit varying-divisor workload and
their fixed-divisor (b = 74567) counterparts.  Methods: `fp` (the
floating-point division algorithms), `loop` (the restoring shift-subtract
baseline), `native` (the host's divide).  Each timed pass folds every
quotient into a wrapping checksum; equal checksums across methods are the
in-harness correctness guard, and timing never includes operand
generation.

Where a workload's divisor is invariant the reciprocal work can be hoisted
out of the loop; `hoist_divisor_variant` measures that form.  Timings are
best-of-N wall-clock nanoseconds after warmup runs; they are host numbers
for qualitative comparison, not reproduction targets for any particular
hardware.
"""

from dataclasses import dataclass, replace

from fpdiv._backends import active_backend, get_backend

CSV_HEADER = "workload,width,method,unroll,count,reps,best_ns,checksum"

_METHOD_CODES = {"fp": 0, "loop": 1, "native": 2}
DEFAULT_REPS = 31
DEFAULT_WARMUP = 3


@dataclass(frozen=True)
class Workload:
    """Affine operand generator: k -> (a0 + da*k, b0 + db*k), k < count."""

    id: str
    width: int
    a0: int
    da: int
    b0: int
    db: int
    count: int = 10000
    unroll: int = 1

    @property
    def invariant_divisor(self):
        return self.b0 if self.db == 0 else None

    def pairs(self):
        mask = (1 << self.width) - 1
        return [((self.a0 + self.da * k) & mask,
                 (self.b0 + self.db * k) & mask)
                for k in range(self.count)]


@dataclass(frozen=True)
class BenchRecord:
    workload: str
    width: int
    method: str
    unroll: int
    count: int
    reps: int
    best_ns: int
    checksum: int

    def csv_row(self):
        return "%s,%d,%s,%d,%d,%d,%d,%d" % (
            self.workload, self.width, self.method, self.unroll,
            self.count, self.reps, self.best_ns, self.checksum)


def workload_catalog(count=10000):
    """The four stock workloads, each in unroll-1 and unroll-2 form.

    64-bit: a = 2^40 + 222823k; 32-bit: a = 2^24 + 871k; divisors either
    vary as b = 2^12 + 19k or stay fixed at 74567.
    """
    base = [
        Workload(id="u64-var-b", width=64, a0=2**40, da=222823,
                 b0=2**12, db=19, count=count),
        Workload(id="u32-var-b", width=32, a0=2**24, da=871,
                 b0=2**12, db=19, count=count),
        Workload(id="u64-fixed-b", width=64, a0=2**40, da=222823,
                 b0=74567, db=0, count=count),
        Workload(id="u32-fixed-b", width=32, a0=2**24, da=871,
                 b0=74567, db=0, count=count),
    ]
    out = []
    for w in base:
        out.append(w)
        out.append(replace(w, unroll=2))
    return out


def _bench_once(be, wl, method_code, hoist):
    return be.bench_run(wl.width, method_code, wl.unroll, 1 if hoist else 0,
                        wl.a0, wl.da, wl.b0, wl.db, wl.count)


def _measure(be, wl, method_code, reps, warmup, hoist=False):
    for _ in range(warmup):
        _bench_once(be, wl, method_code, hoist)
    best = None
    checksum = None
    for _ in range(reps):
        ns, cs = _bench_once(be, wl, method_code, hoist)
        if checksum is None:
            checksum = cs
        elif cs != checksum:
            raise AssertionError("checksum changed between repetitions")
        if best is None or ns < best:
            best = ns
    return best, checksum


def run_bench(workload, method, reps=DEFAULT_REPS, warmup=DEFAULT_WARMUP,
              backend=None):
    """Best-of-reps timing of one method over one workload."""
    if method not in _METHOD_CODES:
        raise ValueError("unknown method %r" % (method,))
    be = get_backend(backend) if backend else active_backend()
    best, cs = _measure(be, workload, _METHOD_CODES[method], reps, warmup)
    return BenchRecord(workload=workload.id, width=workload.width,
                       method=method, unroll=workload.unroll,
                       count=workload.count, reps=reps, best_ns=best,
                       checksum=cs)


def hoist_divisor_variant(workload, reps=DEFAULT_REPS, warmup=DEFAULT_WARMUP,
                          backend=None):
    """fp method with all divisor-only work precomputed outside the loop.

    Only meaningful when the divisor is loop-invariant.
    """
    if workload.invariant_divisor is None:
        raise ValueError("workload %r has no invariant divisor"
                         % (workload.id,))
    be = get_backend(backend) if backend else active_backend()
    best, cs = _measure(be, workload, _METHOD_CODES["fp"], reps, warmup,
                        hoist=True)
    return BenchRecord(workload=workload.id + "+hoist",
                       width=workload.width, method="fp",
                       unroll=workload.unroll, count=workload.count,
                       reps=reps, best_ns=best, checksum=cs)


def run_suite(count=10000, reps=DEFAULT_REPS, warmup=DEFAULT_WARMUP,
              backend=None, methods=("fp", "loop", "native")):
    """All workloads x methods, plus hoisted forms for fixed divisors.

    Raises AssertionError if any workload's methods disagree on the
    checksum.
    """
    records = []
    for wl in workload_catalog(count):
        group = [run_bench(wl, m, reps, warmup, backend) for m in methods]
        sums = {r.checksum for r in group}
        if len(sums) != 1:
            raise AssertionError(
                "checksum mismatch on %s: %r" % (wl.id, sums))
        records.extend(group)
        if wl.invariant_divisor is not None:
            records.append(hoist_divisor_variant(wl, reps, warmup, backend))
    return records


def compare_backends(count=2000, reps=5, warmup=1):
    """fp-method timing of both backends on the 64-bit varying workload.

    Returns {backend: best_ns} (plus the checksum, which must agree);
    available only when the compiled extension imported.
    """
    wl = workload_catalog(count)[0]
    out = {}
    checksums = set()
    from fpdiv._backends import available_backends
    for name in available_backends():
        rec = run_bench(wl, "fp", reps, warmup, backend=name)
        out[name] = rec.best_ns
        checksums.add(rec.checksum)
    if len(checksums) != 1:
        raise AssertionError("backends disagree on checksum: %r" % checksums)
    return out


def report(records, fmt="text"):
    """Render records as a text table or CSV with the fixed header."""
    if fmt == "csv":
        lines = [CSV_HEADER]
        lines.extend(r.csv_row() for r in records)
        return "\n".join(lines) + "\n"
    by_wl = {}
    for r in records:
        by_wl.setdefault((r.workload, r.width, r.count), []).append(r)
    methods = ["loop", "fp", "native"]
    titles = {"loop": "Loop", "fp": "Floating-point", "native": "Native"}
    lines = []
    for (wl, width, count), recs in sorted(by_wl.items()):
        lines.append("%s (%d-bit, %d divisions, ns best-of-%d)"
                     % (wl, width, count, recs[0].reps))
        hdr = "  %-28s" % "Method"
        for m in methods:
            hdr += "%16s" % titles[m]
        lines.append(hdr)
        for unroll in (1, 2):
            row = {r.method: r for r in recs if r.unroll == unroll}
            if not row:
                continue
            label = ("One quotient per iteration" if unroll == 1
                     else "Two quotients per iteration")
            line = "  %-28s" % label
            for m in methods:
                line += ("%16d" % row[m].best_ns) if m in row \
                    else "%16s" % "-"
            lines.append(line)
        lines.append("")
    return "\n".join(lines)
