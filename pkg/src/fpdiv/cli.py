"""Command-line front end: verify, fuzz, audit, bench, divide.

All subcommands are batch-mode and deterministic for a given flag set
(bench timing fields excepted; its checksums stay deterministic).  Exit
codes: 0 success, 1 verification failure, 2 usage error.
"""

import argparse
import json
import sys

from fpdiv import bench as bench_mod
from fpdiv import verify
from fpdiv._backends import active_backend, set_backend
from fpdiv import divider


def _build_parser():
    p = argparse.ArgumentParser(
        prog="fpdiv",
        description="integer division via floating-point arithmetic: "
                    "verification, audits, fuzzing, benchmarks")
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, count_default):
        sp.add_argument("--width", type=int, choices=(32, 64), default=64)
        sp.add_argument("--signed", action="store_true")
        sp.add_argument("--seed", type=int, default=1)
        sp.add_argument("--count", type=int, default=count_default)
        sp.add_argument("--format", choices=("text", "json", "csv"),
                        default="text")
        sp.add_argument("--out", default=None, metavar="PATH")
        sp.add_argument("--variant", choices=("cmov", "branching"),
                        default="cmov")
        sp.add_argument("--backend", choices=("auto", "ext", "pure"),
                        default="auto")

    common(sub.add_parser("verify",
                          help="corner suite plus exhaustive small sweep"),
           10**6)
    common(sub.add_parser("fuzz", help="seeded differential fuzzing"), 10**6)
    common(sub.add_parser("audit",
                          help="exact-rational audits of the error bounds"),
           10**6)
    bp = sub.add_parser("bench", help="stock benchmark workloads")
    common(bp, 10**4)
    bp.add_argument("--reps", type=int, default=bench_mod.DEFAULT_REPS)
    dp = sub.add_parser("divide", help="divide once and show the trace")
    common(dp, 1)
    dp.add_argument("a", type=int)
    dp.add_argument("b", type=int)
    return p


def _kv_lines(d):
    return ["%s=%s" % (k, d[k]) for k in sorted(d)]


def _emit(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(obj, fmt, text_lines):
    if fmt == "json":
        return json.dumps(obj, sort_keys=True, indent=2,
                          default=str) + "\n"
    if fmt == "csv":
        rows = ["key,value"]
        flat = obj if isinstance(obj, dict) else {"items": obj}
        for k in sorted(flat):
            rows.append("%s,%s" % (k, flat[k]))
        return "\n".join(rows) + "\n"
    return "\n".join(text_lines) + "\n"


def _failures_of(summary):
    return (summary["failures"] + summary["trace_violations"]
            + summary["variant_mismatches"] + summary["r1_violations"]
            + summary["wrap_mismatches"])


def _cmd_verify(args):
    be = active_backend()
    width = args.width
    if args.signed:
        pairs = verify.signed_corner_pairs(width)
        bad = []
        for a, b in pairs:
            if b == 0:
                continue
            rep = verify.check_pair(a, b, width, signed_=True)
            if not rep["pass"]:
                bad.append(rep)
        fz = verify.fuzz(args.count, args.seed, width, signed_=True)
        failures = len(bad) + _failures_of(fz)
        obj = {"mode": "signed", "width": width, "backend": be.NAME,
               "corner_pairs": len(pairs), "corner_failures": len(bad),
               "fuzz_checked": fz["checked"], "fuzz_failures": fz["failures"],
               "failures": failures}
        lines = ["verify width=%d signed=yes backend=%s" % (width, be.NAME),
                 "corner pairs: %d, failures: %d" % (len(pairs), len(bad)),
                 "signed fuzz: checked=%d, failures=%d"
                 % (fz["checked"], fz["failures"]),
                 "total failures: %d" % failures]
        return obj, lines, failures

    pairs = verify.corner_suite(width)
    a_list = [p[0] for p in pairs]
    b_list = [p[1] for p in pairs]
    if width == 32:
        corner = be.run_pairs32(a_list, b_list)
        sweep = be.sweep_rect32(2**12, 2**12)
    else:
        corner = be.run_pairs64(a_list, b_list)
        sweep = be.sweep_rect64(2**12, 2**12)
    failures = _failures_of(corner) + _failures_of(sweep)
    obj = {"mode": "unsigned", "width": width, "backend": be.NAME,
           "corner": corner, "sweep": sweep, "failures": failures}
    lines = ["verify width=%d signed=no backend=%s" % (width, be.NAME),
             "corner pairs: checked=%d, failures=%d, first=%s"
             % (corner["checked"], _failures_of(corner),
                corner["first_failure"]),
             "exhaustive sweep a in [0,4096], b in [1,4096]: "
             "checked=%d, failures=%d"
             % (sweep["checked"], _failures_of(sweep)),
             "total failures: %d" % failures]
    return obj, lines, failures


def _cmd_fuzz(args):
    fz = verify.fuzz(args.count, args.seed, args.width, signed_=args.signed)
    failures = _failures_of(fz)
    lines = ["fuzz width=%d signed=%s count=%d seed=%d backend=%s"
             % (args.width, "yes" if args.signed else "no", args.count,
                args.seed, fz["backend"])]
    lines += _kv_lines({k: v for k, v in fz.items()
                        if k not in ("width", "signed", "count", "seed",
                                     "backend")})
    lines.append("total failures: %d" % failures)
    return fz, lines, failures


def _cmd_audit(args):
    be = active_backend()
    # reciprocal bound over structured plus seeded random divisors
    worst = None
    violations = 0
    divs = verify.structured_divisors(64)
    checked = len(divs)
    for b in divs:
        rec = verify.audit_recip_error(b)
        if not rec.passed:
            violations += 1
        if worst is None or rec.measured > worst[1]:
            worst = (b, rec.measured)
    state = args.seed & (2**64 - 1)
    for _ in range(args.count):
        state, w = verify._sm64(state)
        b = w or 1
        rec = verify.audit_recip_error(b)
        checked += 1
        if not rec.passed:
            violations += 1
        if rec.measured > worst[1]:
            worst = (b, rec.measured)
    frac_of_bound = float(worst[1] / verify.RECIP_REL_BOUND)
    # r1 magnitude bound, boundary-biased scan
    scan = be.r1_scan(args.count, args.seed)
    r1_fail = (scan["failures"] + scan["r1_violations"]
               + scan["wrap_mismatches"] + scan["trace_violations"])
    failures = violations + r1_fail
    obj = {"backend": be.NAME,
           "recip_divisors_checked": checked,
           "recip_violations": violations,
           "recip_worst_b": worst[0],
           "recip_worst_rel_error": str(worst[1]),
           "recip_fraction_of_bound": frac_of_bound,
           "r1_scan": scan,
           "failures": failures}
    lines = ["audit count=%d seed=%d backend=%s"
             % (args.count, args.seed, be.NAME),
             "reciprocal bound 1049*2^-56: divisors=%d, violations=%d"
             % (checked, violations),
             "worst relative error at b=%d: %s (%.6f of bound)"
             % (worst[0], worst[1], frac_of_bound),
             "r1 scan: checked=%d, |r1| max=%d, violations=%d, "
             "sufficiency_violations=%d"
             % (scan["checked"], scan["max_abs_r1"], scan["r1_violations"],
                scan["r1_sufficiency_violations"]),
             "total failures: %d" % failures]
    return obj, lines, failures


def _cmd_bench(args):
    try:
        records = bench_mod.run_suite(count=args.count, reps=args.reps)
    except AssertionError as exc:
        print("bench failed: %s" % exc, file=sys.stderr)
        return None, None, 1
    if args.format == "csv":
        return records, None, 0
    obj = [r.__dict__ for r in records]
    lines = bench_mod.report(records, "text").splitlines()
    # fp vs loop speedup on the 64-bit varying workload, unroll 1
    by = {(r.workload, r.method, r.unroll): r for r in records}
    fp = by.get(("u64-var-b", "fp", 1))
    lp = by.get(("u64-var-b", "loop", 1))
    if fp and lp:
        lines.append("fp speedup over loop (u64-var-b, unroll 1): %.2fx"
                     % (lp.best_ns / fp.best_ns))
    return obj, lines, 0


def _cmd_divide(args):
    a, b = args.a, args.b
    width = args.width
    try:
        if args.signed:
            out = (divider.sdivmod32(a, b) if width == 32
                   else divider.sdivmod64(a, b))
            obj = {"a": a, "b": b, "width": width, "signed": True,
                   "q": out.quotient, "r": out.remainder}
            lines = ["q=%d" % out.quotient, "r=%d" % out.remainder]
            return obj, lines, 0
        if width == 32:
            tr = divider.udivmod32_trace(a, b)
            obj = {"a": a, "b": b, "width": 32, "signed": False,
                   "q": tr.final.quotient, "r": tr.final.remainder,
                   "qd": tr.qd, "q0": tr.q0, "r0": tr.r0}
            lines = ["q=%d" % tr.final.quotient, "r=%d" % tr.final.remainder,
                     "qd=%r q0=%d r0=%d" % (tr.qd, tr.q0, tr.r0)]
            return obj, lines, 0
        if args.variant == "branching":
            out = divider.udivmod64_branching(a, b)
            obj = {"a": a, "b": b, "width": 64, "signed": False,
                   "variant": "branching",
                   "q": out.quotient, "r": out.remainder}
            lines = ["q=%d" % out.quotient, "r=%d" % out.remainder]
            return obj, lines, 0
        tr = divider.udivmod64_trace(a, b)
        obj = {"a": a, "b": b, "width": 64, "signed": False,
               "variant": "cmov",
               "q": tr.final.quotient, "r": tr.final.remainder,
               "q1": tr.q1, "r1": tr.r1, "q2": tr.q2, "q3d": tr.q3d,
               "r2": tr.r2, "q0": tr.q0,
               "special_case": tr.special_case.value}
        lines = ["q=%d" % tr.final.quotient, "r=%d" % tr.final.remainder,
                 "q1=%d r1=%d q2=%d q3d=%r r2=%d q0=%d"
                 % (tr.q1, tr.r1, tr.q2, tr.q3d, tr.r2, tr.q0),
                 "special_case=%s" % tr.special_case.value]
        return obj, lines, 0
    except ZeroDivisionError:
        print("error: division by zero", file=sys.stderr)
        return None, None, None
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return None, None, None


def main(argv=None):
    args = _build_parser().parse_args(argv)
    set_backend(args.backend)
    if args.cmd == "divide":
        obj, lines, failures = _cmd_divide(args)
        if obj is None:
            return 2
        _emit(_render(obj, args.format, lines), args.out)
        return 0
    if args.cmd == "bench":
        obj, lines, failures = _cmd_bench(args)
        if failures:
            return 1
        if args.format == "csv":
            _emit(bench_mod.report(obj, "csv"), args.out)
        else:
            _emit(_render(obj, args.format, lines), args.out)
        return 0
    handler = {"verify": _cmd_verify, "fuzz": _cmd_fuzz,
               "audit": _cmd_audit}[args.cmd]
    obj, lines, failures = handler(args)
    _emit(_render(obj, args.format, lines), args.out)
    return 0 if failures == 0 else 1
