"""Acceptance criteria, one test per criterion.

Each test ends by printing a single summary line (visible with -rA/-s).
These run on the default backend, which prefers the compiled extension;
the exhaustive 32-bit dividend sweeps calibrate themselves at runtime and
drop to dense sampling when the host cannot finish them in the budget.
"""

import json
import subprocess
import sys
import time
from fractions import Fraction

from fpdiv import bench, divider, verify
from fpdiv._backends import active_backend

U64 = 2**64 - 1
SWEEP_DIVISORS = (1, 3, 7, 2**16 - 1, 2**32 - 1)
SWEEP_BUDGET_S = 420.0


def _zero(summary, *keys):
    return all(summary[k] == 0 for k in keys)


def _line(n, label, detail):
    print("criterion %d (%s): PASS -- %s" % (n, label, detail))


def test_criterion_1_unsigned32_oracle_equivalence():
    be = active_backend()
    t0 = time.perf_counter()
    # (a) exhaustive rectangle [0, 2^12] x [1, 2^12]
    rect = be.sweep_rect32(2**12, 2**12)
    assert rect["checked"] == 4097 * 4096
    assert _zero(rect, "failures", "trace_violations")
    # (b) per-divisor dividend sweeps, exhaustive when the host is fast
    # enough for all five within the budget, else 10^8 dense samples each
    probe = time.perf_counter()
    s = be.sweep_range32(3, 0, 2**28)
    probe_t = time.perf_counter() - probe
    assert _zero(s, "failures", "trace_violations")
    projected = probe_t * 16 * len(SWEEP_DIVISORS)
    exhaustive = projected <= SWEEP_BUDGET_S
    checked_b = 0
    for b in SWEEP_DIVISORS:
        if exhaustive:
            s = be.sweep_range32(b, 0, 2**32)
            assert s["checked"] == 2**32, b
        else:
            s = be.sweep_sampled32(b, 10**8)
            assert s["checked"] == 10**8, b
        assert _zero(s, "failures", "trace_violations"), (b, s)
        checked_b += s["checked"]
    # (c) corner suite
    pairs = verify.corner_suite(32)
    corner = be.run_pairs32([p[0] for p in pairs], [p[1] for p in pairs])
    assert _zero(corner, "failures", "trace_violations"), corner
    # (d) seeded fuzz
    fz = be.fuzz32(10**7, 1)
    assert fz["checked"] == 10**7
    assert _zero(fz, "failures", "trace_violations"), fz
    dt = time.perf_counter() - t0
    assert dt <= 600.0, "runtime target exceeded: %.0fs" % dt
    _line(1, "32-bit oracle equivalence",
          "rect %d + %s sweeps %d + corners %d + fuzz %d pairs, "
          "0 mismatches, %.0fs"
          % (rect["checked"], "exhaustive" if exhaustive else "sampled",
             checked_b, corner["checked"], fz["checked"], dt))


def test_criterion_2_unsigned64_oracle_equivalence():
    be = active_backend()
    pairs = verify.corner_suite(64)
    assert len(pairs) >= 10**4
    corner = be.run_pairs64([p[0] for p in pairs], [p[1] for p in pairs])
    assert _zero(corner, "failures", "trace_violations",
                 "variant_mismatches"), corner
    fz = be.fuzz64(10**7, 1)
    assert fz["checked"] == 10**7
    assert _zero(fz, "failures", "trace_violations", "variant_mismatches")
    # named hard cases, asserted directly as well
    assert divider.udivmod64(2**63, U64) == (0, 2**63)
    assert divider.udivmod64_branching(2**63, U64) == (0, 2**63)
    for a in (0, 1, 2**63 - 1, 2**63, U64):
        for b in (1, 2**63, 2**63 + 1, U64):
            assert divider.udivmod64(a, b) == divmod(a, b)
            assert divider.udivmod64_branching(a, b) == divmod(a, b)
    _line(2, "64-bit oracle equivalence, both variants",
          "corners %d + fuzz %d pairs, 0 mismatches"
          % (corner["checked"], fz["checked"]))


def test_criterion_3_reciprocal_error_bound():
    checked = 0
    worst = Fraction(0)
    for b in range(1, 10**6 + 1):
        rec = verify.audit_recip_error(b)
        assert rec.passed, b
        worst = max(worst, rec.measured)
        checked += 1
    for k in range(64):
        for b in ((1 << k) - 1, 1 << k, (1 << k) + 1):
            if 1 <= b <= U64:
                rec = verify.audit_recip_error(b)
                assert rec.passed, b
                worst = max(worst, rec.measured)
                checked += 1
    state = 2026
    for _ in range(10**6):
        state, w = verify._sm64(state)
        b = w or 1
        rec = verify.audit_recip_error(b)
        assert rec.passed, b
        worst = max(worst, rec.measured)
        checked += 1
    frac = float(worst / verify.RECIP_REL_BOUND)
    _line(3, "reciprocal relative error < 1049*2^-56",
          "%d divisors audited exactly, worst at %.4f of the bound"
          % (checked, frac))


def test_criterion_4_r1_magnitude_bound():
    be = active_backend()
    scan = be.r1_scan(4 * 10**6, 7)
    assert scan["checked"] >= 10**6
    assert scan["r1_checked"] >= 10**6
    assert _zero(scan, "failures", "r1_violations",
                 "r1_sufficiency_violations")
    assert scan["max_abs_r1"] <= 44 * 10**11
    _line(4, "|r1| <= 44e11 for 2 <= b <= 2^42",
          "%d boundary-biased pairs, max |r1| = %d (%.1f%% of bound)"
          % (scan["r1_checked"], scan["max_abs_r1"],
             100.0 * scan["max_abs_r1"] / (44 * 10**11)))


def test_criterion_5_adjustment_sets():
    be = active_backend()
    # trace_violations counts q0 outside {q, q+1} (32- and 64-bit) and
    # r2 outside [-b, b) for the main 64-bit path
    total = 0
    for summary in (be.fuzz32(5 * 10**6, 3), be.fuzz64(5 * 10**6, 3),
                    be.sweep_rect64(1500, 1500), be.sweep_rect32(1500, 1500)):
        assert _zero(summary, "failures", "trace_violations"), summary
        total += summary["checked"]
    _line(5, "q0 in {q, q+1}; r2 in [-b, b)",
          "%d traced divisions, 0 violations" % total)


def test_criterion_6_signed_semantics():
    be = active_backend()
    s32 = be.fuzz_s32(10**6, 11)
    s64 = be.fuzz_s64(10**6, 11)
    for s in (s32, s64):
        assert s["checked"] == 10**6
        assert _zero(s, "failures", "wrap_mismatches"), s
    # every sign combination and the wrap case, asserted directly
    assert divider.sdivmod32(-7, 2) == (-3, -1)
    assert divider.sdivmod32(7, -2) == (-3, 1)
    assert divider.sdivmod32(-7, -2) == (3, -1)
    assert divider.sdivmod32(7, 2) == (3, 1)
    assert divider.sdivmod32(-(2**31), -1) == (-(2**31), 0)
    assert divider.sdivmod64(-(2**63), -1) == (-(2**63), 0)
    bad = [p for p in verify.signed_corner_pairs(64) if p[1] != 0
           and not verify.check_pair(p[0], p[1], 64, signed_=True)["pass"]]
    assert not bad, bad[:3]
    _line(6, "signed truncation semantics incl. MIN/-1",
          "%d fuzz pairs per width + corner pairs, 0 mismatches"
          % s64["checked"])


def test_criterion_7_fp_kernel_conformance():
    rep = verify.fp_kernel_conformance(10**6, seed=1)
    bad = {k: v for k, v in rep.items() if v["mismatches"]}
    assert not bad, bad
    ops = len(rep)
    _line(7, "fp_kernel vs exact rational rounding",
          "%d ops x 1e6 tuples, 0 mismatches" % ops)


def test_criterion_8_bench_checksums_and_speedup():
    records = bench.run_suite(count=10000, reps=bench.DEFAULT_REPS)
    by = {(r.workload, r.method, r.unroll): r for r in records}
    fp = by[("u64-var-b", "fp", 1)]
    loop = by[("u64-var-b", "loop", 1)]
    assert fp.checksum == loop.checksum
    speedup = loop.best_ns / fp.best_ns
    # soft gate: the fp path must beat the 64-step loop baseline on the
    # 64-bit varying-divisor workload
    assert speedup > 1.0, "fp not faster than loop: %.2fx" % speedup
    _line(8, "bench checksums equal, fp vs loop speedup",
          "4 workloads x 2 unrolls x 3 methods, speedup %.1fx "
          "(fp %d ns vs loop %d ns per 10k)"
          % (speedup, fp.best_ns, loop.best_ns))


def _run_cli(*argv):
    res = subprocess.run([sys.executable, "-m", "fpdiv"] + list(argv),
                         capture_output=True)
    return res.returncode, res.stdout


def test_criterion_9_deterministic_outputs():
    runs = [
        ("verify", "--width", "32", "--count", "200000"),
        ("verify", "--signed", "--count", "200000"),
        ("fuzz", "--count", "1000000", "--seed", "3"),
        ("fuzz", "--width", "32", "--count", "500000", "--format", "json"),
        ("audit", "--count", "50000"),
        ("audit", "--count", "20000", "--format", "json"),
    ]
    for argv in runs:
        rc1, out1 = _run_cli(*argv)
        rc2, out2 = _run_cli(*argv)
        assert rc1 == rc2 == 0, (argv, rc1, rc2)
        assert out1 == out2, argv
        assert out1
    _line(9, "verify/fuzz/audit determinism",
          "%d flag sets, byte-identical across paired runs" % len(runs))
