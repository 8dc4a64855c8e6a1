"""Benchmark harness tests: workload shapes, checksums, rendering."""

import pytest

from fpdiv import bench


def test_catalog_shape():
    cat = bench.workload_catalog()
    assert len(cat) == 8
    ids = [w.id for w in cat]
    assert ids.count("u64-var-b") == 2
    assert {w.unroll for w in cat} == {1, 2}
    by_id = {(w.id, w.unroll): w for w in cat}
    w = by_id[("u64-var-b", 1)]
    assert (w.a0, w.da, w.b0, w.db, w.count) == (2**40, 222823, 2**12, 19,
                                                 10000)
    w = by_id[("u32-var-b", 2)]
    assert (w.a0, w.da, w.b0, w.db) == (2**24, 871, 2**12, 19)
    for wid in ("u64-fixed-b", "u32-fixed-b"):
        w = by_id[(wid, 1)]
        assert w.b0 == 74567 and w.db == 0
        assert w.invariant_divisor == 74567
    assert by_id[("u64-var-b", 1)].invariant_divisor is None


def test_workload_pairs():
    w = bench.Workload(id="t", width=64, a0=2**40, da=222823, b0=2**12,
                       db=19, count=5)
    pairs = w.pairs()
    assert pairs[0] == (2**40, 2**12)
    assert pairs[3] == (2**40 + 3 * 222823, 2**12 + 57)
    assert len(pairs) == 5
    w32 = bench.Workload(id="t32", width=32, a0=2**32 - 2, da=3, b0=7,
                         db=0, count=3)
    # operand stream wraps at the width
    assert w32.pairs()[1] == ((2**32 + 1) & (2**32 - 1), 7)


def test_run_bench_record(backend):
    wl = bench.workload_catalog(count=300)[0]
    rec = bench.run_bench(wl, "fp", reps=3, warmup=1)
    assert rec.workload == "u64-var-b" and rec.method == "fp"
    assert rec.count == 300 and rec.reps == 3
    assert rec.best_ns > 0
    assert 0 <= rec.checksum < 2**64


def test_checksums_agree_across_methods(backend):
    for wl in bench.workload_catalog(count=200):
        sums = {bench.run_bench(wl, m, reps=2, warmup=1).checksum
                for m in ("fp", "loop", "native")}
        assert len(sums) == 1, wl.id


def test_checksum_matches_direct_computation(backend):
    wl = bench.workload_catalog(count=150)[0]
    rec = bench.run_bench(wl, "native", reps=2, warmup=0)
    acc = 0
    for a, b in wl.pairs():
        acc = (acc + a // b) & (2**64 - 1)
    assert rec.checksum == acc


def test_unknown_method_rejected(backend):
    wl = bench.workload_catalog(count=10)[0]
    with pytest.raises(ValueError):
        bench.run_bench(wl, "simd")


def test_hoist_variant(backend):
    cat = bench.workload_catalog(count=200)
    fixed = next(w for w in cat if w.id == "u64-fixed-b" and w.unroll == 1)
    varying = next(w for w in cat if w.id == "u64-var-b")
    rec = bench.hoist_divisor_variant(fixed, reps=2, warmup=1)
    assert rec.workload == "u64-fixed-b+hoist"
    assert rec.method == "fp"
    assert rec.checksum == bench.run_bench(fixed, "fp", reps=2,
                                           warmup=0).checksum
    with pytest.raises(ValueError):
        bench.hoist_divisor_variant(varying)


def test_run_suite_and_csv(backend):
    records = bench.run_suite(count=120, reps=2, warmup=1)
    # 8 workloads x 3 methods + 4 hoisted fixed-divisor forms
    assert len(records) == 28
    text = bench.report(records, "csv")
    lines = text.strip().split("\n")
    assert lines[0] == "workload,width,method,unroll,count,reps,best_ns,checksum"
    assert len(lines) == 29
    first = lines[1].split(",")
    assert first[0] == "u64-var-b" and first[1] == "64"
    assert first[4] == "120" and first[5] == "2"
    int(first[6]), int(first[7])


def test_text_report_layout(backend):
    records = bench.run_suite(count=100, reps=2, warmup=0)
    text = bench.report(records, "text")
    assert "One quotient per iteration" in text
    assert "Two quotients per iteration" in text
    for col in ("Loop", "Floating-point", "Native"):
        assert col in text
    assert "u64-fixed-b+hoist" in text


def test_compare_backends():
    out = bench.compare_backends(count=400, reps=2, warmup=1)
    assert set(out) == set(
        __import__("fpdiv._backends", fromlist=["x"]).available_backends())
    assert all(v > 0 for v in out.values())
