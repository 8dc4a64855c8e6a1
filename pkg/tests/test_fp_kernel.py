"""Scalar floating-point primitive tests.

Non-obvious expected values below are frozen outputs of the exact-rational
rounding oracle in fpdiv.verify (computed once, pasted as literals), so the
implementation and the oracle are never compared against themselves.
"""

import math
import struct

import pytest

from fpdiv import fp_kernel, verify


def test_f64_bits_roundtrip():
    for x in [0.0, -0.0, 1.0, -1.5, 2.0**-1074, math.inf, -math.inf]:
        assert fp_kernel.f64_from_bits(fp_kernel.f64_bits(x)) == x or \
            math.copysign(1.0, x) == math.copysign(
                1.0, fp_kernel.f64_from_bits(fp_kernel.f64_bits(x)))
    w = fp_kernel.f64_bits(float("nan"))
    assert math.isnan(fp_kernel.f64_from_bits(w))
    assert fp_kernel.f64_bits(-0.0) == 1 << 63


def test_f32_bits_roundtrip():
    for w in [0x00000000, 0x80000000, 0x3F800000, 0x3EAAAAAB, 0x7F7FFFFF,
              0x00000001, 0x7F800000]:
        assert fp_kernel.f32_bits(fp_kernel.f32_from_bits(w)) == w


def test_f32_bits_rejects_unrepresentable():
    with pytest.raises(ValueError):
        fp_kernel.f32_bits(1 + 2.0**-30)


def test_f64_of_u64(backend):
    assert fp_kernel.f64_of_u64(1) == 1.0
    assert fp_kernel.f64_of_u64(0) == 0.0
    # ties-to-even at the 53-bit boundary; top of range rounds up
    assert fp_kernel.f64_of_u64(2**53 + 1) == 2.0**53
    assert fp_kernel.f64_of_u64(2**53 + 3) == 2.0**53 + 4
    assert fp_kernel.f64_of_u64(2**64 - 1) == 2.0**64
    for x in range(0, 2**53, 2**49 + 12345):
        assert fp_kernel.f64_of_u64(x) == x


def test_f64_of_i64(backend):
    assert fp_kernel.f64_of_i64(-1) == -1.0
    v = fp_kernel.f64_of_i64(0)
    assert v == 0.0 and math.copysign(1.0, v) == 1.0
    assert fp_kernel.f64_of_i64(-(2**53 + 1)) == -(2.0**53)
    assert fp_kernel.f64_of_i64(-(2**63)) == -(2.0**63)


def test_u64_of_f64_rn(backend):
    assert fp_kernel.u64_of_f64_rn(2.5) == 2
    assert fp_kernel.u64_of_f64_rn(3.5) == 4
    assert fp_kernel.u64_of_f64_rn(0.49) == 0
    assert fp_kernel.u64_of_f64_rn(-7.0) == 0
    assert fp_kernel.u64_of_f64_rn(2.0**64) == 2**64 - 1
    assert fp_kernel.u64_of_f64_rn(2.0**63) == 2**63


def test_i64_of_f64_rn(backend):
    assert fp_kernel.i64_of_f64_rn(-2.5) == -2
    assert fp_kernel.i64_of_f64_rn(0.49) == 0
    assert fp_kernel.i64_of_f64_rn(2.0**64) == 2**63 - 1
    assert fp_kernel.i64_of_f64_rn(-(2.0**64)) == -(2**63)


def test_int_conversions_are_total(backend):
    # no input may raise; saturation endpoints and NaN -> 0
    ugly = [float("nan"), math.inf, -math.inf, 1e300, -1e300,
            2.0**63, 2.0**64, -(2.0**70), 2.0**-1074, -0.0]
    for x in ugly:
        u = fp_kernel.u64_of_f64_rn(x)
        s = fp_kernel.i64_of_f64_rn(x)
        assert 0 <= u <= 2**64 - 1
        assert -(2**63) <= s <= 2**63 - 1
    assert fp_kernel.u64_of_f64_rn(float("nan")) == 0
    assert fp_kernel.i64_of_f64_rn(float("nan")) == 0
    assert fp_kernel.u64_of_f64_rn(math.inf) == 2**64 - 1
    assert fp_kernel.i64_of_f64_rn(-math.inf) == -(2**63)


def test_f32_of_f64(backend):
    assert fp_kernel.f32_of_f64(1.0) == 1.0
    assert fp_kernel.f32_of_f64(float(2**64 - 2**40)) == float(2**64 - 2**40)
    assert fp_kernel.f32_of_f64(1 + 2.0**-30) == 1.0
    # overflow beyond binary32 range is allowed to produce infinity
    assert fp_kernel.f32_of_f64(1e300) == math.inf
    assert fp_kernel.f32_of_f64(-1e300) == -math.inf


def test_f64_of_f32(backend):
    assert fp_kernel.f64_of_f32(0.5) == 0.5
    assert math.isnan(fp_kernel.f64_of_f32(float("nan")))
    for w in [0x3EAAAAAB, 0x00000001, 0x7F7FFFFF, 0x80000000]:
        x = fp_kernel.f32_from_bits(w)
        assert fp_kernel.f64_of_f32(x) == x


def test_widen_narrow_identity(backend):
    for w in [0x3F800000, 0x3EAAAAAB, 0x00000001, 0x7F7FFFFF, 0x3DCCCCCD]:
        x = fp_kernel.f32_from_bits(w)
        assert fp_kernel.f32_of_f64(fp_kernel.f64_of_f32(x)) == x


def test_recip32(backend):
    assert fp_kernel.recip32(2.0) == 0.5
    assert fp_kernel.recip32(2.0**64) == 2.0**-64
    # nearest binary32 to 1/3, bit pattern 0x3eaaaaab
    assert fp_kernel.f32_bits(fp_kernel.recip32(3.0)) == 0x3EAAAAAB
    assert fp_kernel.f32_bits(fp_kernel.recip32(10.0)) == 0x3DCCCCCD


def test_recip32_correctly_rounded_sample(backend):
    # against the rational oracle on structured and random-ish operands
    state = 0x1234
    for i in range(4000):
        state, w = verify._sm64(state)
        x = fp_kernel.f32_from_bits((w & 0x7F7FFFFF) | 0x00800000)
        assert verify._same_float(fp_kernel.recip32(x),
                                  verify.oracle_recip32(x)), x.hex()


def test_fma64(backend):
    assert fp_kernel.fma64(0.0, 1.0, 7.0) == 7.0
    assert fp_kernel.fma64(-3.0, 2.0**-2, 0.75) == 0.0
    # single rounding keeps the low product term; mul-then-add loses it
    x, y = 1 + 2.0**-30, 1 - 2.0**-30
    assert fp_kernel.fma64(x, y, -1.0) == -(2.0**-60)
    assert (x * y) + -1.0 == 0.0


def test_mul64(backend):
    assert fp_kernel.mul64(2.0, 0.5) == 1.0
    assert fp_kernel.mul64(float(2**53 - 1), 1.0) == float(2**53 - 1)
    # exact product of (1+2^-26)^2 fits in 53 bits, so no rounding occurs
    assert fp_kernel.mul64(1 + 2.0**-26, 1 + 2.0**-26) \
        == 1 + 2.0**-25 + 2.0**-52
    # one bit past the format: the sticky tail rounds away
    assert fp_kernel.mul64(1 + 2.0**-52, 1 + 2.0**-52) == 1 + 2.0**-51


def test_conformance_sample(backend):
    rep = verify.fp_kernel_conformance(3000, seed=99)
    assert all(v["mismatches"] == 0 for v in rep.values()), rep
