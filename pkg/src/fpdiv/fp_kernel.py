"""IEEE-754 primitive operations, round-to-nearest ties-to-even only.

This is the exact operation set the division algorithms are built from:
integer <-> binary64 conversions, binary32 <-> binary64 conversions, a
correctly rounded binary32 reciprocal, a binary64 multiply, and a binary64
fused multiply-add.  Every operation is a pure value function; there is no
rounding-mode state and no exception flag state.

Float -> integer conversions are total: NaN maps to 0 and out-of-range
values saturate to the nearest endpoint.  That gives the conversions a
defined, testable result on every input instead of a trap.

Values travel as Python floats (binary64).  Binary32 values are binary64
values that happen to lie in the binary32 subset; `f32_bits`/`f32_from_bits`
convert between that representation and raw bit patterns.
"""

import struct

from fpdiv._backends import active_backend

U32_MAX = 2**32 - 1
U64_MAX = 2**64 - 1
I64_MIN = -(2**63)
I64_MAX = 2**63 - 1


def f64_bits(x):
    """Bit pattern of a binary64 value, as an unsigned integer."""
    return struct.unpack("<Q", struct.pack("<d", x))[0]


def f64_from_bits(bits):
    if not 0 <= bits <= U64_MAX:
        raise ValueError("binary64 bit pattern out of range")
    return struct.unpack("<d", struct.pack("<Q", bits))[0]


def f32_bits(x):
    """Bit pattern of a binary32 value held in a float.

    Raises ValueError if x is finite but not exactly representable in
    binary32, since silently re-rounding would hide a missing narrowing.
    """
    b = struct.pack("<f", float(x))
    if struct.unpack("<f", b)[0] != float(x) and float(x) == float(x):
        raise ValueError("value is not a binary32 value: %r" % (x,))
    return struct.unpack("<I", b)[0]


def f32_from_bits(bits):
    if not 0 <= bits <= U32_MAX:
        raise ValueError("binary32 bit pattern out of range")
    return struct.unpack("<f", struct.pack("<I", bits))[0]


def f64_of_u64(x):
    """Nearest binary64 to an unsigned 64-bit integer (exact below 2^53)."""
    if not 0 <= x <= U64_MAX:
        raise ValueError("u64 out of range: %r" % (x,))
    return active_backend().f64_of_u64(x)


def f64_of_i64(x):
    """Nearest binary64 to a signed 64-bit integer."""
    if not I64_MIN <= x <= I64_MAX:
        raise ValueError("i64 out of range: %r" % (x,))
    return active_backend().f64_of_i64(x)


def u64_of_f64_rn(x):
    """Nearest unsigned 64-bit integer, ties to even; total.

    NaN -> 0; values rounding below 0 -> 0; values at or above 2^64
    -> 2^64 - 1.
    """
    return active_backend().u64_of_f64_rn(float(x))


def i64_of_f64_rn(x):
    """Nearest signed 64-bit integer, ties to even; total, saturating."""
    return active_backend().i64_of_f64_rn(float(x))


def f32_of_f64(x):
    """Nearest binary32 to a binary64 value; overflow gives infinity."""
    return active_backend().f32_of_f64(float(x))


def f64_of_f32(x):
    """Exact widening; the identity on the binary32-in-float convention."""
    return active_backend().f64_of_f32(float(x))


def recip32(x):
    """Correctly rounded binary32 reciprocal of a binary32 value."""
    return active_backend().recip32(float(x))


def fma64(x, y, z):
    """round(x*y + z) with a single rounding."""
    return active_backend().fma64(float(x), float(y), float(z))


def mul64(x, y):
    """round(x*y)."""
    return active_backend().mul64(float(x), float(y))
