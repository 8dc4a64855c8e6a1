"""Integer division computed with floating-point arithmetic.

32-bit unsigned path: one rounded multiply by the refined reciprocal gives
a quotient estimate within 1/2 of a/b, so after round-to-nearest the
estimate q0 is floor(a/b) or floor(a/b)+1.  The sign of the integer
remainder r0 = a - b*q0 picks the answer.

64-bit unsigned path: a first quotient estimate from the coarse reciprocal
leaves a remainder r1 that fits comfortably in a signed 64-bit integer; a
second estimate of r1/b from the refined reciprocal then lands within one
of the true quotient, and a final remainder sign check adjusts.  Divisors
b = 1 and b >= 2^63 are decided separately (quotient a, and a >= b,
respectively).  The main form computes everything unconditionally and picks
results by data-flow selection, mirroring a conditional-move lowering with
no data-dependent branches; `udivmod64_branching` is the variant that
branches out early instead so float->int conversions only ever see
in-range inputs.

Signed division calls the unsigned path on magnitudes and fixes signs,
truncating toward zero (C semantics).  The overflow case MIN/-1, undefined
in C, is defined here to wrap: quotient MIN, remainder 0.

No integer divide or modulo instruction appears in any path; the only
division anywhere is the single-precision reciprocal.
"""

import enum
from dataclasses import dataclass
from typing import NamedTuple

from fpdiv._backends import active_backend

U32_MAX = 2**32 - 1
U64_MAX = 2**64 - 1
I32_MIN = -(2**31)
I32_MAX = 2**31 - 1
I64_MIN = -(2**63)
I64_MAX = 2**63 - 1


class DivOutcome(NamedTuple):
    quotient: int
    remainder: int


class SpecialCase(enum.Enum):
    NONE = "none"
    B_IS_ONE = "b_is_one"
    B_TOP_BIT = "b_top_bit"


@dataclass(frozen=True)
class Div32Trace:
    """Intermediates of the 32-bit path.

    qd is the floating-point quotient estimate, q0 its rounding, r0 the
    signed remainder before adjustment; q0 is floor(a/b) or floor(a/b)+1
    and r0 < 0 exactly in the latter case.
    """

    qd: float
    q0: int
    r0: int
    final: DivOutcome


@dataclass(frozen=True)
class Div64Trace:
    """Intermediates of the 64-bit path (main path values are always
    computed, even when a special case decides the result)."""

    q1: int
    r1: int
    q2: int
    q3d: float
    r2: int
    q0: int
    special_case: SpecialCase
    final: DivOutcome


_SPECIALS = {0: SpecialCase.NONE, 1: SpecialCase.B_IS_ONE,
             2: SpecialCase.B_TOP_BIT}


def _check_u(a, b, vmax):
    if not 0 <= a <= vmax:
        raise ValueError("dividend out of range: %r" % (a,))
    if b == 0:
        raise ZeroDivisionError("division by zero")
    if not 1 <= b <= vmax:
        raise ValueError("divisor out of range: %r" % (b,))


def _check_s(a, b, vmin, vmax):
    if not vmin <= a <= vmax:
        raise ValueError("dividend out of range: %r" % (a,))
    if b == 0:
        raise ZeroDivisionError("division by zero")
    if not vmin <= b <= vmax:
        raise ValueError("divisor out of range: %r" % (b,))


def udivmod32(a, b):
    """Unsigned 32-bit quotient and remainder."""
    _check_u(a, b, U32_MAX)
    q, r = active_backend().udivmod32(a, b)
    return DivOutcome(q, r)


def udivmod32_trace(a, b):
    """Unsigned 32-bit division with all intermediates."""
    _check_u(a, b, U32_MAX)
    q, r, qd, q0, r0 = active_backend().udivmod32_trace(a, b)
    return Div32Trace(qd=qd, q0=q0, r0=r0, final=DivOutcome(q, r))


def udivmod64(a, b):
    """Unsigned 64-bit quotient and remainder (selection form)."""
    _check_u(a, b, U64_MAX)
    q, r = active_backend().udivmod64(a, b)
    return DivOutcome(q, r)


def udivmod64_trace(a, b):
    """Unsigned 64-bit division with all intermediates."""
    _check_u(a, b, U64_MAX)
    q, r, q1, r1, q2, q3d, r2, q0, sp = active_backend().udivmod64_trace(a, b)
    return Div64Trace(q1=q1, r1=r1, q2=q2, q3d=q3d, r2=r2, q0=q0,
                      special_case=_SPECIALS[sp], final=DivOutcome(q, r))


def udivmod64_branching(a, b):
    """Unsigned 64-bit division, early-branching variant.

    Bit-for-bit the same results as udivmod64; the conversions run only on
    inputs whose rounded value is in range, so the saturation contract of
    the conversions is never exercised.
    """
    _check_u(a, b, U64_MAX)
    q, r = active_backend().udivmod64_branching(a, b)
    return DivOutcome(q, r)


def sdivmod32(a, b):
    """Signed 32-bit division, truncating; MIN/-1 wraps to (MIN, 0)."""
    _check_s(a, b, I32_MIN, I32_MAX)
    q, r = active_backend().sdivmod32(a, b)
    return DivOutcome(q, r)


def sdivmod64(a, b):
    """Signed 64-bit division, truncating; MIN/-1 wraps to (MIN, 0)."""
    _check_s(a, b, I64_MIN, I64_MAX)
    q, r = active_backend().sdivmod64(a, b)
    return DivOutcome(q, r)


def udiv32(a, b):
    return udivmod32(a, b).quotient


def urem32(a, b):
    return udivmod32(a, b).remainder


def udiv64(a, b):
    return udivmod64(a, b).quotient


def urem64(a, b):
    return udivmod64(a, b).remainder


def sdiv32(a, b):
    return sdivmod32(a, b).quotient


def srem32(a, b):
    return sdivmod32(a, b).remainder


def sdiv64(a, b):
    return sdivmod64(a, b).quotient


def srem64(a, b):
    return sdivmod64(a, b).remainder
