"""Restoring shift-subtract division, the benchmark baseline.

One quotient bit per iteration, most significant first, with a fixed trip
count (32 or 64) regardless of operand values.  This mirrors the structure
of bit-serial hardware division loops and serves as the slow reference the
floating-point path is measured against.
"""

from fpdiv._backends import active_backend
from fpdiv.divider import DivOutcome

U32_MAX = 2**32 - 1
U64_MAX = 2**64 - 1


def _check(a, b, vmax):
    if not 0 <= a <= vmax:
        raise ValueError("dividend out of range: %r" % (a,))
    if b == 0:
        raise ZeroDivisionError("division by zero")
    if not 1 <= b <= vmax:
        raise ValueError("divisor out of range: %r" % (b,))


def loop_udivmod32(a, b):
    _check(a, b, U32_MAX)
    q, r, _ = active_backend().loop_udivmod32(a, b)
    return DivOutcome(q, r)


def loop_udivmod64(a, b):
    _check(a, b, U64_MAX)
    q, r, _ = active_backend().loop_udivmod64(a, b)
    return DivOutcome(q, r)


def loop_udivmod32_steps(a, b):
    """Division result plus the iteration count (always 32)."""
    _check(a, b, U32_MAX)
    q, r, steps = active_backend().loop_udivmod32(a, b)
    return DivOutcome(q, r), steps


def loop_udivmod64_steps(a, b):
    """Division result plus the iteration count (always 64)."""
    _check(a, b, U64_MAX)
    q, r, steps = active_backend().loop_udivmod64(a, b)
    return DivOutcome(q, r), steps
