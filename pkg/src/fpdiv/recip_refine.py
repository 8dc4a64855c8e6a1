"""Reciprocal approximation of an integer divisor, coarse and refined.

The divisor is rounded to binary64, narrowed to binary32, and inverted with
the correctly rounded single-precision reciprocal, giving a ~23-bit
approximation invb0.  One fused-multiply-add refinement step

    alpha = fma(-bd, invb0, 1.0)
    invb  = fma(alpha, invb0, invb0)

doubles the accuracy to ~46 bits: the relative error of invb against the
exact 1/b stays below 1049 * 2^-56 for every nonzero 64-bit divisor.  The
audit machinery that demonstrates this bound lives in fpdiv.verify.
"""

from dataclasses import dataclass

from fpdiv._backends import active_backend

U64_MAX = 2**64 - 1


@dataclass(frozen=True)
class ReciprocalApprox:
    """All retained intermediates of the refinement, for auditability.

    Attributes:
        b: the integer divisor.
        bd: b rounded to binary64 (exact for b < 2^53).
        invb0: coarse reciprocal, widened from binary32.
        alpha: 1 - bd*invb0 computed by fma, the residual of the coarse step.
        invb: refined reciprocal, fma(alpha, invb0, invb0).
    """

    b: int
    bd: float
    invb0: float
    alpha: float
    invb: float


def _check_divisor(b):
    if b == 0:
        raise ZeroDivisionError("divisor is zero")
    if not 1 <= b <= U64_MAX:
        raise ValueError("divisor out of u64 range: %r" % (b,))


def approx_inv(b):
    """Refined reciprocal approximation of a nonzero u64 divisor."""
    _check_divisor(b)
    bd, invb0, alpha, invb = active_backend().recip_parts(b)
    return ReciprocalApprox(b=b, bd=bd, invb0=invb0, alpha=alpha, invb=invb)


def approx_inv_coarse(b):
    """Coarse (~23-bit) reciprocal only: the widened binary32 inverse."""
    _check_divisor(b)
    return active_backend().recip_parts(b)[1]
