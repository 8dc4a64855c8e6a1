"""Integer division computed with IEEE-754 floating-point arithmetic.

One coarse single-precision reciprocal, one fused-multiply-add refinement,
and an integer fix-up step yield exact 32- and 64-bit quotients.  The
package carries two interchangeable backends (a compiled extension and a
pure-Python model), an independent rational-arithmetic oracle for checking
them, a shift-subtract reference divider, and benchmark drivers.
"""

from fpdiv._backends import active_backend, available_backends, set_backend
from fpdiv.divider import (
    DivOutcome,
    Div32Trace,
    Div64Trace,
    SpecialCase,
    sdiv32,
    sdiv64,
    sdivmod32,
    sdivmod64,
    srem32,
    srem64,
    udiv32,
    udiv64,
    udivmod32,
    udivmod64,
    udivmod32_trace,
    udivmod64_trace,
    urem32,
    urem64,
)
from fpdiv.recip_refine import ReciprocalApprox, approx_inv

__version__ = "0.1.0"

__all__ = [
    "DivOutcome",
    "Div32Trace",
    "Div64Trace",
    "ReciprocalApprox",
    "SpecialCase",
    "active_backend",
    "approx_inv",
    "available_backends",
    "sdiv32",
    "sdiv64",
    "sdivmod32",
    "sdivmod64",
    "set_backend",
    "srem32",
    "srem64",
    "udiv32",
    "udiv64",
    "udivmod32",
    "udivmod64",
    "udivmod32_trace",
    "udivmod64_trace",
    "urem32",
    "urem64",
]
