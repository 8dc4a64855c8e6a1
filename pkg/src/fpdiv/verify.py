"""Proof-surrogate checks: oracles, corner suites, exact-rational audits.

Nothing in this module shares code with the division paths.  The reference
quotient comes from Python's arbitrary-precision integer division; the
reference roundings come from `_round_rational`, an exact rational-to-float
rounder built on integer divmod.  Floating-point never enters any audit
comparison, so a pass here is evidence against both backends at once.

Testing is evidence, not proof: the bounds exercised below (reciprocal
relative error < 1049*2^-56, |r1| <= 44*10^11, the adjustment sets) hold
for *all* inputs by the original machine-checked proofs, while this module
can only sample.  The samplers are therefore biased toward the boundary
regions where each bound is tightest.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from fpdiv import divider, recip_refine
from fpdiv._backends import active_backend, get_backend
from fpdiv import fp_kernel

U32_MAX = 2**32 - 1
U64_MAX = 2**64 - 1
I64_MIN = -(2**63)
RECIP_REL_BOUND = Fraction(1049, 2**56)
R1_BOUND = 44 * 10**11
R1_SUFFICIENT = 342 * 10**11
B42 = 2**42

_F32 = (24, -126, 127)
_F64 = (53, -1022, 1023)


# ---------------------------------------------------------------------------
# Exact rational rounding oracle
# ---------------------------------------------------------------------------

def _round_rational(sign, num, den, fmt):
    """Nearest-even rounding of num/den (both positive) to a float format.

    fmt is (precision bits, min normal exponent, max exponent).  Returns a
    Python float; overflow saturates to infinity, underflow to (signed)
    zero.  All decisions are made with integer arithmetic.
    """
    prec, emin, emax = fmt
    if num == 0:
        return -0.0 if sign else 0.0
    # e such that 2^e <= num/den < 2^(e+1)
    e = num.bit_length() - den.bit_length()
    if e >= 0:
        if num < (den << e):
            e -= 1
    else:
        if (num << -e) < den:
            e -= 1
    # significand scale: normals keep prec bits, subnormals a fixed lsb
    if e < emin:
        shift = prec - 1 - emin
    else:
        shift = prec - 1 - e
    if shift >= 0:
        q, r = divmod(num << shift, den)
        d = den
    else:
        q, r = divmod(num, den << -shift)
        d = den << -shift
    if 2 * r > d or (2 * r == d and q & 1):
        q += 1
    if q == 0:
        return -0.0 if sign else 0.0
    lsb = (emin if e < emin else e) - (prec - 1)
    if q.bit_length() - 1 + lsb > emax:
        return -math.inf if sign else math.inf
    v = math.ldexp(q, lsb)
    return -v if sign else v


def _round_to_f64(sign, num, den):
    return _round_rational(sign, num, den, _F64)


def _round_to_f32(sign, num, den):
    return _round_rational(sign, num, den, _F32)


def _same_float(x, y):
    if math.isnan(x) or math.isnan(y):
        return math.isnan(x) and math.isnan(y)
    return x == y and math.copysign(1.0, x) == math.copysign(1.0, y)


# ---------------------------------------------------------------------------
# Per-operation oracles (criterion: every fp_kernel op is correctly rounded)
# ---------------------------------------------------------------------------

def oracle_f64_of_u64(x):
    return _round_to_f64(False, x, 1)


def oracle_f64_of_i64(x):
    return _round_to_f64(x < 0, abs(x), 1)


def _oracle_int_rn(x, lo, hi):
    if math.isnan(x):
        return 0
    if x == math.inf:
        return hi
    if x == -math.inf:
        return lo
    num, den = x.as_integer_ratio()
    q, r = divmod(num, den)
    if 2 * r > den or (2 * r == den and q & 1):
        q += 1
    return lo if q < lo else (hi if q > hi else q)


def oracle_u64_of_f64_rn(x):
    return _oracle_int_rn(x, 0, U64_MAX)


def oracle_i64_of_f64_rn(x):
    return _oracle_int_rn(x, I64_MIN, 2**63 - 1)


def oracle_f32_of_f64(x):
    if math.isnan(x) or math.isinf(x):
        return x
    num, den = x.as_integer_ratio()
    return _round_to_f32(num < 0, abs(num), den)


def oracle_f64_of_f32(x):
    return x


def oracle_recip32(x):
    if math.isnan(x):
        return x
    neg = math.copysign(1.0, x) < 0.0
    if x == 0.0:
        return -math.inf if neg else math.inf
    if math.isinf(x):
        return -0.0 if neg else 0.0
    num, den = x.as_integer_ratio()
    return _round_to_f32(neg, den, abs(num))


def oracle_mul64(x, y):
    if not (math.isfinite(x) and math.isfinite(y)):
        return x * y
    nx, dx = x.as_integer_ratio()
    ny, dy = y.as_integer_ratio()
    num = nx * ny
    if num == 0:
        # exact zero: sign is the xor of the operand signs
        neg = (math.copysign(1.0, x) < 0) != (math.copysign(1.0, y) < 0)
        return -0.0 if neg else 0.0
    return _round_to_f64(num < 0, abs(num), dx * dy)


def oracle_fma64(x, y, z):
    if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(z)):
        return x * y + z
    nx, dx = x.as_integer_ratio()
    ny, dy = y.as_integer_ratio()
    nz, dz = z.as_integer_ratio()
    num = nx * ny * dz + nz * dx * dy
    if num == 0:
        # product and addend cancel exactly (or are both zero); IEEE gives
        # -0 only when both contributions are negative zeros
        pneg = (math.copysign(1.0, x) < 0) != (math.copysign(1.0, y) < 0)
        zneg = math.copysign(1.0, z) < 0
        if x * y == 0.0 and z == 0.0 and pneg and zneg:
            return -0.0
        return 0.0
    return _round_to_f64(num < 0, abs(num), dx * dy * dz)


# ---------------------------------------------------------------------------
# Division oracle and pair checking
# ---------------------------------------------------------------------------

def oracle_divmod(a, b, width=64, signed_=False):
    """Reference quotient/remainder from integer arithmetic.

    Unsigned: floor semantics.  Signed: C truncation toward zero, with the
    documented wrap at MIN/-1.
    """
    if b == 0:
        raise ZeroDivisionError("division by zero")
    if not signed_:
        return divider.DivOutcome(a // b, a % b)
    vmin = -(1 << (width - 1))
    if a == vmin and b == -1:
        return divider.DivOutcome(vmin, 0)
    q = abs(a) // abs(b)
    if (a < 0) != (b < 0):
        q = -q
    return divider.DivOutcome(q, a - b * q)


def check_pair(a, b, width=64, signed_=False, variant="cmov"):
    """Run one division and report mismatches and invariant violations.

    Returns a dict report; a bad pair never raises.  variant selects the
    64-bit form: 'cmov', 'branching', or 'both'.
    """
    report = {"a": a, "b": b, "width": width, "signed": signed_,
              "variant": variant, "pass": True, "errors": []}

    def fail(msg):
        report["pass"] = False
        report["errors"].append(msg)

    if b == 0:
        fail("divisor is zero: input rejected")
        return report
    want = oracle_divmod(a, b, width, signed_)
    try:
        if signed_:
            got = (divider.sdivmod32(a, b) if width == 32
                   else divider.sdivmod64(a, b))
            if got != want:
                fail("signed mismatch: got %r want %r" % (got, want))
            return report
        if width == 32:
            tr = divider.udivmod32_trace(a, b)
            if tr.final != want:
                fail("mismatch: got %r want %r" % (tr.final, want))
            if tr.q0 not in (want.quotient, want.quotient + 1):
                fail("q0 outside {q, q+1}: %d" % tr.q0)
            if (tr.r0 < 0) != (tr.q0 == want.quotient + 1):
                fail("r0 sign does not match the adjustment")
            return report
        tr = divider.udivmod64_trace(a, b)
        br = divider.udivmod64_branching(a, b)
        if variant in ("cmov", "both") and tr.final != want:
            fail("mismatch: got %r want %r" % (tr.final, want))
        if variant in ("branching", "both") and br != want:
            fail("branching mismatch: got %r want %r" % (br, want))
        if br != tr.final:
            fail("variants disagree: %r vs %r" % (br, tr.final))
        if 2 <= b < 2**63:
            if tr.q0 not in (want.quotient, want.quotient + 1):
                fail("q0 outside {q, q+1}: %d" % tr.q0)
            if not (-b <= tr.r2 < b):
                fail("r2 outside [-b, b): %d" % tr.r2)
            if a - b * tr.q1 != tr.r1:
                fail("r1 is not exact: %d vs %d" % (tr.r1, a - b * tr.q1))
            if b <= B42 and abs(tr.r1) > R1_BOUND:
                fail("|r1| exceeds 44e11: %d" % tr.r1)
    except (ValueError, ZeroDivisionError) as exc:
        fail("raised %s: %s" % (type(exc).__name__, exc))
    return report


# ---------------------------------------------------------------------------
# Corner suite
# ---------------------------------------------------------------------------

def corner_suite(width):
    """Structured (a, b) pairs hitting every case boundary.

    Divisors cover the algorithm's case split (b=1, small b, the 2^42
    bound, the top-bit region) and both operands sweep +/-2 neighborhoods
    of every power of two; dividends additionally include multiples of b
    and their neighbors for small and maximal multipliers.
    """
    vmax = (1 << width) - 1
    half = 1 << (width - 1)
    if width == 64:
        bset = {1, 2, 3, 2**12 - 1, 2**32 - 1, 2**42, 2**42 + 1,
                2**63 - 1, 2**63, 2**63 + 1, 2**64 - 1}
    else:
        bset = {1, 2, 3, 2**12 - 1, 2**16 - 1, 2**31 - 1, 2**31,
                2**31 + 1, 2**32 - 1}
    ppts = set()
    for k in range(width):
        for d in (-2, -1, 0, 1, 2):
            v = (1 << k) + d
            if 0 <= v <= vmax:
                ppts.add(v)
    pairs = set()
    for b in bset:
        cands = {0, 1, b - 1, b, b + 1, 2 * b - 1, 2 * b, half, vmax}
        kmax = vmax // b
        for k in {1, 2, max(kmax - 1, 1), kmax}:
            for d in (-1, 0, 1):
                cands.add(k * b + d)
        for a in cands:
            if 0 <= a <= vmax:
                pairs.add((a, b))
    bpts = sorted(v for v in ppts if v >= 1)
    for b in bpts:
        for a in ppts:
            pairs.add((a, b))
    return sorted(pairs)


def signed_corner_pairs(width):
    """Signed pairs covering all sign combinations and the MIN/-1 case."""
    vmin = -(1 << (width - 1))
    vmax = (1 << (width - 1)) - 1
    mags = [1, 2, 3, 5, 7, 2**(width // 2) - 1, (1 << (width - 2)) + 1,
            vmax]
    pairs = set()
    for am in [0] + mags:
        for bm in mags:
            for sa in (1, -1):
                for sb in (1, -1):
                    pairs.add((sa * am, sb * bm))
    for b in (-1, 1, -2, 2, vmax, vmin):
        pairs.add((vmin, b))
        pairs.add((vmax, b))
        pairs.add((0, b))
    return sorted(pairs)


# ---------------------------------------------------------------------------
# Exact-rational audits of the proven bounds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AuditRecord:
    """One exact bound comparison: measured and bound never pass through
    floating-point."""

    label: str
    b: int
    a: int | None
    measured: Fraction
    bound: Fraction
    passed: bool


def _rel_error_vs_recip(value, b):
    # exact |value - 1/b| / (1/b) = |value*b - 1|
    num, den = value.as_integer_ratio()
    return Fraction(abs(num * b - den), den)


def audit_recip_error(b):
    """Exact relative error of the refined reciprocal against 1049*2^-56."""
    ap = recip_refine.approx_inv(b)
    measured = _rel_error_vs_recip(ap.invb, b)
    return AuditRecord(label="recip_rel_error", b=b, a=None,
                       measured=measured, bound=RECIP_REL_BOUND,
                       passed=measured < RECIP_REL_BOUND)


def recip_error_pair(b):
    """(coarse, refined) exact relative errors, for the contraction check."""
    ap = recip_refine.approx_inv(b)
    return (_rel_error_vs_recip(ap.invb0, b), _rel_error_vs_recip(ap.invb, b))


def audit_r1_bound(a, b):
    """Check the first-remainder magnitude bound for 2 <= b <= 2^42."""
    if not 2 <= b <= B42:
        raise ValueError("r1 bound applies to 2 <= b <= 2^42")
    tr = divider.udivmod64_trace(a, b)
    measured = Fraction(abs(tr.r1))
    return AuditRecord(label="r1_bound", b=b, a=a, measured=measured,
                       bound=Fraction(R1_BOUND),
                       passed=measured <= Fraction(R1_BOUND))


def audit_alpha(b):
    """Exact |alpha| against the coarse-step residual bound 2^-22 + 2^-40."""
    ap = recip_refine.approx_inv(b)
    num, den = ap.alpha.as_integer_ratio()
    measured = Fraction(abs(num), den)
    bound = Fraction(1, 2**22) + Fraction(1, 2**40)
    return AuditRecord(label="alpha_bound", b=b, a=None, measured=measured,
                       bound=bound, passed=measured <= bound)


def structured_divisors(width=64):
    """Divisors at and around every power of two, plus small ones."""
    vmax = (1 << width) - 1
    out = set(range(1, 4097))
    for k in range(width):
        for d in (-2, -1, 0, 1, 2):
            v = (1 << k) + d
            if 1 <= v <= vmax:
                out.add(v)
    out.update({B42, B42 + 1, B42 - 1, vmax, vmax - 1})
    return sorted(v for v in out if v <= vmax)


# ---------------------------------------------------------------------------
# Fuzzing
# ---------------------------------------------------------------------------

def fuzz(count, seed, width=64, signed_=False, backend=None):
    """Deterministic boundary-biased differential fuzz run.

    The pair stream interleaves four families (uniform, near powers of
    two, near multiples of the divisor, small divisor with large dividend)
    and is identical across backends for a given (count, seed).  Returns
    the driver summary plus the run parameters.
    """
    be = get_backend(backend) if backend else active_backend()
    if signed_:
        summary = be.fuzz_s32(count, seed) if width == 32 \
            else be.fuzz_s64(count, seed)
    else:
        summary = be.fuzz32(count, seed) if width == 32 \
            else be.fuzz64(count, seed)
    out = {"width": width, "signed": signed_, "count": count, "seed": seed,
           "backend": be.NAME}
    out.update(summary)
    return out


def fuzz_pairs(width, signed_, count, seed, backend=None):
    """The raw deterministic pair stream (for tests and inspection)."""
    be = get_backend(backend) if backend else active_backend()
    return be.fuzz_pairs(width, signed_, count, seed)


# ---------------------------------------------------------------------------
# fp_kernel conformance driver
# ---------------------------------------------------------------------------

def _sm64(state):
    state = (state + 0x9E3779B97F4A7C15) & U64_MAX
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & U64_MAX
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & U64_MAX
    return state, z ^ (z >> 31)


def _bits_to_f64(w):
    return fp_kernel.f64_from_bits(w)


def _bits_to_f32(w):
    return fp_kernel.f32_from_bits(w & U32_MAX)


def _finite_f64(w):
    v = _bits_to_f64(w)
    if not math.isfinite(v):
        v = float(w % 1000003) * 2.0**-30
    return v


def fp_kernel_ops():
    """(name, arity, operand maker, implementation, oracle) per operation."""
    k = fp_kernel
    return [
        ("f64_of_u64", 1, lambda w: w, k.f64_of_u64, oracle_f64_of_u64),
        ("f64_of_i64", 1, lambda w: w - 2**64 if w >= 2**63 else w,
         k.f64_of_i64, oracle_f64_of_i64),
        ("u64_of_f64_rn", 1, _bits_to_f64, k.u64_of_f64_rn,
         oracle_u64_of_f64_rn),
        ("i64_of_f64_rn", 1, _bits_to_f64, k.i64_of_f64_rn,
         oracle_i64_of_f64_rn),
        ("f32_of_f64", 1, _bits_to_f64, k.f32_of_f64, oracle_f32_of_f64),
        ("f64_of_f32", 1, _bits_to_f32, k.f64_of_f32, oracle_f64_of_f32),
        ("recip32", 1, _bits_to_f32, k.recip32, oracle_recip32),
        ("mul64", 2, _finite_f64, k.mul64, oracle_mul64),
        ("fma64", 3, _finite_f64, k.fma64, oracle_fma64),
    ]


def fp_kernel_conformance(count, seed):
    """Compare every fp_kernel operation against the rational oracle.

    Runs `count` random operand tuples per operation; returns
    {op: {count, mismatches, first}} with bit-level comparison (any NaN
    matches any NaN).
    """
    results = {}
    for name, arity, mk, impl, orc in fp_kernel_ops():
        state = seed & U64_MAX
        mism = 0
        first = None
        for _ in range(count):
            args = []
            for _ in range(arity):
                state, w = _sm64(state)
                args.append(mk(w))
            got = impl(*args)
            want = orc(*args)
            ok = _same_float(got, want) if isinstance(want, float) \
                else got == want
            if not ok:
                mism += 1
                if first is None:
                    first = (tuple(args), got, want)
        results[name] = {"count": count, "mismatches": mism, "first": first}
    return results


# ---------------------------------------------------------------------------
# Mutation smoke test of the invariant checker
# ---------------------------------------------------------------------------

def perturbed_div64_report(a, b, ulps=1):
    """Re-run the 64-bit sequence with invb nudged by `ulps` and check the
    trace invariants.  This tests the *checker*: a corrupted reciprocal
    must be flagged by at least one invariant for some input.
    """
    if not 2 <= b < 2**63:
        raise ValueError("perturbation test targets the main path")
    ap = recip_refine.approx_inv(b)
    bits = fp_kernel.f64_bits(ap.invb)
    invb = fp_kernel.f64_from_bits(bits + ulps)
    invb0 = ap.invb0
    k = fp_kernel
    q1 = k.u64_of_f64_rn(k.mul64(k.f64_of_u64(a), invb0))
    r1 = ((a - b * q1) + 2**63) % 2**64 - 2**63
    q2 = k.i64_of_f64_rn(k.mul64(k.f64_of_i64(r1), invb))
    r2 = ((r1 - b * q2) + 2**63) % 2**64 - 2**63
    q0 = (q1 + q2) & U64_MAX
    q = (q0 - 1) & U64_MAX if r2 < 0 else q0
    want_q = a // b
    report = {"a": a, "b": b, "ulps": ulps, "pass": True, "errors": []}
    if q != want_q:
        report["pass"] = False
        report["errors"].append("quotient wrong")
    if q0 not in (want_q, want_q + 1):
        report["pass"] = False
        report["errors"].append("q0 outside {q, q+1}")
    if not (-b <= r2 < b):
        report["pass"] = False
        report["errors"].append("r2 outside [-b, b)")
    return report
