"""Pure-Python backend with the same contract as the compiled core.

CPython float arithmetic is host binary64, so the double multiply and the
binary32 narrowing come straight from the hardware.  The two primitives
CPython does not expose are built here instead: the correctly rounded
binary32 reciprocal runs on integer arithmetic, and fma comes from libm via
ctypes when a witness test shows it is a real fused operation, with an
exact integer fallback otherwise.

Drivers (sweeps, fuzzing, benchmarks) mirror the compiled backend's
behaviour bit for bit, including the pseudo-random pair stream and the
summary dictionaries, so the two backends can be diffed directly.
"""

import ctypes
import ctypes.util
import math
import struct
import time

NAME = "pure"

M32 = 0xFFFFFFFF
M64 = 0xFFFFFFFFFFFFFFFF
TOP64 = 1 << 63
I64_MIN = -(1 << 63)
I64_MAX = (1 << 63) - 1
I32_MIN = -(1 << 31)
TWO63_F = 9223372036854775808.0
TWO64_F = 18446744073709551616.0
R1_BOUND = 44 * 10**11
R1_SUFFICIENT = 342 * 10**11
B42 = 1 << 42
_INF = math.inf


# ---------------------------------------------------------------------------
# Scalar IEEE-754 primitives
# ---------------------------------------------------------------------------

def f64_of_u64(x):
    # CPython int -> float conversion rounds to nearest, ties to even
    return float(x)


def f64_of_i64(x):
    return float(x)


def u64_of_f64_rn(x):
    # Total: NaN -> 0, below range -> 0, above range -> 2**64 - 1.
    if math.isnan(x):
        return 0
    if x >= TWO64_F:
        return M64
    if x <= -1.0:
        return 0
    r = round(x)
    return 0 if r < 0 else r


def i64_of_f64_rn(x):
    if math.isnan(x):
        return 0
    if x >= TWO63_F:
        return I64_MAX
    if x <= -TWO63_F:
        return I64_MIN
    return round(x)


def f32_of_f64(x):
    # CPython packs '<f' with the host narrowing cast and raises only when
    # a finite input lands on infinity, which is exactly the saturating
    # case wanted here.
    try:
        return struct.unpack("<f", struct.pack("<f", x))[0]
    except OverflowError:
        return math.copysign(_INF, x)


def f64_of_f32(x):
    return x


def mul64(x, y):
    return x * y


def _round_dyadic(sign, sig, exp, prec, lsb_min, emax):
    """Round sig * 2**exp (sig > 0) to a float format, nearest ties-even.

    prec: significand bits; lsb_min: weight of the last subnormal bit;
    emax: largest unbiased exponent.  Overflow saturates to infinity.
    """
    e_top = sig.bit_length() - 1 + exp
    if e_top < lsb_min + prec - 1:
        drop = lsb_min - exp
    else:
        drop = e_top - (prec - 1) - exp
    if drop > 0:
        low = sig & ((1 << drop) - 1)
        half = 1 << (drop - 1)
        sig >>= drop
        exp += drop
        if low > half or (low == half and (sig & 1)):
            sig += 1
    if sig == 0:
        return -0.0 if sign else 0.0
    if sig.bit_length() - 1 + exp > emax:
        return -_INF if sign else _INF
    v = math.ldexp(sig, exp)
    return -v if sign else v


def recip32(x):
    """Correctly rounded binary32 reciprocal via integer long division."""
    xf = f32_of_f64(x)
    if math.isnan(xf):
        return xf
    neg = math.copysign(1.0, xf) < 0.0
    ax = abs(xf)
    if ax == 0.0:
        return -_INF if neg else _INF
    if math.isinf(xf):
        return -0.0 if neg else 0.0
    m, e = math.frexp(ax)
    sig = int(m * (1 << 24))         # 24 bits: ax = sig * 2**(e - 24)
    # 1/ax = (2**64 / sig) * 2**(24 - e - 64); keep 40 guard bits and a
    # sticky bit so the final rounding sees every discarded digit
    q, rem = divmod(1 << 64, sig)
    num = (q << 1) | (1 if rem else 0)
    return _round_dyadic(neg, num, 24 - e - 64 - 1, 24, -149, 127)


def _soft_fma(x, y, z):
    # Exact integer evaluation of x*y + z, then one rounding.
    if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(z)):
        return x * y + z
    mx, dx = x.as_integer_ratio()
    my, dy = y.as_integer_ratio()
    mz, dz = z.as_integer_ratio()
    num = mx * my * dz + mz * dx * dy
    if num == 0:
        # exact cancellation: the host sum already has IEEE zero-sign rules
        return x * y + z
    scale = (dx * dy * dz).bit_length() - 1
    return _round_dyadic(num < 0, abs(num), -scale, 53, -1074, 1023)


def _fma_witnesses():
    # Each case gives 0.0 (or a wrong low bit) when computed as a rounded
    # multiply followed by an add.
    return [
        (1.0 + 2**-52, 1.0 + 2**-52, -(1.0 + 2**-51)),
        (1.0 + 2**-27, 1.0 - 2**-27, -1.0),
        (2**-1022, 2**-53, 2**-1074),
        (12345678901234567.0, 87654321098765432.0,
         -12345678901234567.0 * 87654321098765432.0),
    ]


def _probe_libm_fma():
    try:
        path = ctypes.util.find_library("m")
        libm = ctypes.CDLL(path) if path else ctypes.CDLL("libm.so.6")
        f = libm.fma
        f.restype = ctypes.c_double
        f.argtypes = (ctypes.c_double, ctypes.c_double, ctypes.c_double)
    except (OSError, AttributeError):
        return None
    for x, y, z in _fma_witnesses():
        if f(x, y, z) != _soft_fma(x, y, z):
            return None
    # random cross-check against the exact path
    state = 0x5D2B
    for _ in range(64):
        vals = []
        for _ in range(3):
            state, w = _sm64_next(state)
            v = struct.unpack("<d", struct.pack("<Q", w))[0]
            if not math.isfinite(v):
                v = float(w % 1000003) * 2.0**-30
            vals.append(v)
        got = f(*vals)
        want = _soft_fma(*vals)
        if got != want and not (math.isnan(got) and math.isnan(want)):
            return None
    return f


def _sm64_next(state):
    state = (state + 0x9E3779B97F4A7C15) & M64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M64
    return state, z ^ (z >> 31)


if hasattr(math, "fma"):
    _FMA = math.fma
    _fma_tier = "math"
else:
    _FMA = _probe_libm_fma()
    if _FMA is not None:
        _fma_tier = "libm"
    else:
        _FMA = _soft_fma
        _fma_tier = "soft"


def fma64(x, y, z):
    return _FMA(x, y, z)


# ---------------------------------------------------------------------------
# Reciprocal refinement
# ---------------------------------------------------------------------------

def recip_parts(b):
    bd = f64_of_u64(b)
    invb0 = recip32(bd)
    alpha = fma64(-bd, invb0, 1.0)
    invb = fma64(alpha, invb0, invb0)
    return (bd, invb0, alpha, invb)


# ---------------------------------------------------------------------------
# Division algorithms
# ---------------------------------------------------------------------------

def udivmod32_trace(a, b):
    bd, invb0, alpha, invb = recip_parts(b)
    qd = f64_of_u64(a) * invb
    q0 = u64_of_f64_rn(qd)
    r0 = a - b * q0
    if r0 < 0:
        return (q0 - 1, r0 + b, qd, q0, r0)
    return (q0, r0, qd, q0, r0)


def udivmod32(a, b):
    t = udivmod32_trace(a, b)
    return (t[0], t[1])


def _wrap_i64(v):
    v &= M64
    return v - (1 << 64) if v >= TOP64 else v


def udivmod64_trace(a, b):
    bd, invb0, alpha, invb = recip_parts(b)
    q1 = u64_of_f64_rn(f64_of_u64(a) * invb0)
    r1 = _wrap_i64(a - b * q1)
    q3d = f64_of_i64(r1) * invb
    q2 = i64_of_f64_rn(q3d)
    r2 = _wrap_i64(r1 - b * q2)
    q0 = (q1 + q2) & M64
    qmain = (q0 - 1) & M64 if r2 < 0 else q0
    q_top = 1 if a >= b else 0
    if b == 1:
        q, special = a, 1
    elif b >= TOP64:
        q, special = q_top, 2
    else:
        q, special = qmain, 0
    r = (a - b * q) & M64
    return (q, r, q1, r1, q2, q3d, r2, q0, special)


def udivmod64(a, b):
    t = udivmod64_trace(a, b)
    return (t[0], t[1])


def udivmod64_branching(a, b):
    if b == 1:
        return (a, 0)
    if b >= TOP64:
        q = 1 if a >= b else 0
        return (q, a - b * q)
    bd, invb0, alpha, invb = recip_parts(b)
    q1 = u64_of_f64_rn(f64_of_u64(a) * invb0)
    r1 = _wrap_i64(a - b * q1)
    q2 = i64_of_f64_rn(f64_of_i64(r1) * invb)
    r2 = _wrap_i64(r1 - b * q2)
    q = (q1 + q2) & M64
    if r2 < 0:
        q = (q - 1) & M64
    return (q, (a - b * q) & M64)


def sdivmod32(a, b):
    ua = -a if a < 0 else a
    ub = -b if b < 0 else b
    q, r = udivmod32(ua & M32, ub & M32)
    if (a < 0) != (b < 0):
        q = -q
    if a < 0:
        r = -r
    # wrap MIN / -1 back into range, matching two's-complement negation
    if q == 1 << 31:
        q = I32_MIN
    return (q, r)


def sdivmod64(a, b):
    ua = -a if a < 0 else a
    ub = -b if b < 0 else b
    q, r = udivmod64(ua & M64, ub & M64)
    if (a < 0) != (b < 0):
        q = -q
    if a < 0:
        r = -r
    if q == 1 << 63:
        q = I64_MIN
    return (q, r)


# ---------------------------------------------------------------------------
# Loop baseline: restoring shift-subtract, fixed trip count
# ---------------------------------------------------------------------------

def loop_udivmod32(a, b):
    rem = 0
    quo = 0
    steps = 0
    for i in range(31, -1, -1):
        rem = (rem << 1) | ((a >> i) & 1)
        if rem >= b:
            rem -= b
            quo |= 1 << i
        steps += 1
    return (quo, rem, steps)


def loop_udivmod64(a, b):
    rem = 0
    quo = 0
    steps = 0
    for i in range(63, -1, -1):
        rem = (rem << 1) | ((a >> i) & 1)
        if rem >= b:
            rem -= b
            quo |= 1 << i
        steps += 1
    return (quo, rem, steps)


# ---------------------------------------------------------------------------
# Deterministic pseudo-random stream (splitmix64)
# ---------------------------------------------------------------------------

def _gen_pair(i, state, width):
    M = M64 if width == 64 else M32
    state, r1 = _sm64_next(state)
    state, r2 = _sm64_next(state)
    mode = i & 3
    if mode == 0:
        a = r1 & M
        b = r2 & M
    elif mode == 1:
        ka = r1 % width
        kb = r2 % width
        a = ((1 << ka) + ((r1 >> 8) % 5) - 2) & M
        b = ((1 << kb) + ((r2 >> 8) % 5) - 2) & M
    elif mode == 2:
        b = r1 & M
        if b == 0:
            b = 1
        if b == 1:
            k = r2 & M
        else:
            k = r2 % (M // b + 1)
        a = (k * b + ((r2 >> 32) % 3) - 1) & M
    else:
        b = (r1 % 4096) + 1
        a = (M - (r2 % (1 << (width >> 1)))) & M
    if b == 0:
        b = 1
    return state, a, b


def _gen_spair(i, state, width):
    state, au, bu = _gen_pair(i, state, width)
    half = 1 << (width - 1)
    full = 1 << width
    a = au - full if au >= half else au
    b = bu - full if bu >= half else bu
    vmin = -half
    if b == 0:
        b = 1
    j = i & 15
    if j == 5:
        b = -1
    elif j == 9:
        a = vmin
    elif j == 13:
        a = vmin
        b = -1
    return state, a, b


def fuzz_pairs(width, signed_, count, seed):
    """First `count` pairs of the deterministic fuzz stream, as a list."""
    state = seed & M64
    out = []
    for i in range(count):
        if signed_:
            state, a, b = _gen_spair(i, state, width)
        else:
            state, a, b = _gen_pair(i, state, width)
        out.append((a, b))
    return out


# ---------------------------------------------------------------------------
# Checking drivers
# ---------------------------------------------------------------------------

class _Tally:
    __slots__ = (
        "checked", "failures", "first_failure", "trace_violations",
        "variant_mismatches", "r1_checked", "r1_violations",
        "r1_sufficiency_violations", "wrap_mismatches", "max_abs_r1",
    )

    def __init__(self):
        self.checked = 0
        self.failures = 0
        self.first_failure = None
        self.trace_violations = 0
        self.variant_mismatches = 0
        self.r1_checked = 0
        self.r1_violations = 0
        self.r1_sufficiency_violations = 0
        self.wrap_mismatches = 0
        self.max_abs_r1 = 0

    def flag(self, a, b, kind):
        if self.first_failure is None:
            self.first_failure = (a, b, kind)

    def as_dict(self):
        return {
            "checked": self.checked,
            "failures": self.failures,
            "first_failure": self.first_failure,
            "trace_violations": self.trace_violations,
            "variant_mismatches": self.variant_mismatches,
            "r1_checked": self.r1_checked,
            "r1_violations": self.r1_violations,
            "r1_sufficiency_violations": self.r1_sufficiency_violations,
            "wrap_mismatches": self.wrap_mismatches,
            "max_abs_r1": self.max_abs_r1,
        }


def _check32(a, b, oq, orr, s):
    q, r, qd, q0, r0 = udivmod32_trace(a, b)
    s.checked += 1
    if q != oq:
        s.failures += 1
        s.flag(a, b, "quotient")
        return
    if r != orr:
        s.failures += 1
        s.flag(a, b, "remainder")
        return
    if q0 != oq and q0 != oq + 1:
        s.trace_violations += 1
        s.flag(a, b, "trace_q0")
    if (r0 < 0) != (q0 == oq + 1):
        s.trace_violations += 1
        s.flag(a, b, "trace_r0")


def _check64(a, b, oq, orr, s):
    q, r, q1, r1, q2, q3d, r2, q0, special = udivmod64_trace(a, b)
    qb, rb = udivmod64_branching(a, b)
    s.checked += 1
    if q != oq:
        s.failures += 1
        s.flag(a, b, "quotient")
        return
    if r != orr:
        s.failures += 1
        s.flag(a, b, "remainder")
        return
    if qb != q or rb != r:
        s.variant_mismatches += 1
        s.flag(a, b, "variant")
    if 2 <= b < TOP64:
        if q0 != oq and q0 != oq + 1:
            s.trace_violations += 1
            s.flag(a, b, "trace_q0")
        if r2 < -b or r2 >= b:
            s.trace_violations += 1
            s.flag(a, b, "trace_r2")
        if a - b * q1 != r1:
            # the wrapped first remainder must equal the exact value
            s.wrap_mismatches += 1
            s.flag(a, b, "r1_wrap")
        elif b <= B42:
            s.r1_checked += 1
            absr1 = -r1 if r1 < 0 else r1
            if absr1 > s.max_abs_r1:
                s.max_abs_r1 = absr1
            if absr1 > R1_BOUND:
                s.r1_violations += 1
                s.flag(a, b, "r1_bound")
            if absr1 > R1_SUFFICIENT:
                s.r1_sufficiency_violations += 1


def sweep_rect32(a_max, b_max):
    """Exhaustive (a, b) in [0, a_max] x [1, b_max], incremental oracle."""
    s = _Tally()
    for b in range(1, b_max + 1):
        eq = 0
        er = 0
        for a in range(a_max + 1):
            _check32(a, b, eq, er, s)
            er += 1
            if er == b:
                er = 0
                eq += 1
    return s.as_dict()


def sweep_rect64(a_max, b_max):
    s = _Tally()
    for b in range(1, b_max + 1):
        eq = 0
        er = 0
        for a in range(a_max + 1):
            _check64(a, b, eq, er, s)
            er += 1
            if er == b:
                er = 0
                eq += 1
    return s.as_dict()


def sweep_range32(b, a_start, count):
    """Check `count` consecutive dividends starting at a_start (32-bit)."""
    s = _Tally()
    eq, er = divmod(a_start, b)
    for i in range(count):
        _check32(a_start + i, b, eq, er, s)
        er += 1
        if er == b:
            er = 0
            eq += 1
    return s.as_dict()


def sweep_sampled32(b, count):
    """Check `count` dividends spread over [0, 2^32) by an odd stride."""
    s = _Tally()
    for i in range(count):
        a = (i * 2654435761) & M32
        _check32(a, b, a // b, a % b, s)
    return s.as_dict()


def run_pairs32(a_list, b_list):
    s = _Tally()
    for a, b in zip(a_list, b_list):
        _check32(a, b, a // b, a % b, s)
    return s.as_dict()


def run_pairs64(a_list, b_list):
    s = _Tally()
    for a, b in zip(a_list, b_list):
        _check64(a, b, a // b, a % b, s)
    return s.as_dict()


def fuzz32(count, seed):
    s = _Tally()
    state = seed & M64
    for i in range(count):
        state, a, b = _gen_pair(i, state, 32)
        _check32(a, b, a // b, a % b, s)
    return s.as_dict()


def fuzz64(count, seed):
    s = _Tally()
    state = seed & M64
    for i in range(count):
        state, a, b = _gen_pair(i, state, 64)
        _check64(a, b, a // b, a % b, s)
    return s.as_dict()


def _tdivmod(a, b):
    # C-style truncating division
    q = abs(a) // abs(b)
    if (a < 0) != (b < 0):
        q = -q
    return q, a - b * q


def _check_signed(a, b, vmin, divmod_fn, s):
    q, r = divmod_fn(a, b)
    s.checked += 1
    if a == vmin and b == -1:
        oq, orr = vmin, 0
    else:
        oq, orr = _tdivmod(a, b)
    if q != oq:
        s.failures += 1
        s.flag(a, b, "quotient")
    elif r != orr:
        s.failures += 1
        s.flag(a, b, "remainder")


def fuzz_s32(count, seed):
    s = _Tally()
    state = seed & M64
    for i in range(count):
        state, a, b = _gen_spair(i, state, 32)
        _check_signed(a, b, I32_MIN, sdivmod32, s)
    return s.as_dict()


def fuzz_s64(count, seed):
    s = _Tally()
    state = seed & M64
    for i in range(count):
        state, a, b = _gen_spair(i, state, 64)
        _check_signed(a, b, I64_MIN, sdivmod64, s)
    return s.as_dict()


def r1_scan(count, seed):
    """Boundary-biased pairs with 2 <= b <= 2^42; audits the first-remainder
    magnitude bound on every pair."""
    s = _Tally()
    state = seed & M64
    for i in range(count):
        state, r1 = _sm64_next(state)
        state, r2 = _sm64_next(state)
        mode = i & 3
        if mode == 0:
            b = 2 + (r1 % (B42 - 1))
        elif mode == 1:
            k = r1 % 42
            b = ((1 << (k + 1)) + ((r1 >> 8) % 5) - 2) & M64
        elif mode == 2:
            b = 2 + (r1 % 64)
        else:
            b = B42 - (r1 % 4096)
        if b < 2:
            b = 2
        if b > B42:
            b = B42
        amode = (i >> 2) & 3
        if amode == 0:
            a = r2
        elif amode == 1:
            a = M64 - (r2 % 65536)
        elif amode == 2:
            a = r2 % (1 << 52)
        else:
            k = r2 % (M64 // b + 1)
            a = (k * b + ((r2 >> 40) % 3) - 1) & M64
        _check64(a, b, a // b, a % b, s)
    return s.as_dict()


# ---------------------------------------------------------------------------
# Benchmark loops
# ---------------------------------------------------------------------------

def _fp_div64_hoisted(a, b, invb0, invb):
    q1 = u64_of_f64_rn(f64_of_u64(a) * invb0)
    r1 = _wrap_i64(a - b * q1)
    q2 = i64_of_f64_rn(f64_of_i64(r1) * invb)
    r2 = _wrap_i64(r1 - b * q2)
    q = (q1 + q2) & M64
    if r2 < 0:
        q = (q - 1) & M64
    if b == 1:
        return a
    if b >= TOP64:
        return 1 if a >= b else 0
    return q


def _fp_div32_hoisted(a, b, invb):
    q0 = u64_of_f64_rn(f64_of_u64(a) * invb)
    r0 = a - b * q0
    return (q0 - 1) & M32 if r0 < 0 else q0 & M32


def bench_run(width, method, unroll, hoist, a0, da, b0, db, count):
    """Time one pass over an affine workload; returns (elapsed_ns, checksum).

    method: 0 = fp, 1 = loop, 2 = native.  Operand generation happens
    before the clock starts; the timed region only divides and keeps a
    wrapping checksum of quotients.
    """
    if width == 64:
        aa = [(a0 + da * k) & M64 for k in range(count)]
        bb = [(b0 + db * k) & M64 for k in range(count)]
    else:
        aa = [(a0 + da * k) & M64 & M32 for k in range(count)]
        bb = [(b0 + db * k) & M64 & M32 for k in range(count)]
    cs = 0
    if hoist:
        bd, invb0, alpha, invb = recip_parts(b0 if width == 64 else b0 & M32)
        one = _fp_div64_hoisted if width == 64 else _fp_div32_hoisted
        hb = b0 & (M64 if width == 64 else M32)
        t0 = time.perf_counter_ns()
        if width == 64:
            for a in aa:
                cs += one(a, hb, invb0, invb)
        else:
            for a in aa:
                cs += one(a, hb, invb)
        t1 = time.perf_counter_ns()
        return (t1 - t0, cs & M64)
    if method == 0:
        div = udivmod64 if width == 64 else udivmod32
        t0 = time.perf_counter_ns()
        for a, b in zip(aa, bb):
            cs += div(a, b)[0]
        t1 = time.perf_counter_ns()
    elif method == 1:
        div = loop_udivmod64 if width == 64 else loop_udivmod32
        t0 = time.perf_counter_ns()
        for a, b in zip(aa, bb):
            cs += div(a, b)[0]
        t1 = time.perf_counter_ns()
    else:
        t0 = time.perf_counter_ns()
        for a, b in zip(aa, bb):
            cs += a // b
        t1 = time.perf_counter_ns()
    return (t1 - t0, cs & M64)
