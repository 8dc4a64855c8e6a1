# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend: IEEE-754 scalar kernels, the division algorithms, and
bulk drivers (sweeps, fuzzing, benchmark loops) that run as C loops.

All floating-point work uses the host's IEEE-754 hardware in round-to-nearest,
ties-to-even: conversions, double multiply, fused multiply-add (libm fma) and
single-precision divide.  The rational-oracle test suite is the authority on
whether these really are correctly rounded on this host.
"""

from libc.stdint cimport int32_t, int64_t, uint32_t, uint64_t
from libc.stdlib cimport free, malloc

cdef extern from "math.h" nogil:
    double fma(double, double, double)
    long long llrint(double)

cdef extern from "time.h" nogil:
    ctypedef long time_t
    cdef struct timespec:
        time_t tv_sec
        long tv_nsec
    int clock_gettime(int clk_id, timespec *tp)
    int CLOCK_MONOTONIC

cdef extern from *:
    """
    #include <stdint.h>
    /* Exactness witness for the wrap-computed first remainder: recompute
       a - b*q1 in 128-bit arithmetic and compare with the 64-bit value. */
    static inline int fpdiv_r1_matches_exact(uint64_t a, uint64_t b,
                                             uint64_t q1, int64_t r1) {
        __int128 exact = (__int128)a - (__int128)b * (__int128)q1;
        return exact == (__int128)r1;
    }
    """
    int fpdiv_r1_matches_exact(uint64_t a, uint64_t b, uint64_t q1,
                               int64_t r1) nogil


NAME = "ext"

cdef uint64_t U64_MAX = <uint64_t>0xFFFFFFFFFFFFFFFF
cdef uint64_t TOP64 = (<uint64_t>1) << 63
cdef int64_t I64_MIN = <int64_t>((<uint64_t>1) << 63)
cdef int64_t I64_MAX = <int64_t>0x7FFFFFFFFFFFFFFF
cdef double TWO63 = 9223372036854775808.0
cdef double TWO64 = 18446744073709551616.0
cdef int64_t R1_BOUND = 4400000000000        # 44 * 10**11
cdef int64_t R1_SUFFICIENT = 34200000000000  # 342 * 10**11
cdef uint64_t B42 = (<uint64_t>1) << 42


# ---------------------------------------------------------------------------
# Scalar IEEE-754 primitives
# ---------------------------------------------------------------------------

cdef inline double c_f64_of_u64(uint64_t x) noexcept nogil:
    return <double>x


cdef inline double c_f64_of_i64(int64_t x) noexcept nogil:
    return <double>x


cdef inline uint64_t c_u64_of_f64_rn(double x) noexcept nogil:
    # Total: NaN -> 0, below range -> 0, above range -> UINT64_MAX.
    if x != x:
        return 0
    if x >= TWO64:
        return U64_MAX
    if x < 0.0:
        if x <= -TWO63:
            return 0
        if llrint(x) < 0:
            return 0
        return <uint64_t>llrint(x)
    if x >= TWO63:
        # x - 2^63 is exact here (both operands are >= 2^63-scale doubles)
        return (<uint64_t>llrint(x - TWO63)) + TOP64
    return <uint64_t>llrint(x)


cdef inline int64_t c_i64_of_f64_rn(double x) noexcept nogil:
    if x != x:
        return 0
    if x >= TWO63:
        return I64_MAX
    if x <= -TWO63:
        # -2^63 itself rounds to INT64_MIN, as does anything below range
        return I64_MIN
    return llrint(x)


cdef inline float c_f32_of_f64(double x) noexcept nogil:
    return <float>x


cdef inline double c_f64_of_f32(float x) noexcept nogil:
    return <double>x


cdef inline float c_recip32(float x) noexcept nogil:
    return (<float>1.0) / x


cdef inline double c_fma64(double x, double y, double z) noexcept nogil:
    return fma(x, y, z)


cdef inline double c_mul64(double x, double y) noexcept nogil:
    return x * y


def f64_of_u64(x):
    return c_f64_of_u64(<uint64_t>x)


def f64_of_i64(x):
    return c_f64_of_i64(<int64_t>x)


def u64_of_f64_rn(double x):
    return c_u64_of_f64_rn(x)


def i64_of_f64_rn(double x):
    return c_i64_of_f64_rn(x)


def f32_of_f64(double x):
    return c_f64_of_f32(c_f32_of_f64(x))


def f64_of_f32(double x):
    # Binary32 values travel as Python floats; widening is the identity.
    return x


def recip32(double x):
    return c_f64_of_f32(c_recip32(c_f32_of_f64(x)))


def fma64(double x, double y, double z):
    return c_fma64(x, y, z)


def mul64(double x, double y):
    return c_mul64(x, y)


# ---------------------------------------------------------------------------
# Reciprocal refinement
# ---------------------------------------------------------------------------

cdef inline void c_recip_parts(uint64_t b, double *bd, double *invb0,
                               double *alpha, double *invb) noexcept nogil:
    cdef float bs, rs
    bd[0] = c_f64_of_u64(b)
    bs = c_f32_of_f64(bd[0])
    rs = c_recip32(bs)
    invb0[0] = c_f64_of_f32(rs)
    alpha[0] = c_fma64(-bd[0], invb0[0], 1.0)
    invb[0] = c_fma64(alpha[0], invb0[0], invb0[0])


def recip_parts(b):
    cdef double bd, invb0, alpha, invb
    c_recip_parts(<uint64_t>b, &bd, &invb0, &alpha, &invb)
    return (bd, invb0, alpha, invb)


# ---------------------------------------------------------------------------
# Division algorithms
# ---------------------------------------------------------------------------

cdef struct D32:
    double qd
    uint64_t q0
    int64_t r0
    uint32_t q
    uint32_t r


cdef inline void c_udivmod32(uint32_t a, uint32_t b, D32 *t) noexcept nogil:
    cdef double bd, invb0, alpha, invb, ad
    cdef uint64_t q0
    cdef int64_t r0
    c_recip_parts(<uint64_t>b, &bd, &invb0, &alpha, &invb)
    ad = c_f64_of_u64(<uint64_t>a)
    t.qd = c_mul64(ad, invb)
    q0 = c_u64_of_f64_rn(t.qd)
    r0 = <int64_t>((<uint64_t>a) - (<uint64_t>b) * q0)
    t.q0 = q0
    t.r0 = r0
    t.q = <uint32_t>(q0 - 1 if r0 < 0 else q0)
    t.r = <uint32_t>(r0 + <int64_t>b if r0 < 0 else r0)


cdef struct D64:
    uint64_t q1
    int64_t r1
    int64_t q2
    double q3d
    int64_t r2
    uint64_t q0
    int special        # 0 none, 1 b == 1, 2 b >= 2^63
    uint64_t q
    uint64_t r


cdef inline void c_udivmod64(uint64_t a, uint64_t b, D64 *t) noexcept nogil:
    # Straight-line: every value below is computed unconditionally and the
    # result is picked by selects, mirroring a conditional-move lowering.
    cdef double bd, invb0, alpha, invb, ad, r1d
    cdef uint64_t q1, q0, qmain, q_top, q
    cdef int64_t r1, q2, r2
    c_recip_parts(b, &bd, &invb0, &alpha, &invb)
    ad = c_f64_of_u64(a)
    q1 = c_u64_of_f64_rn(c_mul64(ad, invb0))
    r1 = <int64_t>(a - b * q1)
    r1d = c_f64_of_i64(r1)
    t.q3d = c_mul64(r1d, invb)
    q2 = c_i64_of_f64_rn(t.q3d)
    r2 = <int64_t>((<uint64_t>r1) - b * (<uint64_t>q2))
    q0 = q1 + (<uint64_t>q2)
    qmain = q0 - 1 if r2 < 0 else q0
    q_top = 1 if a >= b else 0
    q = a if b == 1 else (q_top if b >= TOP64 else qmain)
    t.q1 = q1
    t.r1 = r1
    t.q2 = q2
    t.r2 = r2
    t.q0 = q0
    t.special = 1 if b == 1 else (2 if b >= TOP64 else 0)
    t.q = q
    t.r = a - b * q


cdef inline void c_udivmod64_br(uint64_t a, uint64_t b, uint64_t *q,
                                uint64_t *r) noexcept nogil:
    # Branching form: float->int conversions run only on in-range inputs.
    cdef double bd, invb0, alpha, invb, ad, r1d, q3d
    cdef uint64_t q1, q0, qq
    cdef int64_t r1, q2, r2
    if b == 1:
        q[0] = a
        r[0] = 0
        return
    if b >= TOP64:
        qq = 1 if a >= b else 0
        q[0] = qq
        r[0] = a - b * qq
        return
    c_recip_parts(b, &bd, &invb0, &alpha, &invb)
    ad = c_f64_of_u64(a)
    q1 = c_u64_of_f64_rn(c_mul64(ad, invb0))
    r1 = <int64_t>(a - b * q1)
    r1d = c_f64_of_i64(r1)
    q3d = c_mul64(r1d, invb)
    q2 = c_i64_of_f64_rn(q3d)
    r2 = <int64_t>((<uint64_t>r1) - b * (<uint64_t>q2))
    q0 = q1 + (<uint64_t>q2)
    qq = q0 - 1 if r2 < 0 else q0
    q[0] = qq
    r[0] = a - b * qq


cdef inline void c_sdivmod32(int32_t a, int32_t b, int32_t *q,
                             int32_t *r) noexcept nogil:
    cdef uint32_t ua = <uint32_t>a
    cdef uint32_t ub = <uint32_t>b
    cdef D32 t
    if a < 0:
        ua = <uint32_t>0 - ua
    if b < 0:
        ub = <uint32_t>0 - ub
    c_udivmod32(ua, ub, &t)
    q[0] = <int32_t>(<uint32_t>0 - t.q) if (a < 0) != (b < 0) else <int32_t>t.q
    r[0] = <int32_t>(<uint32_t>0 - t.r) if a < 0 else <int32_t>t.r


cdef inline void c_sdivmod64(int64_t a, int64_t b, int64_t *q,
                             int64_t *r) noexcept nogil:
    cdef uint64_t ua = <uint64_t>a
    cdef uint64_t ub = <uint64_t>b
    cdef D64 t
    if a < 0:
        ua = <uint64_t>0 - ua
    if b < 0:
        ub = <uint64_t>0 - ub
    c_udivmod64(ua, ub, &t)
    q[0] = <int64_t>(<uint64_t>0 - t.q) if (a < 0) != (b < 0) else <int64_t>t.q
    r[0] = <int64_t>(<uint64_t>0 - t.r) if a < 0 else <int64_t>t.r


def udivmod32(a, b):
    cdef D32 t
    c_udivmod32(<uint32_t>a, <uint32_t>b, &t)
    return (t.q, t.r)


def udivmod32_trace(a, b):
    cdef D32 t
    c_udivmod32(<uint32_t>a, <uint32_t>b, &t)
    return (t.q, t.r, t.qd, t.q0, t.r0)


def udivmod64(a, b):
    cdef D64 t
    c_udivmod64(<uint64_t>a, <uint64_t>b, &t)
    return (t.q, t.r)


def udivmod64_trace(a, b):
    cdef D64 t
    c_udivmod64(<uint64_t>a, <uint64_t>b, &t)
    return (t.q, t.r, t.q1, t.r1, t.q2, t.q3d, t.r2, t.q0, t.special)


def udivmod64_branching(a, b):
    cdef uint64_t q, r
    c_udivmod64_br(<uint64_t>a, <uint64_t>b, &q, &r)
    return (q, r)


def sdivmod32(a, b):
    cdef int32_t q, r
    c_sdivmod32(<int32_t>a, <int32_t>b, &q, &r)
    return (q, r)


def sdivmod64(a, b):
    cdef int64_t q, r
    c_sdivmod64(<int64_t>a, <int64_t>b, &q, &r)
    return (q, r)


# ---------------------------------------------------------------------------
# Loop baseline: restoring shift-subtract, fixed trip count
# ---------------------------------------------------------------------------

cdef inline void c_loop_udivmod32(uint32_t a, uint32_t b, uint32_t *q,
                                  uint32_t *r, int *steps) noexcept nogil:
    # rem can reach 2b-1 > 2^32, so accumulate in 64 bits
    cdef uint64_t rem = 0
    cdef uint32_t quo = 0
    cdef int i, n = 0
    for i in range(31, -1, -1):
        rem = (rem << 1) | ((a >> i) & 1)
        if rem >= <uint64_t>b:
            rem -= <uint64_t>b
            quo |= (<uint32_t>1) << i
        n += 1
    q[0] = quo
    r[0] = <uint32_t>rem
    steps[0] = n


cdef inline void c_loop_udivmod64(uint64_t a, uint64_t b, uint64_t *q,
                                  uint64_t *r, int *steps) noexcept nogil:
    # 2*rem may overflow 64 bits; keep the shifted-out bit as a carry
    cdef uint64_t rem = 0, quo = 0
    cdef uint64_t carry
    cdef int i, n = 0
    for i in range(63, -1, -1):
        carry = rem >> 63
        rem = (rem << 1) | ((a >> i) & 1)
        if carry or rem >= b:
            rem -= b
            quo |= (<uint64_t>1) << i
        n += 1
    q[0] = quo
    r[0] = rem
    steps[0] = n


def loop_udivmod32(a, b):
    cdef uint32_t q, r
    cdef int steps
    c_loop_udivmod32(<uint32_t>a, <uint32_t>b, &q, &r, &steps)
    return (q, r, steps)


def loop_udivmod64(a, b):
    cdef uint64_t q, r
    cdef int steps
    c_loop_udivmod64(<uint64_t>a, <uint64_t>b, &q, &r, &steps)
    return (q, r, steps)


# ---------------------------------------------------------------------------
# Deterministic pseudo-random stream (splitmix64)
# ---------------------------------------------------------------------------

cdef inline uint64_t sm64_next(uint64_t *state) noexcept nogil:
    cdef uint64_t z
    state[0] += <uint64_t>0x9E3779B97F4A7C15
    z = state[0]
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EB
    return z ^ (z >> 31)


cdef inline void gen_pair(uint64_t i, uint64_t *state, int width,
                          uint64_t *a_out, uint64_t *b_out) noexcept nogil:
    # Four interleaved families: uniform, near powers of two, near
    # multiples of b, small divisor with large dividend.  Exactly two
    # stream draws per pair so indexing stays mode-independent.
    cdef uint64_t M = U64_MAX if width == 64 else <uint64_t>0xFFFFFFFF
    cdef uint64_t r1 = sm64_next(state)
    cdef uint64_t r2 = sm64_next(state)
    cdef uint64_t mode = i & 3
    cdef uint64_t a, b, ka, kb, k
    if mode == 0:
        a = r1 & M
        b = r2 & M
    elif mode == 1:
        ka = r1 % <uint64_t>width
        kb = r2 % <uint64_t>width
        a = (((<uint64_t>1) << ka) + ((r1 >> 8) % 5) - 2) & M
        b = (((<uint64_t>1) << kb) + ((r2 >> 8) % 5) - 2) & M
    elif mode == 2:
        b = r1 & M
        if b == 0:
            b = 1
        if b == 1:
            k = r2 & M
        else:
            k = r2 % (M / b + 1)
        a = (k * b + ((r2 >> 32) % 3) - 1) & M
    else:
        b = (r1 % 4096) + 1
        a = (M - (r2 % ((<uint64_t>1) << (width >> 1)))) & M
    if b == 0:
        b = 1
    a_out[0] = a
    b_out[0] = b


cdef inline void gen_spair(uint64_t i, uint64_t *state, int width,
                           int64_t *a_out, int64_t *b_out) noexcept nogil:
    # Unsigned pair reinterpreted as two's complement, with periodic
    # forced corners: b = -1, a = MIN, and the MIN/-1 pair.
    cdef uint64_t au, bu
    cdef int64_t a, b, vmin
    cdef uint64_t j = i & 15
    gen_pair(i, state, width, &au, &bu)
    if width == 64:
        a = <int64_t>au
        b = <int64_t>bu
        vmin = I64_MIN
    else:
        a = <int64_t>(<int32_t>(<uint32_t>au))
        b = <int64_t>(<int32_t>(<uint32_t>bu))
        vmin = <int64_t>(<int32_t>0x80000000)
    if b == 0:
        b = 1
    if j == 5:
        b = -1
    elif j == 9:
        a = vmin
    elif j == 13:
        a = vmin
        b = -1
    a_out[0] = a
    b_out[0] = b


def fuzz_pairs(int width, bint signed_, count, seed):
    """First `count` pairs of the deterministic fuzz stream, as a list."""
    cdef uint64_t n = <uint64_t>count
    cdef uint64_t state = <uint64_t>seed
    cdef uint64_t i, au, bu
    cdef int64_t a, b
    out = []
    for i in range(n):
        if signed_:
            gen_spair(i, &state, width, &a, &b)
            out.append((a, b))
        else:
            gen_pair(i, &state, width, &au, &bu)
            out.append((au, bu))
    return out


# ---------------------------------------------------------------------------
# Checking drivers
# ---------------------------------------------------------------------------

cdef struct Tally:
    uint64_t checked
    uint64_t failures
    uint64_t trace_violations
    uint64_t variant_mismatches
    uint64_t r1_checked
    uint64_t r1_violations
    uint64_t r1_sufficiency_violations
    uint64_t wrap_mismatches
    int64_t max_abs_r1
    int has_first
    uint64_t first_a
    uint64_t first_b
    int first_kind


cdef inline void tally_init(Tally *s) noexcept nogil:
    s.checked = 0
    s.failures = 0
    s.trace_violations = 0
    s.variant_mismatches = 0
    s.r1_checked = 0
    s.r1_violations = 0
    s.r1_sufficiency_violations = 0
    s.wrap_mismatches = 0
    s.max_abs_r1 = 0
    s.has_first = 0
    s.first_a = 0
    s.first_b = 0
    s.first_kind = 0


# first_kind codes
cdef enum:
    K_QUOTIENT = 1
    K_REMAINDER = 2
    K_VARIANT = 3
    K_TRACE_Q0 = 4
    K_TRACE_R0 = 5
    K_TRACE_R2 = 6
    K_R1_BOUND = 7
    K_R1_WRAP = 8


_KIND_NAMES = {
    0: "",
    K_QUOTIENT: "quotient",
    K_REMAINDER: "remainder",
    K_VARIANT: "variant",
    K_TRACE_Q0: "trace_q0",
    K_TRACE_R0: "trace_r0",
    K_TRACE_R2: "trace_r2",
    K_R1_BOUND: "r1_bound",
    K_R1_WRAP: "r1_wrap",
}


cdef inline void tally_flag(Tally *s, uint64_t a, uint64_t b,
                            int kind) noexcept nogil:
    if not s.has_first:
        s.has_first = 1
        s.first_a = a
        s.first_b = b
        s.first_kind = kind


cdef inline void c_check32(uint32_t a, uint32_t b, uint32_t oq, uint32_t orr,
                           Tally *s) noexcept nogil:
    cdef D32 t
    c_udivmod32(a, b, &t)
    s.checked += 1
    if t.q != oq:
        s.failures += 1
        tally_flag(s, a, b, K_QUOTIENT)
        return
    if t.r != orr:
        s.failures += 1
        tally_flag(s, a, b, K_REMAINDER)
        return
    if t.q0 != <uint64_t>oq and t.q0 != (<uint64_t>oq) + 1:
        s.trace_violations += 1
        tally_flag(s, a, b, K_TRACE_Q0)
    if (t.r0 < 0) != (t.q0 == (<uint64_t>oq) + 1):
        s.trace_violations += 1
        tally_flag(s, a, b, K_TRACE_R0)


cdef inline void c_check64(uint64_t a, uint64_t b, uint64_t oq, uint64_t orr,
                           Tally *s) noexcept nogil:
    cdef D64 t
    cdef uint64_t qb, rb
    cdef int64_t absr1
    c_udivmod64(a, b, &t)
    c_udivmod64_br(a, b, &qb, &rb)
    s.checked += 1
    if t.q != oq:
        s.failures += 1
        tally_flag(s, a, b, K_QUOTIENT)
        return
    if t.r != orr:
        s.failures += 1
        tally_flag(s, a, b, K_REMAINDER)
        return
    if qb != t.q or rb != t.r:
        s.variant_mismatches += 1
        tally_flag(s, a, b, K_VARIANT)
    if 2 <= b < TOP64:
        if t.q0 != oq and t.q0 != oq + 1:
            s.trace_violations += 1
            tally_flag(s, a, b, K_TRACE_Q0)
        if t.r2 < -(<int64_t>b) or t.r2 >= <int64_t>b:
            s.trace_violations += 1
            tally_flag(s, a, b, K_TRACE_R2)
        if not fpdiv_r1_matches_exact(a, b, t.q1, t.r1):
            s.wrap_mismatches += 1
            tally_flag(s, a, b, K_R1_WRAP)
        elif b <= B42:
            s.r1_checked += 1
            absr1 = -t.r1 if t.r1 < 0 else t.r1
            if absr1 > s.max_abs_r1:
                s.max_abs_r1 = absr1
            if absr1 > R1_BOUND:
                s.r1_violations += 1
                tally_flag(s, a, b, K_R1_BOUND)
            if absr1 > R1_SUFFICIENT:
                s.r1_sufficiency_violations += 1


cdef dict tally_dict(Tally *s):
    first = None
    if s.has_first:
        first = (s.first_a, s.first_b, _KIND_NAMES[s.first_kind])
    return {
        "checked": s.checked,
        "failures": s.failures,
        "first_failure": first,
        "trace_violations": s.trace_violations,
        "variant_mismatches": s.variant_mismatches,
        "r1_checked": s.r1_checked,
        "r1_violations": s.r1_violations,
        "r1_sufficiency_violations": s.r1_sufficiency_violations,
        "wrap_mismatches": s.wrap_mismatches,
        "max_abs_r1": s.max_abs_r1,
    }


def sweep_rect32(a_max, b_max):
    """Exhaustive (a, b) in [0, a_max] x [1, b_max], incremental oracle."""
    cdef uint64_t am = <uint64_t>a_max
    cdef uint64_t bm = <uint64_t>b_max
    cdef uint64_t a, b, eq, er
    cdef Tally s
    tally_init(&s)
    with nogil:
        for b in range(1, bm + 1):
            eq = 0
            er = 0
            for a in range(am + 1):
                c_check32(<uint32_t>a, <uint32_t>b, <uint32_t>eq,
                          <uint32_t>er, &s)
                er += 1
                if er == b:
                    er = 0
                    eq += 1
    return tally_dict(&s)


def sweep_rect64(a_max, b_max):
    cdef uint64_t am = <uint64_t>a_max
    cdef uint64_t bm = <uint64_t>b_max
    cdef uint64_t a, b, eq, er
    cdef Tally s
    tally_init(&s)
    with nogil:
        for b in range(1, bm + 1):
            eq = 0
            er = 0
            for a in range(am + 1):
                c_check64(a, b, eq, er, &s)
                er += 1
                if er == b:
                    er = 0
                    eq += 1
    return tally_dict(&s)


def sweep_range32(b, a_start, count):
    """Check `count` consecutive dividends starting at a_start (32-bit)."""
    cdef uint32_t bb = <uint32_t>b
    cdef uint64_t start = <uint64_t>a_start
    cdef uint64_t n = <uint64_t>count
    cdef uint64_t i, a
    cdef uint64_t eq, er
    cdef Tally s
    tally_init(&s)
    eq = start // bb
    er = start % bb
    with nogil:
        for i in range(n):
            a = start + i
            c_check32(<uint32_t>a, bb, <uint32_t>eq, <uint32_t>er, &s)
            er += 1
            if er == bb:
                er = 0
                eq += 1
    return tally_dict(&s)


def sweep_sampled32(b, count):
    """Check `count` dividends spread over [0, 2^32) by an odd stride."""
    cdef uint32_t bb = <uint32_t>b
    cdef uint64_t n = <uint64_t>count
    cdef uint64_t i
    cdef uint32_t a
    cdef Tally s
    tally_init(&s)
    with nogil:
        for i in range(n):
            a = <uint32_t>(i * <uint64_t>2654435761)
            c_check32(a, bb, a // bb, a % bb, &s)
    return tally_dict(&s)


def run_pairs32(a_list, b_list):
    cdef Py_ssize_t n = len(a_list)
    cdef Py_ssize_t i
    cdef uint32_t a, b
    cdef Tally s
    tally_init(&s)
    for i in range(n):
        a = <uint32_t>a_list[i]
        b = <uint32_t>b_list[i]
        c_check32(a, b, a // b, a % b, &s)
    return tally_dict(&s)


def run_pairs64(a_list, b_list):
    cdef Py_ssize_t n = len(a_list)
    cdef Py_ssize_t i
    cdef uint64_t a, b
    cdef Tally s
    tally_init(&s)
    for i in range(n):
        a = <uint64_t>a_list[i]
        b = <uint64_t>b_list[i]
        c_check64(a, b, a // b, a % b, &s)
    return tally_dict(&s)


def fuzz32(count, seed):
    cdef uint64_t n = <uint64_t>count
    cdef uint64_t state = <uint64_t>seed
    cdef uint64_t i, a, b
    cdef uint32_t a32, b32
    cdef Tally s
    tally_init(&s)
    with nogil:
        for i in range(n):
            gen_pair(i, &state, 32, &a, &b)
            a32 = <uint32_t>a
            b32 = <uint32_t>b
            c_check32(a32, b32, a32 // b32, a32 % b32, &s)
    return tally_dict(&s)


def fuzz64(count, seed):
    cdef uint64_t n = <uint64_t>count
    cdef uint64_t state = <uint64_t>seed
    cdef uint64_t i, a, b
    cdef Tally s
    tally_init(&s)
    with nogil:
        for i in range(n):
            gen_pair(i, &state, 64, &a, &b)
            c_check64(a, b, a // b, a % b, &s)
    return tally_dict(&s)


cdef inline void c_check_s32(int32_t a, int32_t b, Tally *s) noexcept nogil:
    cdef int32_t q, r, oq, orr
    c_sdivmod32(a, b, &q, &r)
    s.checked += 1
    # C99 truncating division; MIN / -1 wraps by our documented contract
    if a == <int32_t>0x80000000 and b == -1:
        oq = a
        orr = 0
    else:
        oq = a / b
        orr = a % b
    if q != oq:
        s.failures += 1
        tally_flag(s, <uint64_t><uint32_t>a, <uint64_t><uint32_t>b,
                   K_QUOTIENT)
    elif r != orr:
        s.failures += 1
        tally_flag(s, <uint64_t><uint32_t>a, <uint64_t><uint32_t>b,
                   K_REMAINDER)


cdef inline void c_check_s64(int64_t a, int64_t b, Tally *s) noexcept nogil:
    cdef int64_t q, r, oq, orr
    c_sdivmod64(a, b, &q, &r)
    s.checked += 1
    if a == I64_MIN and b == -1:
        oq = a
        orr = 0
    else:
        oq = a / b
        orr = a % b
    if q != oq:
        s.failures += 1
        tally_flag(s, <uint64_t>a, <uint64_t>b, K_QUOTIENT)
    elif r != orr:
        s.failures += 1
        tally_flag(s, <uint64_t>a, <uint64_t>b, K_REMAINDER)


def fuzz_s32(count, seed):
    cdef uint64_t n = <uint64_t>count
    cdef uint64_t state = <uint64_t>seed
    cdef uint64_t i
    cdef int64_t a, b
    cdef Tally s
    tally_init(&s)
    with nogil:
        for i in range(n):
            gen_spair(i, &state, 32, &a, &b)
            c_check_s32(<int32_t>a, <int32_t>b, &s)
    return tally_dict(&s)


def fuzz_s64(count, seed):
    cdef uint64_t n = <uint64_t>count
    cdef uint64_t state = <uint64_t>seed
    cdef uint64_t i
    cdef int64_t a, b
    cdef Tally s
    tally_init(&s)
    with nogil:
        for i in range(n):
            gen_spair(i, &state, 64, &a, &b)
            c_check_s64(a, b, &s)
    return tally_dict(&s)


def r1_scan(count, seed):
    """Boundary-biased pairs with 2 <= b <= 2^42; audits the first-remainder
    magnitude bound on every pair."""
    cdef uint64_t n = <uint64_t>count
    cdef uint64_t state = <uint64_t>seed
    cdef uint64_t i, r1, r2, a, b, mode, amode, k
    cdef Tally s
    tally_init(&s)
    with nogil:
        for i in range(n):
            r1 = sm64_next(&state)
            r2 = sm64_next(&state)
            mode = i & 3
            if mode == 0:
                b = 2 + (r1 % (B42 - 1))
            elif mode == 1:
                k = r1 % 42
                b = (((<uint64_t>1) << (k + 1)) + ((r1 >> 8) % 5)) - 2
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
                a = U64_MAX - (r2 % 65536)
            elif amode == 2:
                a = r2 % ((<uint64_t>1) << 52)
            else:
                k = r2 % (U64_MAX / b + 1)
                a = k * b + ((r2 >> 40) % 3) - 1
            c_check64(a, b, a // b, a % b, &s)
    return tally_dict(&s)


# ---------------------------------------------------------------------------
# Benchmark loops
# ---------------------------------------------------------------------------

cdef inline uint64_t fp_div64_hoisted(uint64_t a, uint64_t b, double invb0,
                                      double invb) noexcept nogil:
    cdef double ad = c_f64_of_u64(a)
    cdef uint64_t q1 = c_u64_of_f64_rn(c_mul64(ad, invb0))
    cdef int64_t r1 = <int64_t>(a - b * q1)
    cdef double q3d = c_mul64(c_f64_of_i64(r1), invb)
    cdef int64_t q2 = c_i64_of_f64_rn(q3d)
    cdef int64_t r2 = <int64_t>((<uint64_t>r1) - b * (<uint64_t>q2))
    cdef uint64_t q0 = q1 + (<uint64_t>q2)
    cdef uint64_t qmain = q0 - 1 if r2 < 0 else q0
    cdef uint64_t q_top = 1 if a >= b else 0
    return a if b == 1 else (q_top if b >= TOP64 else qmain)


cdef inline uint64_t fp_div32_hoisted(uint32_t a, uint32_t b,
                                      double invb) noexcept nogil:
    cdef double qd = c_mul64(c_f64_of_u64(<uint64_t>a), invb)
    cdef uint64_t q0 = c_u64_of_f64_rn(qd)
    cdef int64_t r0 = <int64_t>((<uint64_t>a) - (<uint64_t>b) * q0)
    return <uint64_t><uint32_t>(q0 - 1 if r0 < 0 else q0)


cdef inline uint64_t bench_one64(int method, uint64_t a, uint64_t b) noexcept nogil:
    cdef D64 t
    cdef uint64_t q, r
    cdef int steps
    if method == 0:
        c_udivmod64(a, b, &t)
        return t.q
    elif method == 1:
        c_loop_udivmod64(a, b, &q, &r, &steps)
        return q
    else:
        return a / b


cdef inline uint64_t bench_one32(int method, uint32_t a, uint32_t b) noexcept nogil:
    cdef D32 t
    cdef uint32_t q, r
    cdef int steps
    if method == 0:
        c_udivmod32(a, b, &t)
        return <uint64_t>t.q
    elif method == 1:
        c_loop_udivmod32(a, b, &q, &r, &steps)
        return <uint64_t>q
    else:
        return <uint64_t>(a / b)


cdef inline uint64_t now_ns() noexcept nogil:
    cdef timespec ts
    clock_gettime(CLOCK_MONOTONIC, &ts)
    return <uint64_t>ts.tv_sec * 1000000000 + <uint64_t>ts.tv_nsec


def bench_run(int width, int method, int unroll, int hoist,
              a0, da, b0, db, count):
    """Time one pass over an affine workload; returns (elapsed_ns, checksum).

    method: 0 = fp, 1 = loop, 2 = native.  Operand generation happens
    before the clock starts; the timed region only divides and keeps a
    wrapping checksum of quotients.
    """
    cdef uint64_t n = <uint64_t>count
    cdef uint64_t va0 = <uint64_t>a0
    cdef uint64_t vda = <uint64_t>da
    cdef uint64_t vb0 = <uint64_t>b0
    cdef uint64_t vdb = <uint64_t>db
    cdef uint64_t *aa = <uint64_t *>malloc(n * sizeof(uint64_t))
    cdef uint64_t *bb = <uint64_t *>malloc(n * sizeof(uint64_t))
    cdef uint64_t k, cs = 0, t0, t1
    cdef double hbd, hinvb0, halpha, hinvb
    if aa == NULL or bb == NULL:
        free(aa)
        free(bb)
        raise MemoryError()
    try:
        with nogil:
            for k in range(n):
                aa[k] = va0 + vda * k
                bb[k] = vb0 + vdb * k
            if hoist:
                c_recip_parts(vb0, &hbd, &hinvb0, &halpha, &hinvb)
            t0 = now_ns()
            if width == 64:
                if hoist:
                    k = 0
                    if unroll == 2:
                        while k + 1 < n:
                            cs += fp_div64_hoisted(aa[k], vb0, hinvb0, hinvb)
                            cs += fp_div64_hoisted(aa[k + 1], vb0, hinvb0,
                                                   hinvb)
                            k += 2
                    while k < n:
                        cs += fp_div64_hoisted(aa[k], vb0, hinvb0, hinvb)
                        k += 1
                else:
                    k = 0
                    if unroll == 2:
                        while k + 1 < n:
                            cs += bench_one64(method, aa[k], bb[k])
                            cs += bench_one64(method, aa[k + 1], bb[k + 1])
                            k += 2
                    while k < n:
                        cs += bench_one64(method, aa[k], bb[k])
                        k += 1
            else:
                if hoist:
                    k = 0
                    if unroll == 2:
                        while k + 1 < n:
                            cs += fp_div32_hoisted(<uint32_t>aa[k],
                                                   <uint32_t>vb0, hinvb)
                            cs += fp_div32_hoisted(<uint32_t>aa[k + 1],
                                                   <uint32_t>vb0, hinvb)
                            k += 2
                    while k < n:
                        cs += fp_div32_hoisted(<uint32_t>aa[k],
                                               <uint32_t>vb0, hinvb)
                        k += 1
                else:
                    k = 0
                    if unroll == 2:
                        while k + 1 < n:
                            cs += bench_one32(method, <uint32_t>aa[k],
                                              <uint32_t>bb[k])
                            cs += bench_one32(method, <uint32_t>aa[k + 1],
                                              <uint32_t>bb[k + 1])
                            k += 2
                    while k < n:
                        cs += bench_one32(method, <uint32_t>aa[k],
                                          <uint32_t>bb[k])
                        k += 1
            t1 = now_ns()
    finally:
        free(aa)
        free(bb)
    return (t1 - t0, cs)
