# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the pure-Python candidate scan in ``_scan_py``.

The inner loop runs on C integers; Python big-integer arithmetic is touched
only by the rare candidates that survive the bit-length windows and need the
final exact power comparison against r and s.  Results must be identical to
``_scan_py.scan_denominators``.
"""

from libc.stdint cimport int64_t


cdef inline int64_t c_gcd(int64_t a, int64_t b) noexcept:
    cdef int64_t t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline int64_t c_bitlen(int64_t v) noexcept:
    cdef int64_t n = 0
    while v:
        v >>= 1
        n += 1
    return n


cdef int64_t _pow_capped(int64_t base, int64_t e, int64_t cap) noexcept:
    # base**e saturating at cap + 1; base >= 2 keeps the loop under 63 rounds
    cdef int64_t acc = 1
    cdef int64_t i
    if base == 1:
        return 1
    for i in range(e):
        if acc > cap / base:
            return cap + 1
        acc *= base
    return acc


cdef int64_t _kth_root64(int64_t n, int64_t k) noexcept:
    # exact k-th root of n >= 1, or -1 when none exists
    cdef int64_t bl, lo, hi, mid
    if n == 1:
        return 1
    if k == 1:
        return n
    bl = c_bitlen(n)
    if k >= bl:
        return -1
    lo = (<int64_t>1) << ((bl - 1) / k)
    hi = lo << 1
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        if _pow_capped(mid, k, n) <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo if _pow_capped(lo, k, n) == n else -1


cdef bint _powers_equal(int64_t x, int64_t p, object y, int64_t bl_y, int64_t q):
    # x**p == y**q for x >= 1 (machine-sized), y >= 1 (Python int), p, q >= 1
    cdef int64_t g, pr, qr, lam, blam
    if x == 1:
        return bl_y == 1
    if bl_y == 1:
        return False
    g = c_gcd(p, q)
    pr = p / g
    qr = q / g
    lam = _kth_root64(x, qr)
    if lam < 0:
        return False
    blam = c_bitlen(lam)
    if pr * (blam - 1) >= bl_y or pr * blam <= bl_y - 1:
        return False
    return pow(<object>lam, <object>pr) == y


def scan_denominators(object d_in, object n_mult_in, object b_lo_in,
                      object b_hi_in, object r, object s):
    """Return (hits, tested); see ``_scan_py.scan_denominators``."""
    cdef int64_t d = d_in
    cdef int64_t n_mult = n_mult_in
    cdef int64_t b_lo = b_lo_in
    cdef int64_t b_hi = b_hi_in
    cdef int64_t bl_r = r.bit_length()
    cdef int64_t bl_s = s.bit_length()
    cdef list hits = []
    cdef int64_t tested = 0
    cdef int64_t a, b, e, a_max, bla, next_pow, bl_b, rb, rb1, sb, sb1
    if d < 1 or n_mult < 0 or b_lo < 1:
        raise ValueError("bad scan range")
    for b in range(b_lo, b_hi + 1):
        bl_b = c_bitlen(b)
        rb = b * bl_r
        rb1 = b * (bl_r - 1)
        sb = b * bl_s
        sb1 = b * (bl_s - 1)
        a_max = n_mult * b
        bla = 1
        next_pow = 2
        for a in range(1, a_max + 1):
            if a == next_pow:
                bla += 1
                next_pow <<= 1
            if c_gcd(a, b) != 1:
                continue
            tested += 1
            e = a * d
            if e * (bla - 1) >= rb or rb1 >= e * bla:
                continue
            if e * (bl_b - 1) >= sb or sb1 >= e * bl_b:
                continue
            if _powers_equal(a, e, r, bl_r, b) and _powers_equal(b, e, s, bl_s, b):
                hits.append((int(a), int(b)))
    return hits, int(tested)
