"""Pure-Python candidate scan for the denominator enumeration.

This is the reference twin of the compiled kernel in ``_scan.pyx``; the two
must return identical results.  For each candidate x = a/b with b in
[b_lo, b_hi], 1 <= a <= n_mult*b and gcd(a, b) = 1, the scan decides exactly
whether x^x equals the d-th root of r/s, i.e. whether a^(a*d) = r^b and
b^(a*d) = s^b.  Bit-length windows reject almost all candidates before the
exact power comparison runs.
"""

from __future__ import annotations

from math import gcd

from .arith import powers_equal


def scan_denominators(
    d: int, n_mult: int, b_lo: int, b_hi: int, r: int, s: int
) -> tuple[list[tuple[int, int]], int]:
    """Return (hits, tested): solutions (a, b) and the count of exact tests."""
    hits: list[tuple[int, int]] = []
    tested = 0
    bl_r = r.bit_length()
    bl_s = s.bit_length()
    _gcd = gcd
    for b in range(b_lo, b_hi + 1):
        bl_b = b.bit_length()
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
            if _gcd(a, b) != 1:
                continue
            tested += 1
            e = a * d
            # a^e = r^b needs the bit-length windows of the two sides to meet
            if e * (bla - 1) >= rb or rb1 >= e * bla:
                continue
            if e * (bl_b - 1) >= sb or sb1 >= e * bl_b:
                continue
            if powers_equal(a, e, r, b) and powers_equal(b, e, s, b):
                hits.append((a, b))
    return hits, tested
