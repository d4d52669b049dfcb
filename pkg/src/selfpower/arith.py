"""Exact integer and rational primitives.

Everything here is decided by integer arithmetic alone: prime factorization
with a deterministic primality check, perfect-power detection, the common-base
extraction for x^a = y^b with coprime exponents, and exact order comparisons
of self-power expressions t^t against rationals and against d-th roots of
rationals.

Comparands too large to materialise under the configured bit cap are ordered
through rigorous fixed-point enclosures of log2 -- still integer-only; a sign
is reported only once the enclosure excludes zero, and exact equality is
always detected structurally beforehand, so no decision ever rests on an
approximation.
"""

from __future__ import annotations

import enum
import random
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable

from .config import DEFAULT_CONFIG, Config
from .errors import DomainError, PreconditionError, ResourceError

#: Prime factorization: ((p1, e1), (p2, e2), ...) with p1 < p2 < ...
Factorization = tuple[tuple[int, int], ...]


class Ordering(enum.Enum):
    """Result of an exact three-way comparison."""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"

    @staticmethod
    def of_sign(sign: int) -> "Ordering":
        if sign < 0:
            return Ordering.LESS
        if sign > 0:
            return Ordering.GREATER
        return Ordering.EQUAL


def reduce_fraction(num: int, den: int) -> Fraction:
    """Unique reduced representative of num/den with positive denominator."""
    if den == 0:
        raise DomainError("zero denominator")
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# primality and factorization
# ---------------------------------------------------------------------------

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

# Miller-Rabin with the witness set above is proven deterministic below this.
_MR_PROVEN_BOUND = 3_317_044_064_679_887_385_961_981
_MR_EXTRA_WITNESSES = (43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test.

    Uses the 13-witness set proven complete below 3.3e24; beyond that the
    witness set is extended but stays fixed, so results are reproducible.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    witnesses = _SMALL_PRIMES
    if n >= _MR_PROVEN_BOUND:
        witnesses = _SMALL_PRIMES + _MR_EXTRA_WITNESSES
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_TRIAL_LIMIT = 10**6
_trial_primes: list[int] | None = None


def _trial_prime_list() -> list[int]:
    global _trial_primes
    if _trial_primes is None:
        sieve = bytearray([1]) * (_TRIAL_LIMIT + 1)
        sieve[0] = sieve[1] = 0
        for p in range(2, isqrt(_TRIAL_LIMIT) + 1):
            if sieve[p]:
                sieve[p * p :: p] = bytearray(len(range(p * p, _TRIAL_LIMIT + 1, p)))
        _trial_primes = [i for i in range(_TRIAL_LIMIT + 1) if sieve[i]]
    return _trial_primes


def _rho_brent(n: int, rng: random.Random, budget: list[int]) -> int | None:
    """One Brent cycle-finding pass; nontrivial factor of composite odd n, or None.

    Decrements budget[0] per modular multiplication and raises ResourceError
    when the budget runs out.
    """
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            budget[0] -= min(m, r - k)
            if budget[0] <= 0:
                raise ResourceError(f"factorization budget exhausted on {n}")
            g = gcd(q, n)
            k += m
        r *= 2
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            budget[0] -= 1
            if budget[0] <= 0:
                raise ResourceError(f"factorization budget exhausted on {n}")
            g = gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def _as_perfect_power(n: int) -> tuple[int, int]:
    """Largest k with root**k == n; returns (root, k), k = 1 when n is not a power."""
    for p in _trial_prime_list():
        if p > n.bit_length():
            break
        root = integer_kth_root(n, p)
        if root is not None and root < n:
            base, k = _as_perfect_power(root)
            return base, k * p
    return n, 1


def factorize(n: int, config: Config = DEFAULT_CONFIG) -> Factorization:
    """Exact prime factorization of n >= 1 as ((p, e), ...), primes increasing.

    Trial division by primes up to 1e6, then perfect-power reduction and
    seeded Brent rho with a deterministic primality check on every cofactor.
    A cofactor that survives the configured effort budget raises
    ResourceError -- the answer is never guessed.
    """
    if n < 1:
        raise DomainError("factorize requires n >= 1")
    found: dict[int, int] = {}
    for p in _trial_prime_list():
        if p * p > n:
            break
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    if n > 1:
        if n <= _TRIAL_LIMIT * _TRIAL_LIMIT or is_prime(n):
            # no prime factor <= 1e6 survives trial division, so a cofactor
            # below 1e12 is itself prime
            found[n] = found.get(n, 0) + 1
        else:
            rng = random.Random(config.seed)
            budget = [config.factor_budget]
            stack = [(n, 1)]
            while stack:
                m, mult = stack.pop()
                if is_prime(m):
                    found[m] = found.get(m, 0) + mult
                    continue
                base, k = _as_perfect_power(m)
                if k > 1:
                    stack.append((base, mult * k))
                    continue
                f = None
                while f is None:
                    f = _rho_brent(m, rng, budget)
                stack.append((f, mult))
                stack.append((m // f, mult))
    return tuple(sorted(found.items()))


def factorization_value(factors: Factorization) -> int:
    """Product of p**e over the factorization."""
    value = 1
    for p, e in factors:
        value *= p**e
    return value


def padic_valuation(p: int, n: int) -> int:
    """The exact exponent of the prime p in n >= 1."""
    if n < 1:
        raise DomainError("padic_valuation requires n >= 1")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


# ---------------------------------------------------------------------------
# perfect powers and common-base extraction
# ---------------------------------------------------------------------------


def _kth_root_floor(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 1, by binary search on a bit-length bracket."""
    if n == 1 or k >= n.bit_length():
        return 1
    if k == 1:
        return n
    if k == 2:
        return isqrt(n)
    lo = 1 << ((n.bit_length() - 1) // k)
    hi = lo << 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def integer_kth_root(n: int, k: int) -> int | None:
    """The integer m with m**k == n exactly, or None. Requires n >= 0, k >= 1."""
    if k < 1:
        raise DomainError("k must be >= 1")
    if n < 0:
        raise DomainError("n must be >= 0")
    if n in (0, 1):
        return n
    m = _kth_root_floor(n, k)
    return m if m**k == n else None


def _bounded_pow_equals(base: int, exp: int, target: int) -> bool:
    """base**exp == target for base >= 2, exp >= 1, without oversizing.

    The power is only materialised when the bit-length windows of both sides
    overlap, which caps its size near the size of target.
    """
    bl, blt = base.bit_length(), target.bit_length()
    if exp * (bl - 1) >= blt or exp * bl <= blt - 1:
        return False
    return base**exp == target


def powers_equal(x: int, p: int, y: int, q: int) -> bool:
    """Exact test x**p == y**q for x, y >= 1 and p, q >= 0, never forming
    either power in full.

    The exponents are reduced by their gcd; the coprime-exponent equation then
    forces a common base lam with x = lam**q and y = lam**p, which is checked
    through a single integer root extraction.
    """
    if x < 1 or y < 1 or p < 0 or q < 0:
        raise DomainError("powers_equal requires x, y >= 1 and p, q >= 0")
    if p == 0 or x == 1:
        return q == 0 or y == 1
    if q == 0 or y == 1:
        return False
    g = gcd(p, q)
    p, q = p // g, q // g
    lam = integer_kth_root(x, q)
    if lam is None:
        return False
    if lam == 1:
        return y == 1
    if p == 1:
        return lam == y
    return _bounded_pow_equals(lam, p, y)


def lambda_decompose(x: int, y: int, a: int, b: int) -> int:
    """Common base of x^a = y^b: the unique lam with lam**b = x and lam**a = y.

    Requires x, y, a, b >= 1 with gcd(a, b) = 1; the hypothesis x^a = y^b is
    checked and its failure reported as a precondition violation.
    """
    if min(x, y, a, b) < 1:
        raise DomainError("lambda_decompose requires positive integers")
    if gcd(a, b) != 1:
        raise DomainError(f"exponents must be coprime, got gcd({a}, {b}) != 1")
    if not powers_equal(x, a, y, b):
        raise PreconditionError(f"{x}^{a} != {y}^{b}")
    lam = integer_kth_root(x, b)
    assert lam is not None  # guaranteed once x^a = y^b holds with coprime a, b
    return lam


# ---------------------------------------------------------------------------
# rigorous fixed-point logarithms
# ---------------------------------------------------------------------------
#
# log2_interval(n, prec) returns integers (lo, hi) with
#     lo <= 2**prec * log2(n) <= hi.
# Fractional bits come from the classical square-and-extract loop, run twice:
# once rounding every step down and once rounding up.  Each rounding mode is
# monotone, so the two digit strings bracket the exact expansion at any
# working precision; generous guard bits keep the bracket a few ulps wide.


def _log2_frac_bits(x: int, f: int, prec: int, round_up: bool) -> int:
    # x / 2^f in [1, 2]; first `prec` binary digits of log2(x / 2^f),
    # consistently rounded down or up.
    acc = 0
    one = 1 << f
    two = 2 << f
    for _ in range(prec):
        x *= x
        x = (x + one - 1) >> f if round_up else x >> f
        acc <<= 1
        if x >= two:
            acc |= 1
            x = (x + 1) >> 1 if round_up else x >> 1
    return acc


def log2_interval(n: int, prec: int) -> tuple[int, int]:
    """Integer enclosure (lo, hi) of 2**prec * log2(n) for n >= 1."""
    if n < 1:
        raise DomainError("log2 of a non-positive integer")
    k = n.bit_length() - 1
    if n == 1 << k:
        return k << prec, k << prec
    f = 2 * prec + 32
    x = (n << f) >> k
    lo = (k << prec) + _log2_frac_bits(x, f, prec, round_up=False)
    hi = (k << prec) + _log2_frac_bits(x + 1, f, prec, round_up=True) + 1
    return lo, hi


@lru_cache(maxsize=None)
def _ln2_interval(prec: int) -> tuple[int, int]:
    # ln 2 = 2 atanh(1/3) = 2 sum_{j>=0} 3^-(2j+1) / (2j+1); floored partial
    # sums give the lower bound, the per-term floor losses bound the upper.
    f = prec + 16
    total = 0
    power = (2 << f) // 3
    j = 0
    while True:
        term = power // (2 * j + 1)
        if term == 0:
            break
        total += term
        power //= 9
        j += 1
    slack = 3 * j + 8
    lo = total >> 16
    hi = -((-(total + slack)) >> 16)
    return lo, hi


def ln_interval(n: int, prec: int) -> tuple[int, int]:
    """Integer enclosure of 2**prec * ln(n) for n >= 1."""
    if n == 1:
        return 0, 0
    work = prec + 8
    l2lo, l2hi = log2_interval(n, work)
    n2lo, n2hi = _ln2_interval(work)
    lo = (l2lo * n2lo) >> (work + 8)
    hi = -((-(l2hi * n2hi)) >> (work + 8))
    return lo, hi


def floor_of_multiple_ln(mult: int, n: int, prec: int = 96) -> int:
    """floor(mult * ln n) computed from the upper enclosure (never undercounts)."""
    _, hi = ln_interval(n, prec)
    return (mult * hi) >> prec


_MAX_LOG_PRECISION = 1 << 16


# ---------------------------------------------------------------------------
# exact comparison of power products
# ---------------------------------------------------------------------------


def compare_power_products(
    lhs: Iterable[tuple[int, int]],
    rhs: Iterable[tuple[int, int]],
    config: Config = DEFAULT_CONFIG,
) -> Ordering:
    """Exact order of two products of powers, given as (base, exponent) pairs.

    Bases must be >= 1 and exponents >= 0.  Products that fit under the
    configured bit cap are compared directly; larger ones through log2
    enclosures at doubling precision.  On the enclosure path exact equality
    must have been ruled out by the caller (structurally, as the self-power
    comparators do); inputs that stay indistinguishable at the maximum
    precision raise ResourceError.
    """
    left = [(b, e) for b, e in lhs if b != 1 and e != 0]
    right = [(b, e) for b, e in rhs if b != 1 and e != 0]
    for b, e in left + right:
        if b < 1 or e < 0:
            raise DomainError("power products need bases >= 1 and exponents >= 0")
    lbits = sum(e * b.bit_length() for b, e in left)
    rbits = sum(e * b.bit_length() for b, e in right)
    if max(lbits, rbits) <= config.bit_cap:
        lprod = rprod = 1
        for b, e in left:
            lprod *= b**e
        for b, e in right:
            rprod *= b**e
        return Ordering.of_sign((lprod > rprod) - (lprod < rprod))
    prec = 64
    while prec <= _MAX_LOG_PRECISION:
        diff_lo = diff_hi = 0
        for b, e in left:
            lo, hi = log2_interval(b, prec)
            diff_lo += e * lo
            diff_hi += e * hi
        for b, e in right:
            lo, hi = log2_interval(b, prec)
            diff_lo -= e * hi
            diff_hi -= e * lo
        if diff_lo > 0:
            return Ordering.GREATER
        if diff_hi < 0:
            return Ordering.LESS
        prec <<= 1
    raise ResourceError(
        "comparison unresolved at maximum log precision; operands may be equal"
    )


def _require_positive(q: Fraction, name: str) -> None:
    if q <= 0:
        raise DomainError(f"{name} must be positive, got {q}")


def compare_self_power_to_rational(
    t: Fraction, q: Fraction, config: Config = DEFAULT_CONFIG
) -> Ordering:
    """Exact order of t**t versus the rational q, both positive.

    Writing t = a/b and q = m/n in lowest terms, t^t vs q is the integer
    comparison a^a * n^b vs b^a * m^b; equality splits into a^a = m^b and
    b^a = n^b because the two sides share no prime across the reduced pairs.
    """
    _require_positive(t, "t")
    _require_positive(q, "q")
    a, b = t.numerator, t.denominator
    m, n = q.numerator, q.denominator
    if powers_equal(a, a, m, b) and powers_equal(b, a, n, b):
        return Ordering.EQUAL
    return compare_power_products([(a, a), (n, b)], [(b, a), (m, b)], config)


def compare_self_power_to_root(
    t: Fraction, d: int, r: int, s: int, config: Config = DEFAULT_CONFIG
) -> Ordering:
    """Exact order of t**t versus the positive real d-th root of r/s.

    Requires t > 0, d >= 1, r, s >= 1 with gcd(r, s) = 1.  Raising both sides
    to the b*d-th power turns the question into the integer comparison
    a^(a*d) * s^b vs b^(a*d) * r^b; equality splits into a^(a*d) = r^b and
    b^(a*d) = s^b.
    """
    _require_positive(t, "t")
    if d < 1 or r < 1 or s < 1:
        raise DomainError("root comparison needs d, r, s >= 1")
    if gcd(r, s) != 1:
        raise DomainError(f"r and s must be coprime, got gcd({r}, {s}) != 1")
    a, b = t.numerator, t.denominator
    e = a * d
    if powers_equal(a, e, r, b) and powers_equal(b, e, s, b):
        return Ordering.EQUAL
    return compare_power_products([(a, e), (s, b)], [(b, e), (r, b)], config)
