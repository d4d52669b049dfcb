"""Positive rational solutions of x^x = alpha, by two independent procedures.

The enumerative procedure scans integers until n^n >= alpha, then tests every
reduced fraction a/b with denominator up to the degree-driven bound.  The
divisor procedure works backwards from the binomial minimal polynomial
s*x^d - r: any solution a/b forces s = lam^a and b^d = lam^b for a common base
lam dividing s, so trying each divisor of s pins down the candidates.  Both
return the same set; `solve` can cross-check them.

The module also generates and verifies the classical two-parameter families:
the pairs x = (m/(m+1))^m, y = (m/(m+1))^(m+1) solving x^x = y^y, and their
reciprocals solving x^y = y^x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from ._backend import scan_denominators
from .arith import (
    Factorization,
    Ordering,
    compare_self_power_to_root,
    factorize,
    ln_interval,
    floor_of_multiple_ln,
    powers_equal,
)
from .config import DEFAULT_CONFIG, Config
from .errors import DomainError, ResourceError, TargetShapeError
from .minpoly import (
    BinomialMinPoly,
    IntPolynomial,
    as_binomial,
    is_irreducible_binomial,
    minimal_polynomial_of_self_power,
)


@dataclass(frozen=True)
class AlgebraicTarget:
    """The right-hand side alpha of x^x = alpha.

    Either a positive rational value, or the unique positive real root
    (r/s)^(1/d) of an irreducible binomial s*x^d - r of degree >= 2.
    """

    value: Fraction | None = None
    root: BinomialMinPoly | None = None

    def __post_init__(self):
        if (self.value is None) == (self.root is None):
            raise DomainError("target needs exactly one of value or root")
        if self.value is not None and self.value <= 0:
            raise DomainError(f"alpha must be positive, got {self.value}")
        if self.root is not None and self.root.d < 2:
            raise DomainError("degree-1 binomials must be given as rational values")

    @classmethod
    def from_rational(cls, q) -> "AlgebraicTarget":
        return cls(value=Fraction(q))

    @classmethod
    def from_binomial(
        cls, binomial: BinomialMinPoly, config: Config = DEFAULT_CONFIG
    ) -> "AlgebraicTarget":
        if not is_irreducible_binomial(binomial, config):
            raise TargetShapeError(
                f"{binomial.s}*x^{binomial.d} - {binomial.r} is reducible over the rationals"
            )
        if binomial.d == 1:
            return cls(value=Fraction(binomial.r, binomial.s))
        return cls(root=binomial)

    @classmethod
    def from_polynomial(
        cls, poly: IntPolynomial, config: Config = DEFAULT_CONFIG
    ) -> "AlgebraicTarget":
        binomial = as_binomial(poly)
        if binomial is None:
            raise TargetShapeError(
                "alpha must be the positive root of a binomial s*x^d - r with "
                "r, s >= 1; other polynomial shapes admit no rational solutions "
                "of x^x = alpha and are rejected"
            )
        return cls.from_binomial(binomial, config)

    @property
    def degree(self) -> int:
        return 1 if self.value is not None else self.root.d

    @property
    def is_rational(self) -> bool:
        return self.value is not None

    def root_triple(self) -> tuple[int, int, int]:
        """(d, r, s) with alpha = (r/s)^(1/d); d = 1 for rational targets."""
        if self.value is not None:
            return 1, self.value.numerator, self.value.denominator
        return self.root.d, self.root.r, self.root.s


@dataclass(frozen=True)
class SolutionSet:
    """All positive rational solutions (at most two), plus the test count."""

    solutions: tuple[Fraction, ...]
    scan_count: int

    def __post_init__(self):
        if len(self.solutions) > 2:
            raise AssertionError(
                "x -> x^x has at most two preimages; got "
                f"{[str(x) for x in self.solutions]}"
            )
        if list(self.solutions) != sorted(set(self.solutions)):
            raise AssertionError("solutions must be sorted and distinct")


def integer_scan(
    target: AlgebraicTarget, config: Config = DEFAULT_CONFIG
) -> tuple[int | None, int]:
    """Scan n = 1, 2, ... until n^n >= alpha, each step an exact comparison.

    Returns (n, N) when n^n = alpha exactly, else (None, N), with N the number
    of integers tested; N never exceeds max(3, 1 + ceil(ln alpha)).
    """
    d, r, s = target.root_triple()
    n = 1
    while True:
        c = compare_self_power_to_root(Fraction(n), d, r, s, config)
        if c is Ordering.EQUAL:
            found, count = n, n
            break
        if c is Ordering.GREATER:
            found, count = None, n
            break
        n += 1
    assert count <= max(3, 1 + _ceil_ln_alpha_upper(d, r, s))
    return found, count


def _ceil_ln_alpha_upper(d: int, r: int, s: int, prec: int = 96) -> int:
    # rigorous upper bound for ceil(ln alpha), alpha = (r/s)^(1/d)
    _, r_hi = ln_interval(r, prec)
    s_lo, _ = ln_interval(s, prec)
    return -((s_lo - r_hi) // (d << prec))


def denominator_bound(d: int) -> int:
    """Denominator bound for solutions when alpha has degree d.

    1 when d = 1 (rational alpha admits only integer solutions); otherwise
    floor(4*d*ln d) with the logarithm rounded upward, so the bound is never
    undercounted.
    """
    if d < 1:
        raise DomainError("degree must be >= 1")
    if d == 1:
        return 1
    return floor_of_multiple_ln(4 * d, d)


def solve_enumerative(
    target: AlgebraicTarget, config: Config = DEFAULT_CONFIG
) -> SolutionSet:
    """All solutions by exhaustive exact testing.

    Integer scan first; when alpha has degree d > 1, every reduced a/b with
    2 <= b <= denominator_bound(d) and 1 <= a <= N*b is tested exactly.
    """
    found, count = integer_scan(target, config)
    solutions = [] if found is None else [Fraction(found)]
    d, r, s = target.root_triple()
    if d > 1:
        bound = denominator_bound(d)
        hits, tested = scan_denominators(d, count, 2, bound, r, s)
        count += tested
        for a, b in hits:
            x = Fraction(a, b)
            assert compare_self_power_to_root(x, d, r, s, config) is Ordering.EQUAL
            solutions.append(x)
    return SolutionSet(tuple(sorted(solutions)), count)


def _divisor_exponent(vec: tuple[int, ...], factors: Factorization) -> int | None:
    # the a with lam^a = s, where lam has exponent vector vec against s's primes
    a = None
    for v, (_, e) in zip(vec, factors):
        if v == 0 or e % v != 0:
            return None
        if a is None:
            a = e // v
        elif e // v != a:
            return None
    return a


def solve_by_divisors(
    binomial: BinomialMinPoly, config: Config = DEFAULT_CONFIG
) -> SolutionSet:
    """All solutions of x^x = (r/s)^(1/d), working backwards from s*x^d - r.

    A solution a/b forces a common base lam | s with lam^a = s and b^d = lam^b,
    so each divisor of s pins down at most one exponent a; candidate
    denominators are then read off from b^d = lam^b and confirmed against the
    reconstructed minimal polynomial.
    """
    if not is_irreducible_binomial(binomial, config):
        raise DomainError("solve_by_divisors requires an irreducible binomial")
    s, d, r = binomial.s, binomial.d, binomial.r
    if s == 1:
        if d == 1:
            # alpha = r is a positive integer; only integer solutions exist
            found, count = integer_scan(AlgebraicTarget.from_rational(r), config)
            sols = () if found is None else (Fraction(found),)
            return SolutionSet(sols, count)
        # alpha is an algebraic integer of degree >= 2: solutions would be
        # integers, whose self-powers have degree 1
        return SolutionSet((), 0)
    s_factors = factorize(s, config)
    bound = denominator_bound(d)
    tested = 0
    found: list[Fraction] = []
    for vec in product(*(range(e + 1) for _, e in s_factors)):
        if not any(vec):
            continue  # lam = 1 cannot satisfy lam^a = s >= 2
        tested += 1
        a = _divisor_exponent(vec, s_factors)
        if a is None:
            continue
        lam = 1
        for v, (p, _) in zip(vec, s_factors):
            lam *= p**v
        for b in range(2, bound + 1):
            tested += 1
            if not powers_equal(b, d, lam, b):
                continue
            if gcd(a, b) != 1:
                continue
            if minimal_polynomial_of_self_power(a, b, config) == binomial:
                found.append(Fraction(a, b))
    return SolutionSet(tuple(sorted(found)), tested)


def solve(
    target: AlgebraicTarget,
    config: Config = DEFAULT_CONFIG,
    cross_check: bool = False,
) -> SolutionSet:
    """Solve x^x = alpha: divisor procedure when the binomial is available,
    enumeration otherwise; cross_check runs both and insists they agree."""
    if target.is_rational:
        return solve_enumerative(target, config)
    result = solve_by_divisors(target.root, config)
    if cross_check:
        other = solve_enumerative(target, config)
        if other.solutions != result.solutions:
            raise AssertionError(
                f"solution procedures disagree: divisors {result.solutions} "
                f"vs enumeration {other.solutions}"
            )
    return result


# ---------------------------------------------------------------------------
# the x^x = y^y and x^y = y^x families
# ---------------------------------------------------------------------------


def equal_self_power_pair(
    m: int, config: Config = DEFAULT_CONFIG
) -> tuple[Fraction, Fraction]:
    """The m-th pair x = (m/(m+1))^m, y = (m/(m+1))^(m+1) with x^x = y^y."""
    if m < 1:
        raise DomainError("m must be >= 1")
    if (m + 1) * (m + 1).bit_length() > config.bit_cap:
        raise ResourceError(f"pair components for m = {m} exceed the bit cap")
    base = Fraction(m, m + 1)
    return base**m, base ** (m + 1)


def commuting_pair(
    m: int, config: Config = DEFAULT_CONFIG
) -> tuple[Fraction, Fraction]:
    """The m-th pair with x^y = y^x: the reciprocals of equal_self_power_pair."""
    x, y = equal_self_power_pair(m, config)
    return 1 / x, 1 / y


def verify_equal_self_powers(x: Fraction, y: Fraction) -> bool:
    """Exact truth of x^x = y^y: both sides raised to den(x)*den(y)."""
    if x <= 0 or y <= 0:
        raise DomainError("x and y must be positive")
    a, b = x.numerator, x.denominator
    c, d = y.numerator, y.denominator
    return powers_equal(a, a * d, c, c * b) and powers_equal(b, a * d, d, c * b)


def verify_commuting(x: Fraction, y: Fraction) -> bool:
    """Exact truth of x^y = y^x: both sides raised to den(x)*den(y)."""
    if x <= 0 or y <= 0:
        raise DomainError("x and y must be positive")
    a, b = x.numerator, x.denominator
    c, d = y.numerator, y.denominator
    return powers_equal(a, c * b, c, a * d) and powers_equal(b, c * b, d, a * d)
