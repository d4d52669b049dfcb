"""Minimal polynomials of self-powers (a/b)^(a/b), and binomial shape checks.

The minimal polynomial over the integers of (a/b)^(a/b), for coprime positive
a and b, is always a binomial s*x^d - r; this module constructs it in closed
form from the prime factorizations of a and b, recognises the binomial shape
in a general integer polynomial, and decides irreducibility of positive
binomials by the classical prime-power criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import Factorization, factorize, integer_kth_root
from .config import DEFAULT_CONFIG, Config
from .errors import DomainError, ResourceError


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; coeffs[k] is the coefficient of x^k."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError("empty polynomial")
        if self.coeffs[-1] == 0:
            raise DomainError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1]

    @staticmethod
    def from_coefficients(coeffs) -> "IntPolynomial":
        """Build from an iterable, stripping trailing zero coefficients."""
        cs = list(coeffs)
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        return IntPolynomial(tuple(cs))


@dataclass(frozen=True)
class BinomialMinPoly:
    """The binomial s*x^d - r with s, d, r >= 1 and gcd(r, s) = 1.

    This is the only minimal-polynomial shape that admits rational solutions
    of x^x = alpha; its unique positive real root is (r/s)^(1/d).
    """

    s: int
    d: int
    r: int

    def __post_init__(self):
        if self.s < 1 or self.d < 1 or self.r < 1:
            raise DomainError("binomial needs s, d, r >= 1")
        if gcd(self.r, self.s) != 1:
            raise DomainError(f"gcd(r, s) must be 1, got gcd({self.r}, {self.s})")

    def as_polynomial(self) -> IntPolynomial:
        coeffs = [0] * (self.d + 1)
        coeffs[0] = -self.r
        coeffs[self.d] = self.s
        return IntPolynomial(tuple(coeffs))

    def root_as_rational(self) -> Fraction | None:
        """The positive root as a rational, available exactly when d = 1."""
        return Fraction(self.r, self.s) if self.d == 1 else None


def _exponent_gcd(b: int, fa: Factorization, fb: Factorization) -> int:
    g = b
    for _, e in fa:
        g = gcd(g, e)
    for _, e in fb:
        g = gcd(g, e)
    return g


def minimal_polynomial_of_self_power(
    a: int, b: int, config: Config = DEFAULT_CONFIG
) -> BinomialMinPoly:
    """Minimal polynomial of (a/b)^(a/b) over the integers, for coprime a, b >= 1.

    With g = gcd(b, all prime exponents of a and of b), the result is
    s = b^(a/g), d = b/g, r = a^(a/g).  The fractional exponent a/g is applied
    through the prime factorizations: g divides every prime exponent, so each
    resulting exponent e//g * a is an integer.
    """
    if a < 1 or b < 1:
        raise DomainError("need a, b >= 1")
    if gcd(a, b) != 1:
        raise DomainError(f"a and b must be coprime, got gcd({a}, {b}) != 1")
    fa = factorize(a, config)
    fb = factorize(b, config)
    g = _exponent_gcd(b, fa, fb)
    est_bits = (a // g + 1) * (b.bit_length() + a.bit_length())
    if est_bits > config.bit_cap:
        raise ResourceError(f"minimal polynomial of ({a}/{b})^({a}/{b}) exceeds bit cap")
    s = r = 1
    for q, e in fb:
        s *= q ** (e // g * a)
    for p, e in fa:
        r *= p ** (e // g * a)
    return BinomialMinPoly(s=s, d=b // g, r=r)


def degree_of_self_power(a: int, b: int, config: Config = DEFAULT_CONFIG) -> int:
    """Degree of (a/b)^(a/b) as an algebraic number: b/g."""
    if a < 1 or b < 1:
        raise DomainError("need a, b >= 1")
    if gcd(a, b) != 1:
        raise DomainError(f"a and b must be coprime, got gcd({a}, {b}) != 1")
    fa = factorize(a, config)
    fb = factorize(b, config)
    return b // _exponent_gcd(b, fa, fb)


def as_binomial(poly: IntPolynomial) -> BinomialMinPoly | None:
    """Recognise s*x^d - r in a non-constant integer polynomial.

    The sign is normalised so the leading coefficient is positive; the content
    must be 1 (a non-primitive polynomial is never minimal) and every middle
    coefficient zero.  Returns None when the shape does not match.
    """
    if poly.degree < 1:
        raise DomainError("as_binomial requires a non-constant polynomial")
    coeffs = list(poly.coeffs)
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    content = 0
    for c in coeffs:
        content = gcd(content, c)
    if content != 1:
        return None
    if any(c != 0 for c in coeffs[1:-1]):
        return None
    if coeffs[0] >= 0:
        return None
    return BinomialMinPoly(s=coeffs[-1], d=len(coeffs) - 1, r=-coeffs[0])


def is_irreducible_binomial(
    binomial: BinomialMinPoly, config: Config = DEFAULT_CONFIG
) -> bool:
    """Irreducibility of s*x^d - r over the rationals.

    The classical criterion for x^d - c: reducible exactly when c is a p-th
    power for some prime p dividing d, or when 4 | d and c = -4*h^4.  Here
    c = r/s > 0, so the second case cannot arise, and c is a p-th power
    exactly when both r and s are.
    """
    for p, _ in factorize(binomial.d, config):
        if (
            integer_kth_root(binomial.r, p) is not None
            and integer_kth_root(binomial.s, p) is not None
        ):
            return False
    return True
