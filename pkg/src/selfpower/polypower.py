"""Rationality of x^P(x) for rational x and integer polynomials P.

For reduced x = a/b and exponent P(x) = p/q in lowest terms, x^P(x) is
rational exactly when a and b are both perfect q-th powers; when it is, the
denominator b is bounded in terms of the leading coefficient A of P alone:
b = 1 for |A| = 1 and b < 3|A|log2|A| otherwise (b <= |A| in the special case
P(x) = 0).  The bounded sweep makes the bound observable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import integer_kth_root, log2_interval
from .config import DEFAULT_CONFIG, Config
from .errors import DomainError, ResourceError
from .minpoly import IntPolynomial


@dataclass(frozen=True)
class RationalityVerdict:
    """Outcome of the rationality analysis of x^P(x).

    exponent is the reduced value P(x); rational is the exact value of
    x^P(x) when that value is rational, None otherwise.
    """

    exponent: Fraction
    rational: Fraction | None


def eval_polynomial(poly: IntPolynomial, x: Fraction) -> Fraction:
    """Exact value P(x); the denominator always divides den(x)^deg(P)."""
    acc = Fraction(0)
    for c in reversed(poly.coeffs):
        acc = acc * x + c
    return acc


def rational_power(
    base: Fraction, exponent: Fraction, config: Config = DEFAULT_CONFIG
) -> Fraction | None:
    """base**exponent when that value is rational, None otherwise.

    base = u/v must be positive and reduced; for exponent p/q in lowest terms
    the value is rational iff u and v are both perfect q-th powers.  Negative
    p reciprocates; exponent 0 gives 1.
    """
    if base <= 0:
        raise DomainError(f"base must be positive, got {base}")
    p, q = exponent.numerator, exponent.denominator
    if p == 0:
        return Fraction(1)
    u, v = base.numerator, base.denominator
    root_u = integer_kth_root(u, q)
    if root_u is None:
        return None
    root_v = integer_kth_root(v, q)
    if root_v is None:
        return None
    bits = abs(p) * max(root_u.bit_length(), root_v.bit_length())
    if bits > config.bit_cap:
        raise ResourceError(f"{base}**{exponent} exceeds the bit cap")
    return Fraction(root_u, root_v) ** p


def analyze_poly_power(
    poly: IntPolynomial, x: Fraction, config: Config = DEFAULT_CONFIG
) -> RationalityVerdict:
    """Exact rationality verdict for x^P(x); requires x > 0 and deg P >= 1."""
    if poly.degree < 1:
        raise DomainError("polynomial must be non-constant")
    if x <= 0:
        raise DomainError(f"x must be positive, got {x}")
    exponent = eval_polynomial(poly, x)
    return RationalityVerdict(
        exponent=exponent, rational=rational_power(x, exponent, config)
    )


def leading_denominator_bound(leading: int) -> int:
    """Largest admissible denominator of x with x^P(x) rational and P(x) != 0.

    1 when |A| = 1; otherwise the largest integer strictly below
    3|A|*log2|A|, with the logarithm rounded outward so that no admissible
    denominator is ever excluded.
    """
    if leading == 0:
        raise DomainError("leading coefficient must be nonzero")
    a = abs(leading)
    if a == 1:
        return 1
    prec = 96
    lo, hi = log2_interval(a, prec)
    v_lo, v_hi = 3 * a * lo, 3 * a * hi
    if v_lo == v_hi and v_lo % (1 << prec) == 0:
        # |A| is a power of two, so 3|A|log2|A| is an exact integer
        return (v_lo >> prec) - 1
    return v_hi >> prec


def zero_exponent_denominator_bound(leading: int) -> int:
    """Denominator bound in the special case P(x) = 0: b <= |A|."""
    if leading == 0:
        raise DomainError("leading coefficient must be nonzero")
    return abs(leading)


def enumerate_rational_powers(
    poly: IntPolynomial,
    a_max: int,
    b_max: int | None = None,
    config: Config = DEFAULT_CONFIG,
) -> list[tuple[Fraction, Fraction]]:
    """All (x, x^P(x)) with rational value, x = a/b reduced, 1 <= a <= a_max
    and 2 <= b <= leading_denominator_bound.

    b_max widens the sweep past the bound (useful to observe its soundness);
    a hit beyond the bound would falsify it and raises AssertionError.
    Results are ordered by (b, a).
    """
    if a_max < 1:
        raise DomainError("a_max must be >= 1")
    if poly.degree < 1:
        raise DomainError("polynomial must be non-constant")
    bound = leading_denominator_bound(poly.leading_coefficient)
    b_hi = bound if b_max is None else b_max
    hits: list[tuple[Fraction, Fraction]] = []
    for b in range(2, b_hi + 1):
        for a in range(1, a_max + 1):
            if gcd(a, b) != 1:
                continue
            verdict = analyze_poly_power(poly, Fraction(a, b), config)
            if verdict.rational is not None:
                if b > bound:
                    raise AssertionError(
                        f"rational value at denominator {b} contradicts the "
                        f"bound {bound} for leading coefficient "
                        f"{poly.leading_coefficient}"
                    )
                hits.append((Fraction(a, b), verdict.rational))
    return hits
