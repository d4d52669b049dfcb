"""Transcendence certificates for real solutions of x^x = q, rational q > 1.

A certificate is decidable evidence: an exact integer scan showing q is not of
the form n^n, and an exact isolating interval around the unique real x > 1
with x^x = q.  Since a positive rational x with rational x^x must be an
integer, the scan makes x irrational; the Gelfond-Schneider theorem, cited as
an external axiom, upgrades irrational to transcendental.  Every comparison
behind the certificate is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import Ordering, compare_self_power_to_rational
from .config import DEFAULT_CONFIG, Config
from .errors import DomainError, ResourceError, UnsupportedInputError


@dataclass(frozen=True)
class Certificate:
    """Exact evidence that the real solution of x^x = q is transcendental."""

    q: Fraction
    integer_scan_trace: tuple[tuple[int, Ordering], ...]
    interval: tuple[Fraction, Fraction]
    statement: str

    def __post_init__(self):
        if self.q <= 1:
            raise DomainError("certificates cover q > 1 only")
        lo, hi = self.interval
        if not lo < hi:
            raise DomainError("certificate interval must be nonempty")


def _scan_integers(q: Fraction, config: Config) -> list[tuple[int, Ordering]]:
    trace = []
    n = 1
    while True:
        c = compare_self_power_to_rational(Fraction(n), q, config)
        trace.append((n, c))
        if c is not Ordering.LESS:
            return trace
        n += 1


def _bisect(q: Fraction, width: Fraction, config: Config) -> tuple[Fraction, Fraction]:
    lo = Fraction(1)
    hi = Fraction(max(2, -(-q.numerator // q.denominator)))
    # x^x is strictly increasing on [1, inf); these endpoints straddle q
    assert compare_self_power_to_rational(lo, q, config) is Ordering.LESS
    assert compare_self_power_to_rational(hi, q, config) is Ordering.GREATER
    steps = 0
    while hi - lo > width:
        if steps >= config.max_bisect_steps:
            raise ResourceError("bisection iteration cap exceeded")
        mid = (lo + hi) / 2
        c = compare_self_power_to_rational(mid, q, config)
        # Equal cannot happen: a rational x with rational x^x is an integer,
        # and the scan has excluded the integers
        assert c is not Ordering.EQUAL
        if c is Ordering.LESS:
            lo = mid
        else:
            hi = mid
        steps += 1
    return lo, hi


def bisect_preimage(
    q, width, config: Config = DEFAULT_CONFIG
) -> tuple[Fraction, Fraction]:
    """Exact isolating interval for the real x > 1 with x^x = q.

    Returns rationals lo < hi with hi - lo <= width, lo^lo < q and hi^hi > q,
    every comparison exact; midpoints stay dyadic to control denominator
    growth.  Refused when q = n^n has an exact integer solution.
    """
    q = Fraction(q)
    width = Fraction(width)
    if q <= 1:
        raise UnsupportedInputError(f"bisection covers q > 1 only, got {q}")
    if width <= 0:
        raise DomainError("width must be positive")
    trace = _scan_integers(q, config)
    if trace[-1][1] is Ordering.EQUAL:
        raise DomainError(
            f"x^x = {q} has the exact solution x = {trace[-1][0]}; bisection refused"
        )
    return _bisect(q, width, config)


def _statement(q: Fraction, scanned: int, lo: Fraction, hi: Fraction) -> str:
    return (
        f"The equation x^x = {q} has a unique real solution x > 1, isolated by "
        f"the exact bracket ({lo}, {hi}). Any positive rational x with x^x "
        f"rational must be an integer, and the scan over n = 1..{scanned} shows "
        f"n^n = {q} has no integer solution, so x is irrational. By the "
        f"Gelfond-Schneider theorem (assumed as an external axiom), an "
        f"irrational x > 1 with x^x rational is transcendental."
    )


def classify_preimage(
    q, width=None, config: Config = DEFAULT_CONFIG
) -> int | Certificate:
    """The integer n with n^n = q when one exists; otherwise a transcendence
    certificate for the unique real x > 1 with x^x = q.  Requires q > 1."""
    q = Fraction(q)
    if q <= 1:
        raise UnsupportedInputError(f"classification covers q > 1 only, got {q}")
    trace = _scan_integers(q, config)
    last_n, last = trace[-1]
    if last is Ordering.EQUAL:
        return last_n
    width = config.bisect_width if width is None else Fraction(width)
    lo, hi = _bisect(q, width, config)
    return Certificate(
        q=q,
        integer_scan_trace=tuple(trace),
        interval=(lo, hi),
        statement=_statement(q, last_n, lo, hi),
    )
