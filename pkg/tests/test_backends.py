"""Equivalence of the compiled scan kernel and its pure-Python twin."""

import random
from math import gcd

import pytest

from selfpower import _backend, denominator_bound, minimal_polynomial_of_self_power

requires_compiled = pytest.mark.skipif(
    _backend.BACKEND != "compiled", reason="compiled kernel not built"
)


def both(d, n_mult, b_lo, b_hi, r, s):
    pure = _backend.scan_denominators(d, n_mult, b_lo, b_hi, r, s, force="pure")
    compiled = _backend.scan_denominators(d, n_mult, b_lo, b_hi, r, s, force="compiled")
    return pure, compiled


@requires_compiled
def test_identical_on_self_power_targets():
    rng = random.Random(2024)
    for _ in range(60):
        a = rng.randint(1, 30)
        b = rng.randint(1, 30)
        if gcd(a, b) != 1:
            continue
        binomial = minimal_polynomial_of_self_power(a, b)
        if binomial.d == 1:
            continue
        bound = denominator_bound(binomial.d)
        pure, compiled = both(binomial.d, 2, 2, bound, binomial.r, binomial.s)
        assert pure == compiled, (a, b)


@requires_compiled
def test_identical_on_adversarial_targets():
    cases = [
        (2, 1, 2, 5, 1, 2),
        (9, 1, 2, 79, 256, 6561),
        (3, 4, 2, 13, 5, 2),
        (40, 1, 2, 590, 1, 40),
        (2, 10, 2, 5, 7, 3),
    ]
    for d, n_mult, b_lo, b_hi, r, s in cases:
        pure, compiled = both(d, n_mult, b_lo, b_hi, r, s)
        assert pure == compiled, (d, r, s)


@requires_compiled
def test_auto_dispatch_falls_back_when_oversized():
    # a target whose bit-length windows overflow int64 must take the pure path
    r = 1
    s = 1 << (1 << 22)
    assert not _backend._fits_compiled(2, 1 << 41, 5, r, s)
    hits, tested = _backend.scan_denominators(2, 2, 2, 5, 7, 3)
    assert tested == sum(
        1 for b in range(2, 6) for a in range(1, 2 * b + 1) if gcd(a, b) == 1
    )
    assert hits == []


def test_pure_backend_always_available():
    hits, tested = _backend.scan_denominators(2, 1, 2, 5, 1, 2, force="pure")
    assert hits == [(1, 2), (1, 4)]
    assert tested == 9


def test_kernels_match_brute_force_ground_truth():
    # direct cross-multiplied comparison is the independent oracle
    rng = random.Random(31337)
    backends = ["pure"] if _backend.BACKEND != "compiled" else ["pure", "compiled"]
    checked = 0
    while checked < 120:
        d = rng.randint(1, 6)
        n_mult = rng.randint(0, 3)
        b_hi = rng.randint(2, 12)
        r, s = rng.randint(1, 40), rng.randint(1, 40)
        if gcd(r, s) != 1:
            continue
        hits = []
        tested = 0
        for b in range(2, b_hi + 1):
            for a in range(1, n_mult * b + 1):
                if gcd(a, b) != 1:
                    continue
                tested += 1
                if a ** (a * d) * s**b == b ** (a * d) * r**b:
                    hits.append((a, b))
        for force in backends:
            got = _backend.scan_denominators(d, n_mult, 2, b_hi, r, s, force=force)
            assert got == (hits, tested), (force, d, n_mult, b_hi, r, s)
        checked += 1
