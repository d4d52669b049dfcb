"""Rationality analysis of x^P(x): exact evaluation, power extraction,
the leading-coefficient denominator bound, and the bounded sweep."""

from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from selfpower import (
    DomainError,
    IntPolynomial,
    analyze_poly_power,
    enumerate_rational_powers,
    eval_polynomial,
    leading_denominator_bound,
    rational_power,
    zero_exponent_denominator_bound,
)

P_2X = IntPolynomial((0, 2))
P_X = IntPolynomial((0, 1))
P_X2_PLUS_1 = IntPolynomial((1, 0, 1))
P_4X2 = IntPolynomial((0, 0, 4))


class TestEvalPolynomial:
    def test_examples(self):
        assert eval_polynomial(P_2X, Fraction(1, 4)) == Fraction(1, 2)
        assert eval_polynomial(P_X2_PLUS_1, Fraction(2, 3)) == Fraction(13, 9)
        assert eval_polynomial(P_4X2, Fraction(3, 2)) == 9

    @given(
        st.lists(st.integers(-50, 50), min_size=1, max_size=6).filter(
            lambda cs: cs[-1] != 0
        ),
        st.fractions(),
    )
    @settings(max_examples=200)
    def test_denominator_divides_power(self, coeffs, x):
        poly = IntPolynomial(tuple(coeffs))
        value = eval_polynomial(poly, Fraction(x))
        b = Fraction(x).denominator
        assert b**poly.degree % value.denominator == 0


class TestRationalPower:
    def test_examples(self):
        assert rational_power(Fraction(4, 9), Fraction(1, 2)) == Fraction(2, 3)
        assert rational_power(Fraction(2), Fraction(1, 2)) is None
        assert rational_power(Fraction(8, 27), Fraction(-2, 3)) == Fraction(9, 4)
        assert rational_power(Fraction(5, 3), Fraction(0)) == 1

    def test_rejects_nonpositive_base(self):
        with pytest.raises(DomainError):
            rational_power(Fraction(-4, 9), Fraction(1, 2))

    @given(
        st.integers(1, 30),
        st.integers(1, 30),
        st.integers(-8, 8),
        st.integers(1, 5),
    )
    @settings(max_examples=300)
    def test_value_satisfies_power_identity(self, u, v, p, q):
        base = Fraction(u, v)
        exponent = Fraction(p, q)
        value = rational_power(base, exponent)
        if value is not None:
            assert value > 0
            assert value ** exponent.denominator == base**exponent.numerator

    def test_oracle_agreement(self):
        mp.mp.dps = 50
        cases = [
            (Fraction(4, 9), Fraction(1, 2)),
            (Fraction(8, 27), Fraction(-2, 3)),
            (Fraction(27, 8), Fraction(4, 3)),
            (Fraction(16), Fraction(3, 4)),
        ]
        for base, exponent in cases:
            value = rational_power(base, exponent)
            assert value is not None
            got = mp.mpf(value.numerator) / value.denominator
            expected = mp.power(
                mp.mpf(base.numerator) / base.denominator,
                mp.mpf(exponent.numerator) / exponent.denominator,
            )
            assert abs(got - expected) < mp.mpf("1e-40") * max(1, abs(expected))


class TestAnalyzePolyPower:
    def test_examples(self):
        assert analyze_poly_power(P_2X, Fraction(1, 4)).rational == Fraction(1, 2)
        assert analyze_poly_power(P_X, Fraction(1, 2)).rational is None
        verdict = analyze_poly_power(IntPolynomial((0, 0, 1)), Fraction(3))
        assert verdict.rational == 19683 and verdict.exponent == 9

    def test_zero_exponent_case(self):
        # P(x) = 0 forces the value 1 and den(x) <= |A|
        poly = IntPolynomial((-1, 2))  # 2x - 1 vanishes at 1/2
        verdict = analyze_poly_power(poly, Fraction(1, 2))
        assert verdict.exponent == 0 and verdict.rational == 1
        assert Fraction(1, 2).denominator <= abs(poly.leading_coefficient)

    @given(
        st.integers(1, 9),
        st.integers(2, 9),
        st.lists(st.integers(-9, 9), min_size=1, max_size=3).filter(
            lambda cs: cs[-1] != 0
        ),
    )
    @settings(max_examples=150)
    def test_zero_exponent_invariant(self, a, b, q_coeffs):
        # plant a root: P = (b*x - a) * Q vanishes at x = a/b, so the verdict
        # is 1 and den(x) <= |leading(P)|
        from math import gcd as _gcd

        if _gcd(a, b) != 1:
            return
        root_factor = [-a, b]
        coeffs = [0] * (len(q_coeffs) + 1)
        for i, c in enumerate(root_factor):
            for j, d in enumerate(q_coeffs):
                coeffs[i + j] += c * d
        poly = IntPolynomial(tuple(coeffs))
        verdict = analyze_poly_power(poly, Fraction(a, b))
        assert verdict.exponent == 0
        assert verdict.rational == 1
        assert b <= abs(poly.leading_coefficient)

    def test_requires_nonconstant(self):
        with pytest.raises(DomainError):
            analyze_poly_power(IntPolynomial((3,)), Fraction(1, 2))

    def test_requires_positive_x(self):
        with pytest.raises(DomainError):
            analyze_poly_power(P_2X, Fraction(-1, 2))


class TestLeadingDenominatorBound:
    @pytest.mark.parametrize(
        "leading, expected",
        [(1, 1), (-1, 1), (2, 5), (-2, 5), (4, 23), (3, 14)],
    )
    def test_values(self, leading, expected):
        # 3|A|log2|A|: exactly 6 for |A| = 2 (strictly below -> 5) and exactly
        # 24 for |A| = 4 (-> 23); 14.26 for |A| = 3 (-> 14)
        assert leading_denominator_bound(leading) == expected

    def test_numeric_cross_check(self):
        mp.mp.dps = 40
        for a in range(2, 200):
            bound = leading_denominator_bound(a)
            v = 3 * a * mp.log(a, 2)
            assert bound < v  # every returned b satisfies the strict inequality
            assert bound + 1 >= v  # and nothing below the bound is excluded

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            leading_denominator_bound(0)

    def test_zero_exponent_accessor(self):
        assert zero_exponent_denominator_bound(-7) == 7
        with pytest.raises(DomainError):
            zero_exponent_denominator_bound(0)


class TestEnumeration:
    def test_example_sweep(self):
        hits = enumerate_rational_powers(P_2X, 9)
        as_pairs = [(str(x), str(v)) for x, v in hits]
        assert ("1/2", "1/2") in as_pairs
        assert ("1/4", "1/2") in as_pairs
        assert ("3/2", "27/8") in as_pairs
        assert ("9/4", "19683/512") in as_pairs
        assert all(x.denominator in (2, 4) for x, _ in hits)

    def test_full_expected_hits(self):
        hits = enumerate_rational_powers(P_2X, 9)
        expected = [
            (Fraction(1, 2), Fraction(1, 2)),
            (Fraction(3, 2), Fraction(27, 8)),
            (Fraction(5, 2), Fraction(3125, 32)),
            (Fraction(7, 2), Fraction(823543, 128)),
            (Fraction(9, 2), Fraction(387420489, 512)),
            (Fraction(1, 4), Fraction(1, 2)),
            (Fraction(9, 4), Fraction(19683, 512)),
        ]
        assert hits == expected  # ordered by (b, a)

    def test_monic_polynomial_has_no_fractional_hits(self):
        assert enumerate_rational_powers(P_X2_PLUS_1, 60) == []

    def test_monic_widened_sweep_still_empty(self):
        assert enumerate_rational_powers(P_X2_PLUS_1, 25, b_max=25) == []

    def test_quartic_example(self):
        hits = enumerate_rational_powers(P_4X2, 3)
        assert (Fraction(3, 2), Fraction(19683, 512)) in hits

    def test_hits_verify_exactly(self):
        for x, value in enumerate_rational_powers(P_2X, 30, b_max=15):
            exponent = eval_polynomial(P_2X, x)
            assert value**exponent.denominator == x**exponent.numerator
