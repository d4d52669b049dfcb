"""Integer/rational primitive tests: examples, brute-force oracles, properties."""

import random
from fractions import Fraction
from math import gcd, isqrt

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from selfpower import (
    Config,
    DomainError,
    Ordering,
    PreconditionError,
    ResourceError,
    compare_power_products,
    compare_self_power_to_rational,
    compare_self_power_to_root,
    factorize,
    integer_kth_root,
    is_prime,
    lambda_decompose,
    padic_valuation,
    powers_equal,
    reduce_fraction,
)


def trial_division_factorize(n):
    """Independent factorization oracle for small n."""
    out = []
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def trial_is_prime(n):
    if n < 2:
        return False
    return all(n % p for p in range(2, isqrt(n) + 1))


class TestReduce:
    def test_examples(self):
        assert reduce_fraction(2, 4) == Fraction(1, 2)
        assert reduce_fraction(-3, -6) == Fraction(1, 2)
        assert reduce_fraction(0, 7) == Fraction(0, 1)

    def test_zero_denominator(self):
        with pytest.raises(DomainError):
            reduce_fraction(1, 0)

    @given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6).filter(bool))
    def test_reduced_invariants(self, p, q):
        f = reduce_fraction(p, q)
        assert f.denominator >= 1
        assert gcd(abs(f.numerator), f.denominator) == 1
        assert f * q == p


class TestFactorize:
    def test_examples(self):
        assert factorize(1) == ()
        assert factorize(12) == ((2, 2), (3, 1))
        assert 3**8 == 6561  # oracle by repeated squaring
        assert factorize(6561) == ((3, 8),)

    def test_rejects_zero(self):
        with pytest.raises(DomainError):
            factorize(0)

    @given(st.integers(1, 10**6))
    @settings(max_examples=300)
    def test_matches_trial_division(self, n):
        assert factorize(n) == trial_division_factorize(n)

    @given(st.integers(1, 2**64))
    @settings(max_examples=60, deadline=None)
    def test_reconstructs_and_is_prime(self, n):
        factors = factorize(n)
        value = 1
        for p, e in factors:
            assert e >= 1
            assert is_prime(p)
            value *= p**e
        assert value == n
        assert [p for p, _ in factors] == sorted(p for p, _ in factors)

    def test_large_semiprime(self):
        p, q = 1_000_003, 1_000_033
        assert factorize(p * q) == ((p, 1), (q, 1))

    def test_budget_exhaustion(self):
        # two 120-bit primes; a budget this small cannot split the product
        p = 1_225_940_852_714_443_485_428_456_866_477_129_349
        q = 947_243_141_625_855_928_478_791_872_949_100_783
        assert is_prime(p) and is_prime(q)
        with pytest.raises(ResourceError):
            factorize(p * q, Config(factor_budget=50))


class TestPrimality:
    @given(st.integers(0, 200_000))
    @settings(max_examples=300)
    def test_matches_trial_division(self, n):
        assert is_prime(n) == trial_is_prime(n)

    def test_carmichael_numbers(self):
        for n in (561, 1105, 1729, 2465, 6601, 8911):
            assert not is_prime(n)


class TestPadicValuation:
    def test_examples(self):
        assert padic_valuation(2, 12) == 2
        assert padic_valuation(5, 12) == 0
        assert padic_valuation(3, 6561) == 8

    def test_requires_prime(self):
        with pytest.raises(DomainError):
            padic_valuation(4, 12)

    @given(st.sampled_from([2, 3, 5, 7, 11]), st.integers(1, 10**9))
    def test_exact_exponent(self, p, n):
        v = padic_valuation(p, n)
        assert n % p**v == 0
        assert n % p ** (v + 1) != 0


class TestIntegerKthRoot:
    def test_examples(self):
        assert integer_kth_root(4096, 4) == 8
        assert 8**4 == 4096
        assert integer_kth_root(10, 2) is None
        assert integer_kth_root(1, 999) == 1

    @given(st.integers(0, 10**9), st.integers(1, 40))
    def test_round_trip(self, m, k):
        assert integer_kth_root(m**k, k) == m

    @given(st.integers(1, 10**12), st.integers(2, 8))
    @settings(max_examples=300, deadline=None)
    def test_absence_is_real(self, n, k):
        root = integer_kth_root(n, k)
        if root is None:
            # bracket the would-be root (float seed, exact integer walk)
            # and confirm neither side hits n
            lo = max(1, int(round(n ** (1.0 / k))) - 2)
            while lo**k > n:
                lo -= 1
            while (lo + 1) ** k <= n:
                lo += 1
            assert lo**k < n < (lo + 1) ** k
        else:
            assert root**k == n


class TestPowersEqual:
    @given(
        st.integers(1, 50),
        st.integers(0, 12),
        st.integers(1, 50),
        st.integers(0, 12),
    )
    def test_matches_direct_computation(self, x, p, y, q):
        assert powers_equal(x, p, y, q) == (x**p == y**q)

    def test_huge_exponents_without_materialising(self):
        assert powers_equal(4, 3 * 10**12, 8, 2 * 10**12)
        assert not powers_equal(4, 3 * 10**12, 8, 2 * 10**12 + 1)


class TestLambdaDecompose:
    def test_examples(self):
        assert lambda_decompose(16, 8, 3, 4) == 2
        assert (2**4, 2**3) == (16, 8) and 16**3 == 8**4 == 4096
        assert lambda_decompose(1, 1, 5, 7) == 1
        assert lambda_decompose(9, 27, 3, 2) == 3
        assert 9**3 == 27**2 == 729

    def test_precondition_violation(self):
        with pytest.raises(PreconditionError):
            lambda_decompose(4, 9, 2, 3)

    def test_coprimality_required(self):
        with pytest.raises(DomainError):
            lambda_decompose(4, 4, 2, 2)

    def test_brute_force_small(self):
        # scaled-down version of the exhaustive acceptance sweep
        for a in range(1, 5):
            for b in range(1, 5):
                if gcd(a, b) != 1:
                    continue
                for lam in range(1, 20):
                    x, y = lam**b, lam**a
                    if x > 4000 or y > 4000:
                        break
                    assert lambda_decompose(x, y, a, b) == lam


class TestSelfPowerComparators:
    def test_rational_examples(self):
        assert (
            compare_self_power_to_rational(Fraction(1, 2), Fraction(1, 2))
            is Ordering.GREATER
        )
        assert 1**1 * 2**2 == 4 > 2 == 2**1 * 1**2  # the cross form
        assert compare_self_power_to_rational(Fraction(1), Fraction(1)) is Ordering.EQUAL
        assert compare_self_power_to_rational(Fraction(2), Fraction(4)) is Ordering.EQUAL

    def test_root_examples(self):
        assert compare_self_power_to_root(Fraction(1, 2), 2, 1, 2) is Ordering.EQUAL
        assert compare_self_power_to_root(Fraction(1, 4), 2, 1, 2) is Ordering.EQUAL
        assert compare_self_power_to_root(Fraction(2), 1, 3, 1) is Ordering.GREATER

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            compare_self_power_to_rational(Fraction(-1, 2), Fraction(1, 2))
        with pytest.raises(DomainError):
            compare_self_power_to_root(Fraction(1, 2), 2, 2, 4)  # gcd(r, s) != 1

    def test_oracle_agreement_sampled(self):
        # 50-digit numeric oracle; disagreement only tolerated inside 1e-30
        mp.mp.dps = 50
        rng = random.Random(12345)
        for _ in range(400):
            t = Fraction(rng.randint(1, 50), rng.randint(1, 50))
            q = Fraction(rng.randint(1, 50), rng.randint(1, 50))
            got = compare_self_power_to_rational(t, q)
            tt = mp.mpf(t.numerator) / t.denominator
            qq = mp.mpf(q.numerator) / q.denominator
            gap = tt**tt - qq
            if abs(gap) > mp.mpf("1e-30"):
                expected = Ordering.GREATER if gap > 0 else Ordering.LESS
                assert got is expected, (t, q, got, gap)

    def test_consistency_at_degree_one(self):
        rng = random.Random(99)
        for _ in range(200):
            t = Fraction(rng.randint(1, 30), rng.randint(1, 30))
            q = Fraction(rng.randint(1, 30), rng.randint(1, 30))
            assert compare_self_power_to_rational(t, q) is compare_self_power_to_root(
                t, 1, q.numerator, q.denominator
            )

    def test_huge_dyadic_denominator(self):
        # comparisons far beyond any materialisable power
        t = Fraction(3_351_079_888, 2**31)
        assert compare_self_power_to_rational(t, Fraction(2)) in (
            Ordering.LESS,
            Ordering.GREATER,
        )

    def test_log_path_matches_direct(self):
        rng = random.Random(5)
        tiny = Config(bit_cap=1)
        for _ in range(300):
            t = Fraction(rng.randint(1, 40), rng.randint(1, 40))
            q = Fraction(rng.randint(1, 40), rng.randint(1, 40))
            assert compare_self_power_to_rational(
                t, q, tiny
            ) is compare_self_power_to_rational(t, q)


class TestComparePowerProducts:
    def test_empty_products(self):
        assert compare_power_products([], []) is Ordering.EQUAL
        assert compare_power_products([(2, 1)], [(1, 5)]) is Ordering.GREATER

    def test_rejects_bad_entries(self):
        with pytest.raises(DomainError):
            compare_power_products([(0, 1)], [(2, 1)])

    @given(
        st.lists(st.tuples(st.integers(1, 20), st.integers(0, 10)), max_size=3),
        st.lists(st.tuples(st.integers(1, 20), st.integers(0, 10)), max_size=3),
    )
    @settings(max_examples=300)
    def test_matches_direct_products(self, lhs, rhs):
        lprod = rprod = 1
        for b, e in lhs:
            lprod *= b**e
        for b, e in rhs:
            rprod *= b**e
        expected = Ordering.of_sign((lprod > rprod) - (lprod < rprod))
        assert compare_power_products(lhs, rhs) is expected
