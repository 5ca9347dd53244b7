import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaorbit import exactnum
from zetaorbit.exactnum import (
    FACTORIZATION_GROWTH_EXPONENT,
    FACTORIZATION_GROWTH_EXPONENT_LOWER,
    FactorizationTable,
    big_omega,
    binomial,
    divisors,
    exponent_partition,
    is_prime,
    moebius,
    ordered_factorizations,
    power_bound_holds,
    prime_factorization,
    prime_multiplicity,
    signed_catalan,
    signed_catalan_sequence,
    smallest_prime_factor_sieve,
    verify_growth_exponent_certificate,
    verify_moebius_alternation,
    verify_telescoped_count,
    zeta_lower_bound,
    zeta_upper_bound,
)

from oracles import (
    alpha_brute,
    big_omega_brute,
    catalan_brute,
    divisors_brute,
    moebius_brute,
    ordered_factorizations_brute,
)


class TestBinomial:
    def test_matches_math_comb_on_valid_range(self):
        for a in range(0, 12):
            for b in range(0, a + 1):
                assert binomial(a, b) == math.comb(a, b)

    def test_zero_outside_pascal_triangle(self):
        assert binomial(-1, 0) == 0
        assert binomial(3, 5) == 0
        assert binomial(3, -1) == 0
        assert binomial(-2, -4) == 0


class TestPrimitives:
    def test_is_prime_small(self):
        primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}
        for n in range(1, 31):
            assert is_prime(n) == (n in primes)

    def test_sieve_agrees_with_trial_division(self):
        spf = smallest_prime_factor_sieve(500)
        for n in range(2, 501):
            assert n % spf[n] == 0
            assert is_prime(spf[n])
            assert all(n % p for p in range(2, spf[n]))

    def test_prime_factorization_reconstructs(self):
        for n in range(1, 400):
            fac = prime_factorization(n)
            prod = 1
            for p, e in fac.items():
                assert is_prime(p) and e >= 1
                prod *= p ** e
            assert prod == n

    def test_prime_multiplicity(self):
        assert prime_multiplicity(48, 2) == 4
        assert prime_multiplicity(48, 3) == 1
        assert prime_multiplicity(48, 5) == 0
        with pytest.raises(ValueError):
            prime_multiplicity(48, 4)

    @given(st.integers(min_value=1, max_value=5000))
    def test_big_omega_matches_brute(self, n):
        assert big_omega(n) == big_omega_brute(n)

    @given(st.integers(min_value=1, max_value=5000))
    def test_moebius_matches_brute(self, n):
        assert moebius(n) == moebius_brute(n)

    @given(st.integers(min_value=1, max_value=2000))
    def test_divisors_match_brute(self, n):
        assert divisors(n) == divisors_brute(n)

    def test_exponent_partition(self):
        assert exponent_partition(1) == ()
        assert exponent_partition(12) == (2, 1)
        assert exponent_partition(18) == (2, 1)
        assert exponent_partition(30) == (1, 1, 1)
        assert exponent_partition(1024) == (10,)

    @given(st.integers(min_value=1, max_value=3000))
    def test_exponent_partition_is_sorted_and_complete(self, n):
        lam = exponent_partition(n)
        assert list(lam) == sorted(lam, reverse=True)
        assert sum(lam) == big_omega_brute(n)


class TestSignedCatalan:
    def test_first_values(self):
        assert [signed_catalan(k) for k in range(7)] == [1, 1, -1, 2, -5, 14, -42]

    def test_closed_form_equals_recursion(self):
        seq = signed_catalan_sequence(40)
        for k in range(41):
            assert seq[k] == signed_catalan(k)

    def test_absolute_values_are_catalan(self):
        for k in range(1, 30):
            assert abs(signed_catalan(k)) == catalan_brute(k - 1)

    def test_quadratic_recursion_directly(self):
        # b_n = -sum_{i+j=n, i,j>=1} b_i b_j for n >= 2
        b = signed_catalan_sequence(20)
        for n in range(2, 21):
            assert b[n] == -sum(b[i] * b[n - i] for i in range(1, n))


class TestFactorizationTable:
    def test_counts_match_brute_force_exhaustively(self):
        table = FactorizationTable(300)
        for m in range(1, 301):
            tuples = ordered_factorizations_brute(m)
            by_len = {}
            for t in tuples:
                by_len[len(t)] = by_len.get(len(t), 0) + 1
            for k in range(1, m.bit_length() + 1):
                assert table.count(k, m) == by_len.get(k, 0)

    def test_spot_values(self):
        table = FactorizationTable(64)
        assert table.count(1, 1) == 0
        assert table.count(1, 7) == 1
        assert table.count(2, 12) == 4   # 2*6, 3*4, 4*3, 6*2
        assert table.count(3, 12) == 3   # permutations of (2, 2, 3)
        for k in range(1, 7):
            assert table.count(k, 2 ** k) == 1

    def test_depth_overflow_is_zero_when_provably_zero(self):
        table = FactorizationTable(100, max_k=3)
        assert table.count(5, 16) == 0  # 16 < 2**5
        with pytest.raises(ValueError):
            table.count(5, 64)  # 64 = 2**6 needs a deeper table

    @given(st.integers(min_value=2, max_value=800), st.integers(min_value=2, max_value=6))
    @settings(max_examples=60)
    def test_proper_divisor_recurrence(self, m, k):
        table = FactorizationTable(m, max_k=k)
        total = sum(table.count(k - 1, d) for d in divisors(m) if d < m)
        assert table.count(k, m) == total

    def test_ordered_factorizations_wrapper(self):
        for m in (1, 2, 12, 30, 64):
            for k in (1, 2, 3):
                assert ordered_factorizations(k, m) == alpha_brute(k, m)


class TestTelescopeAndAlternation:
    def test_telescope_identity_brute(self):
        # sum_{i=1}^{k-1} (-1)^(k-1-i) sum_{d|m} alpha_i(d)
        #   = alpha_k(m) + (-1)^k alpha_1(m)
        table = FactorizationTable(200)
        for m in range(2, 201):
            for k in range(2, m.bit_length() + 1):
                lhs = sum(
                    (-1) ** (k - 1 - i) * sum(alpha_brute(i, d) for d in divisors_brute(m))
                    for i in range(1, k)
                )
                rhs = alpha_brute(k, m) + (-1) ** k * alpha_brute(1, m)
                assert lhs == rhs
                assert verify_telescoped_count(m, k, table)

    def test_alternation_identity_brute(self):
        table = FactorizationTable(300)
        for m in range(2, 301):
            total = sum(
                (-1) ** k * alpha_brute(k, m)
                for k in range(1, big_omega_brute(m) + 1)
            )
            expected = (-1) ** big_omega_brute(m) if moebius_brute(m) != 0 else 0
            assert total == expected
            assert verify_moebius_alternation(m, table)


class TestGrowthBound:
    def test_power_bound_exact_boundary(self):
        assert power_bound_holds(8, 4, Fraction(3, 2))       # 8 == 4**1.5
        assert not power_bound_holds(9, 4, Fraction(3, 2))
        assert power_bound_holds(1, 1, Fraction(17287, 10000))

    def test_alpha_growth_bound_sample(self):
        table = FactorizationTable(2048)
        for m in range(2, 2049):
            best = max(
                table.count(k, m) for k in range(1, m.bit_length())
            )
            assert power_bound_holds(best, m, FACTORIZATION_GROWTH_EXPONENT)

    def test_zeta_bounds_bracket_reference_values(self):
        mpmath.mp.dps = 30
        for e in (2, 3, 4):
            lo = zeta_lower_bound(Fraction(e), 64)
            hi = zeta_upper_bound(Fraction(e), 64)
            ref = mpmath.zeta(e)
            assert mpmath.mpf(lo.numerator) / lo.denominator < ref
            assert mpmath.mpf(hi.numerator) / hi.denominator > ref
            assert hi - lo < Fraction(1, 1000)

    def test_certificate_brackets_two(self):
        # zeta at the lower exponent exceeds 2, at the upper stays below 2
        lo_exp = FACTORIZATION_GROWTH_EXPONENT_LOWER
        hi_exp = FACTORIZATION_GROWTH_EXPONENT
        assert zeta_lower_bound(lo_exp, 512) > 2
        assert zeta_upper_bound(hi_exp, 512) < 2
        assert verify_growth_exponent_certificate()


def test_combinatorics_suite_small():
    report = exactnum.verify_combinatorics_suite(max_m=500, max_k=8, catalan_max=32)
    assert report["pass"]
    assert len(report["checks"]) == 5
