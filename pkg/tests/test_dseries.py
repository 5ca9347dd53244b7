import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaorbit.dseries import DirichletSeries, format_exact, zeta_power

from oracles import dirichlet_convolve_brute, moebius_brute

TERMS = 30


def dseries_strategy(terms=TERMS, unit=False):
    coeff = st.integers(min_value=-9, max_value=9)
    lead = st.sampled_from([1, -1]) if unit else coeff
    return st.builds(
        lambda c1, rest: DirichletSeries([c1] + rest),
        lead,
        st.lists(coeff, min_size=terms - 1, max_size=terms - 1),
    )


class TestFormatExact:
    def test_formats(self):
        assert format_exact(5) == "5"
        assert format_exact(-12) == "-12"
        assert format_exact(Fraction(1, 2)) == "1/2"
        assert format_exact(Fraction(4, 2)) == "2"

    def test_rejects_bool(self):
        with pytest.raises(TypeError):
            format_exact(True)


class TestConstruction:
    def test_basic_accessors(self):
        s = DirichletSeries([1, 2, 3])
        assert s.terms == 3
        assert s[1] == 1 and s[3] == 3
        assert s.coefficients() == (1, 2, 3)
        with pytest.raises(IndexError):
            s[4]
        with pytest.raises(IndexError):
            s[0]

    def test_named_series(self):
        n = 20
        assert DirichletSeries.zeta(n).coefficients() == (1,) * n
        assert DirichletSeries.one(n).coefficients() == (1,) + (0,) * (n - 1)
        zm1 = DirichletSeries.zeta_minus_one(n)
        assert zm1.coefficients() == (0,) + (1,) * (n - 1)
        mu = DirichletSeries.moebius(n)
        assert mu.coefficients() == tuple(moebius_brute(k) for k in range(1, n + 1))
        sq = DirichletSeries.from_function(n, lambda k: k * k)
        assert sq[5] == 25


class TestConvolution:
    @given(dseries_strategy(), dseries_strategy())
    @settings(max_examples=50)
    def test_matches_brute_force(self, a, b):
        got = a * b
        want = dirichlet_convolve_brute([0] + list(a.coefficients()),
                                        [0] + list(b.coefficients()))
        assert list(got.coefficients()) == want[1:]

    @given(dseries_strategy(), dseries_strategy())
    @settings(max_examples=40)
    def test_commutative(self, a, b):
        assert a * b == b * a

    @given(dseries_strategy(), dseries_strategy(), dseries_strategy())
    @settings(max_examples=40)
    def test_associative_and_distributive(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(dseries_strategy())
    def test_one_is_identity(self, a):
        assert a * DirichletSeries.one(a.terms) == a

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            DirichletSeries([1, 2]) * DirichletSeries([1, 2, 3])


class TestInverse:
    def test_zeta_inverse_is_moebius(self):
        n = 40
        assert DirichletSeries.zeta(n).inverse() == DirichletSeries.moebius(n)

    @given(dseries_strategy(unit=True))
    @settings(max_examples=50)
    def test_roundtrip_integer_unit(self, a):
        inv = a.inverse()
        assert a * inv == DirichletSeries.one(a.terms)
        # unit leading coefficient keeps the inverse integral
        assert all(isinstance(c, int) for c in inv.coefficients())

    def test_rational_lead(self):
        a = DirichletSeries([2, 3, 1, 0, 5])
        inv = a.inverse()
        assert a * inv == DirichletSeries.one(5)
        assert inv[1] == Fraction(1, 2)

    def test_zero_lead_rejected(self):
        with pytest.raises(ValueError):
            DirichletSeries([0, 1, 2]).inverse()


class TestPowers:
    def test_zeta_squared_counts_divisors(self):
        n = 60
        sq = zeta_power(2, n)
        for m in range(1, n + 1):
            assert sq[m] == sum(1 for d in range(1, m + 1) if m % d == 0)

    def test_negative_powers(self):
        n = 30
        assert zeta_power(-1, n) == DirichletSeries.moebius(n)
        assert zeta_power(-2, n) * zeta_power(2, n) == DirichletSeries.one(n)
        assert zeta_power(0, n) == DirichletSeries.one(n)

    @given(st.integers(min_value=-3, max_value=3))
    def test_power_additivity(self, m):
        n = 24
        assert zeta_power(m, n) * zeta_power(1 - m, n) == DirichletSeries.zeta(n)

    def test_convolution_power_method(self):
        a = DirichletSeries([1, 2, 0, 1, 3, 0, 0, 2])
        assert a.convolution_power(3) == a * a * a
        assert a.convolution_power(-1) == a.inverse()


class TestRestriction:
    def test_keeps_only_supported_indices(self):
        n = 36
        z = DirichletSeries.zeta(n).restrict_to_primes({2, 3})
        for m in range(1, n + 1):
            rest = m
            for p in (2, 3):
                while rest % p == 0:
                    rest //= p
            assert z[m] == (1 if rest == 1 else 0)

    def test_rejects_non_prime(self):
        with pytest.raises(ValueError):
            DirichletSeries.zeta(10).restrict_to_primes({2, 4})

    @given(dseries_strategy(), dseries_strategy())
    @settings(max_examples=40)
    def test_restriction_is_ring_homomorphism(self, a, b):
        omega = {2, 5}
        lhs = (a * b).restrict_to_primes(omega)
        rhs = a.restrict_to_primes(omega) * b.restrict_to_primes(omega)
        assert lhs == rhs


class TestTwist:
    def chi4(self, limit):
        values = {}
        for p in range(2, limit + 1):
            if all(p % q for q in range(2, p)):
                values[p] = 0 if p == 2 else (1 if p % 4 == 1 else -1)
        return values

    def test_completely_multiplicative_values(self):
        n = 30
        z = DirichletSeries.zeta(n).twist(self.chi4(n))
        assert z[2] == 0 and z[4] == 0 and z[6] == 0
        assert z[5] == 1 and z[25] == 1 and z[15] == -1
        assert z[3] == -1 and z[9] == 1 and z[21] == 1

    @given(dseries_strategy(), dseries_strategy())
    @settings(max_examples=40)
    def test_twist_is_ring_homomorphism(self, a, b):
        tw = self.chi4(TERMS)
        assert (a * b).twist(tw) == a.twist(tw) * b.twist(tw)

    def test_missing_prime_rejected(self):
        with pytest.raises(ValueError):
            DirichletSeries.zeta(10).twist({2: 1, 3: 1})  # 5, 7 missing


class TestEvaluate:
    def test_zeta_partial_sums(self):
        n = 4000
        z = DirichletSeries.zeta(n)
        for s, ref in ((2, math.pi ** 2 / 6), (4, math.pi ** 4 / 90)):
            got = z.evaluate(s)
            # truncation tail is below the first omitted term times n/(s-1)
            assert abs(got - ref) < (s - 1) ** -1 * (n ** (1 - s))
            assert abs(got.imag) == 0

    def test_complex_point(self):
        s = DirichletSeries([1, -1, 2])
        got = s.evaluate(1 + 1j)
        want = 1 - (2 ** -(1 + 1j)) + 2 * (3 ** -(1 + 1j))
        assert abs(got - want) < 1e-12


class TestSerialization:
    def test_csv(self):
        s = DirichletSeries([1, Fraction(1, 2), -3])
        assert s.to_csv() == "1,1\n2,1/2\n3,-3\n"

    def test_json_round_trips_and_is_deterministic(self):
        s = DirichletSeries([1, 0, Fraction(-5, 4)])
        text = s.to_json()
        assert text == s.to_json()
        payload = json.loads(text)
        assert payload["terms"] == 3
        assert payload["coefficients"] == ["1", "0", "-5/4"]
