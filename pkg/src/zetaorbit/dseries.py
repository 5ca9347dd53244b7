"""Truncated Dirichlet series under the divisor-convolution product.

A series is the coefficient vector a_1..a_N of sum a_n * n**(-s).  The ring
product is Dirichlet convolution (a*b)_n = sum over ij = n of a_i * b_j,
which is exact on a common truncation: coefficients through N of the product
depend only on coefficients through N of the factors.

Coefficients may be ints, Fractions, or complex numbers through the same
code path; exact scalars are the default and floats appear only in
evaluate(), which sums the series numerically at a point.
"""

from __future__ import annotations

import cmath
import json
from fractions import Fraction

from zetaorbit.exactnum import is_prime, moebius, smallest_prime_factor_sieve


def format_exact(value) -> str:
    """Decimal string for integers, "p/q" for non-integer rationals."""
    if isinstance(value, bool):
        raise TypeError("bool is not a series scalar")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(value)


class DirichletSeries:
    """Coefficients a_1..a_N of a Dirichlet series, truncated at N terms."""

    __slots__ = ("_a",)

    def __init__(self, coefficients):
        coeffs = list(coefficients)
        if not coeffs:
            raise ValueError("a Dirichlet series needs at least the n = 1 term")
        self._a = [0] + coeffs

    @property
    def terms(self) -> int:
        return len(self._a) - 1

    def __getitem__(self, n: int):
        if not 1 <= n <= self.terms:
            raise IndexError(f"index {n} outside 1..{self.terms}")
        return self._a[n]

    def coefficients(self) -> tuple:
        return tuple(self._a[1:])

    @classmethod
    def zeta(cls, n: int) -> "DirichletSeries":
        """zeta truncated at n terms: all coefficients 1."""
        return cls([1] * n)

    @classmethod
    def zeta_minus_one(cls, n: int) -> "DirichletSeries":
        return cls([0] + [1] * (n - 1))

    @classmethod
    def one(cls, n: int) -> "DirichletSeries":
        """The convolution identity: 1 at n = 1, else 0."""
        return cls([1] + [0] * (n - 1))

    @classmethod
    def moebius(cls, n: int) -> "DirichletSeries":
        return cls([moebius(m) for m in range(1, n + 1)])

    @classmethod
    def from_function(cls, n: int, f) -> "DirichletSeries":
        return cls([f(m) for m in range(1, n + 1)])

    def _require_same_length(self, other: "DirichletSeries"):
        if self.terms != other.terms:
            raise ValueError(
                f"truncation mismatch: {self.terms} vs {other.terms} terms"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirichletSeries):
            return NotImplemented
        return self.terms == other.terms and all(
            self._a[n] == other._a[n] for n in range(1, self.terms + 1)
        )

    def __neg__(self) -> "DirichletSeries":
        return DirichletSeries([-c for c in self._a[1:]])

    def __add__(self, other) -> "DirichletSeries":
        if not isinstance(other, DirichletSeries):
            return NotImplemented
        self._require_same_length(other)
        return DirichletSeries(
            [self._a[n] + other._a[n] for n in range(1, self.terms + 1)]
        )

    def __sub__(self, other) -> "DirichletSeries":
        if not isinstance(other, DirichletSeries):
            return NotImplemented
        self._require_same_length(other)
        return DirichletSeries(
            [self._a[n] - other._a[n] for n in range(1, self.terms + 1)]
        )

    def scale(self, c) -> "DirichletSeries":
        return DirichletSeries([c * v for v in self._a[1:]])

    def convolve(self, other: "DirichletSeries") -> "DirichletSeries":
        """Dirichlet convolution on the common truncation."""
        if not isinstance(other, DirichletSeries):
            raise TypeError("convolve expects a DirichletSeries")
        self._require_same_length(other)
        n = self.terms
        a, b = self._a, other._a
        out = [0] * (n + 1)
        for i in range(1, n + 1):
            ai = a[i]
            if ai:
                step = i
                for j in range(1, n // i + 1):
                    bj = b[j]
                    if bj:
                        out[i * j] += ai * bj
        return DirichletSeries(out[1:])

    __mul__ = convolve

    def convolution_power(self, m: int) -> "DirichletSeries":
        """m-fold convolution power; negative m inverts first."""
        base = self if m >= 0 else self.inverse()
        out = DirichletSeries.one(self.terms)
        for _ in range(abs(m)):
            out = out.convolve(base)
        return out

    def inverse(self) -> "DirichletSeries":
        """Convolution inverse; requires an invertible leading coefficient."""
        n = self.terms
        a = self._a
        lead = a[1]
        if lead == 0:
            raise ValueError("leading coefficient 0 has no convolution inverse")
        if isinstance(lead, int):
            # keep the all-integer path exact when the unit is +-1
            inv_lead = lead if abs(lead) == 1 else Fraction(1, lead)
        else:
            inv_lead = 1 / lead
        b = [0] * (n + 1)
        acc = [0] * (n + 1)
        b[1] = inv_lead
        for d in range(1, n + 1):
            if d > 1:
                b[d] = -acc[d] * inv_lead
            bd = b[d]
            if bd:
                for m in range(2 * d, n + 1, d):
                    acc[m] += bd * a[m // d]
        return DirichletSeries(b[1:])

    def restrict_to_primes(self, omega) -> "DirichletSeries":
        """Keep coefficients a_n with every prime factor of n in omega."""
        primes = sorted(set(omega))
        for p in primes:
            if not is_prime(p):
                raise ValueError(f"omega contains non-prime {p}")
        n = self.terms
        allowed = set(primes)
        spf = smallest_prime_factor_sieve(max(n, 2))
        keep = [False] * (n + 1)
        keep[1] = True
        for m in range(2, n + 1):
            keep[m] = spf[m] in allowed and keep[m // spf[m]]
        return DirichletSeries(
            [self._a[m] if keep[m] else 0 for m in range(1, n + 1)]
        )

    def twist(self, prime_values: dict) -> "DirichletSeries":
        """Multiply a_n by the completely multiplicative M with M(p) = prime_values[p].

        prime_values must cover every prime up to the truncation length.
        """
        n = self.terms
        spf = smallest_prime_factor_sieve(max(n, 2))
        missing = sorted(
            p for p in range(2, n + 1) if spf[p] == p and p not in prime_values
        )
        if missing:
            raise ValueError(f"twist values missing for primes {missing[:8]}")
        mvals = [0] * (n + 1)
        if n >= 1:
            mvals[1] = 1
        for m in range(2, n + 1):
            mvals[m] = mvals[m // spf[m]] * prime_values[spf[m]]
        return DirichletSeries(
            [self._a[m] * mvals[m] for m in range(1, n + 1)]
        )

    def evaluate(self, s: complex) -> complex:
        """Numerically sum a_n * n**(-s) with compensated (Kahan) summation."""
        s = complex(s)
        total = 0 + 0j
        comp = 0 + 0j
        for n in range(1, self.terms + 1):
            an = self._a[n]
            if not an:
                continue
            term = complex(an) * cmath.exp(-s * cmath.log(n))
            y = term - comp
            t = total + y
            comp = (t - total) - y
            total = t
        return total

    def to_csv(self) -> str:
        """Lines "n,value" with exact value strings, one per coefficient."""
        lines = [f"{n},{format_exact(self._a[n])}" for n in range(1, self.terms + 1)]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "terms": self.terms,
            "coefficients": [format_exact(self._a[n]) for n in range(1, self.terms + 1)],
        }
        return json.dumps(payload, sort_keys=True)

    def __repr__(self):
        head = ", ".join(str(c) for c in self._a[1 : min(9, self.terms + 1)])
        tail = ", ..." if self.terms > 8 else ""
        return f"DirichletSeries([{head}{tail}], terms={self.terms})"


def zeta_power(m: int, n: int) -> DirichletSeries:
    """zeta**m on n terms for any integer m; negative powers via Moebius."""
    if m >= 0:
        return DirichletSeries.zeta(n).convolution_power(m)
    return DirichletSeries.moebius(n).convolution_power(-m)
