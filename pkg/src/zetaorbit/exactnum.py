"""Exact integer combinatorics underlying the divisor-matrix calculus.

Everything here is computed with arbitrary-precision integers or rationals,
so the identities checked downstream (Jordan forms, the orbit cubic, growth
bounds) hold exactly rather than to floating-point tolerance.

The central object is the count of ordered factorizations of m into exactly
k factors, each greater than 1.  These counts are the coefficients of the
Dirichlet-series powers (zeta - 1)**k and fill the rows of the transition
matrix that conjugates the divisor matrix into Jordan form.
"""

from __future__ import annotations

import math
from fractions import Fraction

import gmpy2

# Exact scalar domain used throughout the package.
ExactScalar = int
ExactRational = Fraction

# Certified rational upper bound for the exponent c solving zeta(c) = 2;
# ordered-factorization counts satisfy count(k, m) <= m**c for every k.
# The enclosure below it is certified by zeta_upper_bound / zeta_lower_bound.
FACTORIZATION_GROWTH_EXPONENT = Fraction(17287, 10000)
FACTORIZATION_GROWTH_EXPONENT_LOWER = Fraction(17286, 10000)


def binomial(a: int, b: int) -> int:
    """Binomial coefficient with C(a, b) = 0 unless a >= b >= 0."""
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


def is_prime(n: int) -> bool:
    """Deterministic trial division, intended for n up to about 10**8."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def smallest_prime_factor_sieve(limit: int) -> list[int]:
    """List spf with spf[n] = smallest prime factor of n for 2 <= n <= limit."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    spf = list(range(limit + 1))
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == p:
            for m in range(p * p, limit + 1, p):
                if spf[m] == m:
                    spf[m] = p
    return spf


def prime_factorization(n: int) -> dict[int, int]:
    """Map prime -> exponent for n >= 1 (empty for n = 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_multiplicity(m: int, p: int) -> int:
    """Exponent of the prime p in m >= 1."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if m < 1:
        raise ValueError("m must be >= 1")
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


def big_omega(m: int) -> int:
    """Total number of prime factors of m counted with multiplicity."""
    return sum(prime_factorization(m).values())


def moebius(n: int) -> int:
    """Moebius function: (-1)**(number of primes) on squarefree n, else 0."""
    fac = prime_factorization(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def exponent_partition(n: int) -> tuple[int, ...]:
    """Multiset of prime exponents of n as a partition (sorted descending)."""
    return tuple(sorted(prime_factorization(n).values(), reverse=True))


def signed_catalan(k: int) -> int:
    """Signed Catalan number b_k: b_0 = b_1 = 1, b_m = (-1)**(m-1)/m * C(2m-2, m-1).

    These are the Taylor coefficients of the power-series root of w**2 + w = t,
    shifted so that 1 + g(t) = sum b_k t**k.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k <= 1:
        return 1
    value = math.comb(2 * k - 2, k - 1) // k
    return -value if k % 2 == 0 else value


def signed_catalan_sequence(kmax: int) -> list[int]:
    """b_0..b_kmax from the defining convolution recursion b_n = -sum b_i b_(n-i)."""
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    b = [1, 1]
    for n in range(2, kmax + 1):
        b.append(-sum(b[i] * b[n - i] for i in range(1, n)))
    return b[: kmax + 1]


def divisors(n: int) -> list[int]:
    """Sorted list of positive divisors of n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


class FactorizationTable:
    """Sieved table of ordered-factorization counts up to max_m.

    count(k, m) is the number of ordered k-tuples of integers > 1 whose
    product is m.  Level k is built from level k-1 by the proper-divisor sum
    count(k, m) = sum(count(k-1, d) for d | m, d < m), with count(1, m) = 1
    for m > 1 and 0 for m = 1.
    """

    def __init__(self, max_m: int, max_k: int | None = None):
        if max_m < 1:
            raise ValueError("max_m must be >= 1")
        if max_k is None:
            # count(k, m) = 0 as soon as 2**k > max_m, so this depth is total.
            max_k = max(1, max_m.bit_length() - 1)
        if max_k < 1:
            raise ValueError("max_k must be >= 1")
        self.max_m = max_m
        self.max_k = max_k
        level = [0] * (max_m + 1)
        for m in range(2, max_m + 1):
            level[m] = 1
        self._levels = [level]
        for _ in range(1, max_k):
            prev = self._levels[-1]
            nxt = [0] * (max_m + 1)
            for d in range(2, max_m // 2 + 1):
                c = prev[d]
                if c:
                    for m in range(2 * d, max_m + 1, d):
                        nxt[m] += c
            self._levels.append(nxt)

    def count(self, k: int, m: int) -> int:
        if m < 1 or m > self.max_m:
            raise ValueError(f"m = {m} outside table range 1..{self.max_m}")
        if k < 1:
            raise ValueError("k must be >= 1")
        if k > self.max_k:
            if m < 2**k:
                return 0
            raise ValueError(f"table depth {self.max_k} too shallow for k = {k}")
        return self._levels[k - 1][m]

    def level(self, k: int) -> list[int]:
        """Counts for fixed k as a list indexed by m (index 0 unused)."""
        if not 1 <= k <= self.max_k:
            raise ValueError(f"k = {k} outside table depth 1..{self.max_k}")
        return list(self._levels[k - 1])


def ordered_factorizations(k: int, m: int) -> int:
    """Number of ordered k-tuples of integers > 1 with product m.

    Standalone variant of FactorizationTable.count that recurses over the
    divisor lattice of the single argument m.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if m < 1:
        raise ValueError("m must be >= 1")
    divs = divisors(m)
    cur = {d: (1 if d > 1 else 0) for d in divs}
    for _ in range(k - 1):
        cur = {
            d: sum(cur[e] for e in divs if d % e == 0 and e < d)
            for d in divs
        }
    return cur[m]


def verify_telescoped_count(m: int, k: int, table: FactorizationTable | None = None) -> bool:
    """Check the alternating divisor-sum telescope for ordered factorizations.

    sum_{i=1}^{k-1} (-1)**(k-1-i) * sum_{d|m} count(i, d)
        == count(k, m) + (-1)**k * count(1, m)
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if table is None or table.max_m < m:
        table = FactorizationTable(m)
    divs = divisors(m)
    lhs = 0
    for i in range(1, k):
        divisor_sum = sum(table.count(i, d) for d in divs)
        sign = -1 if (k - 1 - i) % 2 else 1
        lhs += sign * divisor_sum
    rhs = table.count(k, m) + (-1 if k % 2 else 1) * table.count(1, m)
    return lhs == rhs


def verify_moebius_alternation(m: int, table: FactorizationTable | None = None) -> bool:
    """Check that the alternating sum of factorization counts collapses to a sign.

    sum_{k=1}^{Omega(m)} (-1)**k * count(k, m) equals (-1)**Omega(m) when m is
    squarefree and > 1, and 0 otherwise (for m >= 2 the sum over k <= Omega(m)
    is total since count(k, m) = 0 for k > Omega(m)).
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if table is None or table.max_m < m:
        table = FactorizationTable(m)
    v = big_omega(m)
    total = sum((-1 if k % 2 else 1) * table.count(k, m) for k in range(1, v + 1))
    squarefree = all(e == 1 for e in prime_factorization(m).values())
    expected = ((-1) ** v) if squarefree else 0
    return total == expected


def power_bound_holds(value: int, m: int, exponent: Fraction) -> bool:
    """Exact test of value <= m**exponent for value >= 0, m >= 1, exponent >= 0.

    Equivalent to value**q <= m**p for exponent = p/q; a bit-length shortcut
    avoids the big power in the overwhelmingly common non-borderline case.
    """
    if value < 0 or m < 1 or exponent < 0:
        raise ValueError("need value >= 0, m >= 1, exponent >= 0")
    if value <= 1:
        return True
    if m == 1:
        return False
    p, q = exponent.numerator, exponent.denominator
    # value < 2**bits(value) and m >= 2**(bits(m)-1), so this is sufficient.
    if value.bit_length() * q <= (m.bit_length() - 1) * p:
        return True
    return value**q <= m**p


def _nth_root_lower(x: int, q: int, guard_bits: int) -> Fraction:
    """Rational L with L <= x**(1/q), accurate to about guard_bits bits."""
    root, _ = gmpy2.iroot(gmpy2.mpz(x) << (guard_bits * q), q)
    return Fraction(int(root), 1 << guard_bits)


def _nth_root_upper(x: int, q: int, guard_bits: int) -> Fraction:
    """Rational U with U >= x**(1/q), accurate to about guard_bits bits."""
    root, exact = gmpy2.iroot(gmpy2.mpz(x) << (guard_bits * q), q)
    if not exact:
        root += 1
    return Fraction(int(root), 1 << guard_bits)


def zeta_upper_bound(exponent: Fraction, terms: int, guard_bits: int = 32) -> Fraction:
    """Certified rational upper bound for zeta(exponent), exponent > 1.

    Each term n**(-exponent) is rounded up exactly, and the tail beyond
    'terms' is bounded by the integral terms**(1-exponent)/(exponent-1),
    itself rounded up.
    """
    p, q = exponent.numerator, exponent.denominator
    if p <= q:
        raise ValueError("exponent must exceed 1")
    total = Fraction(1)
    for n in range(2, terms + 1):
        total += 1 / _nth_root_lower(n**p, q, guard_bits)
    total += Fraction(q, p - q) / _nth_root_lower(terms ** (p - q), q, guard_bits)
    return total


def zeta_lower_bound(exponent: Fraction, terms: int, guard_bits: int = 32) -> Fraction:
    """Certified rational lower bound for zeta(exponent), exponent > 1.

    Each term is rounded down, and the tail is bounded from below by the
    integral (terms+1)**(1-exponent)/(exponent-1), rounded down.
    """
    p, q = exponent.numerator, exponent.denominator
    if p <= q:
        raise ValueError("exponent must exceed 1")
    total = Fraction(1)
    for n in range(2, terms + 1):
        total += 1 / _nth_root_upper(n**p, q, guard_bits)
    total += Fraction(q, p - q) / _nth_root_upper((terms + 1) ** (p - q), q, guard_bits)
    return total


def verify_growth_exponent_certificate(terms: int = 512) -> bool:
    """Certify zeta(lower) > 2 > zeta(upper) for the pinned rational exponents."""
    return (
        zeta_upper_bound(FACTORIZATION_GROWTH_EXPONENT, terms) < 2
        and zeta_lower_bound(FACTORIZATION_GROWTH_EXPONENT_LOWER, terms) > 2
    )


def verify_combinatorics_suite(max_m: int = 10000, max_k: int = 12, catalan_max: int = 64) -> dict:
    """Exhaustive combinatorial checks: telescope and alternation identities for
    every m <= max_m, the m**c growth bound, and the signed-Catalan cross-check.
    """
    table = FactorizationTable(max_m)
    checks = []

    # Divisor-sum transforms per level, shared by the telescope sweep.
    max_k = min(max_k, table.max_k)
    transforms = []
    for k in range(1, max_k + 1):
        lev = table.level(k)
        tr = [0] * (max_m + 1)
        for d in range(2, max_m + 1):
            c = lev[d]
            if c:
                for m in range(d, max_m + 1, d):
                    tr[m] += c
        transforms.append(tr)

    ok = True
    witness = None
    for m in range(2, max_m + 1):
        alpha1 = table.count(1, m)
        for k in range(2, max_k + 1):
            lhs = 0
            for i in range(1, k):
                sign = -1 if (k - 1 - i) % 2 else 1
                lhs += sign * transforms[i - 1][m]
            rhs = table.count(k, m) + (-1 if k % 2 else 1) * alpha1
            if lhs != rhs:
                ok, witness = False, (m, k)
                break
        if not ok:
            break
    checks.append({
        "name": f"telescoped divisor-sum identity, m <= {max_m}, k <= {max_k}",
        "pass": ok,
        "detail": "all cases agree" if ok else f"first failure at (m, k) = {witness}",
    })

    spf = smallest_prime_factor_sieve(max_m)
    ok = True
    witness = None
    for m in range(2, max_m + 1):
        n, v, squarefree, last = m, 0, True, 0
        while n > 1:
            p = spf[n]
            if p == last:
                squarefree = False
            last = p
            v += 1
            n //= p
        total = sum((-1 if k % 2 else 1) * table.count(k, m) for k in range(1, v + 1))
        expected = ((-1) ** v) if squarefree else 0
        if total != expected:
            ok, witness = False, m
            break
    checks.append({
        "name": f"alternating-sum sign collapse, m <= {max_m}",
        "pass": ok,
        "detail": "all cases agree" if ok else f"first failure at m = {witness}",
    })

    ok = True
    witness = None
    for m in range(2, max_m + 1):
        worst = max(table.count(k, m) for k in range(1, table.max_k + 1))
        if not power_bound_holds(worst, m, FACTORIZATION_GROWTH_EXPONENT):
            ok, witness = False, m
            break
    checks.append({
        "name": f"growth bound count(k, m) <= m**{FACTORIZATION_GROWTH_EXPONENT}, m <= {max_m}",
        "pass": ok,
        "detail": "bound holds everywhere" if ok else f"violated at m = {witness}",
    })

    cert = verify_growth_exponent_certificate()
    checks.append({
        "name": "zeta enclosure certificate for the growth exponent",
        "pass": cert,
        "detail": f"zeta({FACTORIZATION_GROWTH_EXPONENT_LOWER}) > 2 > zeta({FACTORIZATION_GROWTH_EXPONENT})",
    })

    seq = signed_catalan_sequence(catalan_max)
    closed = [signed_catalan(k) for k in range(catalan_max + 1)]
    unsigned_ok = all(
        abs(seq[k]) == math.comb(2 * k - 2, k - 1) // k for k in range(1, catalan_max + 1)
    )
    magnitude_ok = all(abs(seq[k]) <= 4 ** max(k - 1, 0) for k in range(catalan_max + 1))
    checks.append({
        "name": f"signed Catalan numbers: recursion vs closed form vs Catalan(k-1), k <= {catalan_max}",
        "pass": seq == closed and unsigned_ok and magnitude_ok,
        "detail": f"b_2 = {seq[2]}, b_4 = {seq[4]}, |b_k| <= 2**(2k-2)",
    })

    return {
        "suite": "combinatorics",
        "max_m": max_m,
        "max_k": max_k,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }
