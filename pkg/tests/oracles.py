"""Brute-force reference implementations.

Everything here is written for obviousness, not speed, and is used to pin
the sieved and closed-form routines in the package.  Keep these independent:
no imports from zetaorbit.
"""

from fractions import Fraction
from math import comb, isqrt


def ordered_factorizations_brute(m: int):
    """Every ordered tuple of integers > 1 with product m, any length, by
    direct depth-first search over the first factor."""
    out = []

    def grow(rest, prefix):
        for d in range(2, rest + 1):
            if rest % d == 0:
                if d == rest:
                    out.append(prefix + (d,))
                else:
                    grow(rest // d, prefix + (d,))

    if m > 1:
        grow(m, ())
    return out


def alpha_brute(k: int, m: int) -> int:
    return sum(1 for t in ordered_factorizations_brute(m) if len(t) == k)


def divisors_brute(n: int):
    return [d for d in range(1, n + 1) if n % d == 0]


def moebius_brute(n: int) -> int:
    if n == 1:
        return 1
    count = 0
    m = n
    for p in range(2, isqrt(n) + 1):
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            count += 1
    if m > 1:
        count += 1
    return -1 if count % 2 else 1


def big_omega_brute(n: int) -> int:
    count = 0
    p = 2
    while p * p <= n:
        while n % p == 0:
            n //= p
            count += 1
        p += 1
    if n > 1:
        count += 1
    return count


def catalan_brute(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def dirichlet_convolve_brute(a, b):
    """Direct double loop over products i*j = n; a, b are lists with
    slot 0 unused."""
    n = len(a) - 1
    out = [0] * (n + 1)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i * j <= n:
                out[i * j] += a[i] * b[j]
    return out


def phi_cubic_brute(n_max: int):
    """Coefficients a_n of the series w solving (z+1) w + z w^2 = z (z+1)
    with z the zeta tail (z_n = 1 for n >= 2), by direct recursion.  Returns
    a list with slot 0 unused and a[1] = 0."""
    a = [0] * (n_max + 1)
    for n in range(2, n_max + 1):
        divs = divisors_brute(n)
        conv = 0
        for d in divs:
            if d == 1:
                continue
            m = n // d
            conv += sum(a[e] * a[m // e] for e in divisors_brute(m))
        lower = sum(a[d] for d in divs if d < n)
        a[n] = (len(divs) - 1) - conv - lower
    return a


def window_to_dense(m):
    """A WindowedMatrix-alike (nrows, ncols, entry) to a list of lists."""
    return [[m.entry(i, j) for j in range(1, m.ncols + 1)]
            for i in range(1, m.nrows + 1)]


def dense_mul(a, b):
    rows = len(a)
    inner = len(b)
    cols = len(b[0]) if inner else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for k in range(inner):
            v = a[i][k]
            if v:
                for j in range(cols):
                    if b[k][j]:
                        out[i][j] += v * b[k][j]
    return out


# reference values of zeta at even integers, exact up to the pi power
ZETA_EVEN_REFERENCE = {
    2: Fraction(1, 6),    # zeta(2) = pi^2 / 6
    4: Fraction(1, 90),   # zeta(4) = pi^4 / 90
    6: Fraction(1, 945),  # zeta(6) = pi^6 / 945
}
