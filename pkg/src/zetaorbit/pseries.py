"""Truncated power series over exact rationals, and 2x2 matrices of them.

A truncated series of order K carries coefficients of t**0 .. t**K.  Sums
and products of series of orders K1, K2 carry order min(K1, K2); within that
range all coefficients are exact, so identities checked here are identities
of formal power series up to the stated order.

The 2x2 series matrices realize a block-Toeplitz matrix algebra: a matrix
whose (i, i+m) 2x2 block is the coefficient matrix of t**m for every i.  The
generators of SL(2,Z) act through such matrices, with T acting as the
unipotent matrix [[1, 1+g], [g, 1+t]] for the series root g of g**2 + g = t.
"""

from __future__ import annotations

from fractions import Fraction

from zetaorbit.exactnum import binomial, signed_catalan_sequence


class TruncatedPowerSeries:
    """Power series in one variable truncated at a fixed order, exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "TruncatedPowerSeries":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedPowerSeries":
        return cls([1] + [0] * order)

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedPowerSeries":
        return cls([c] + [0] * order)

    @classmethod
    def variable(cls, order: int) -> "TruncatedPowerSeries":
        if order < 1:
            raise ValueError("order must be >= 1 to carry the variable")
        return cls([0, 1] + [0] * (order - 1))

    def coefficient(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient index {n} outside order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncatedPowerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedPowerSeries(self.coeffs[: order + 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedPowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "TruncatedPowerSeries":
        return TruncatedPowerSeries(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "TruncatedPowerSeries":
        if not isinstance(other, TruncatedPowerSeries):
            return NotImplemented
        k = min(self.order, other.order)
        return TruncatedPowerSeries(
            tuple(self.coeffs[i] + other.coeffs[i] for i in range(k + 1))
        )

    def __sub__(self, other) -> "TruncatedPowerSeries":
        if not isinstance(other, TruncatedPowerSeries):
            return NotImplemented
        k = min(self.order, other.order)
        return TruncatedPowerSeries(
            tuple(self.coeffs[i] - other.coeffs[i] for i in range(k + 1))
        )

    def __mul__(self, other) -> "TruncatedPowerSeries":
        if isinstance(other, (int, Fraction)):
            return TruncatedPowerSeries(tuple(c * other for c in self.coeffs))
        if not isinstance(other, TruncatedPowerSeries):
            return NotImplemented
        k = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (k + 1)
        for i in range(min(len(a), k + 1)):
            ai = a[i]
            if ai:
                for j in range(min(len(b), k + 1 - i)):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return TruncatedPowerSeries(out)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def shift(self, n: int) -> "TruncatedPowerSeries":
        """Multiply by t**n (truncating at the same order)."""
        if n < 0:
            raise ValueError("shift must be >= 0")
        k = self.order
        return TruncatedPowerSeries((Fraction(0),) * min(n, k + 1) + self.coeffs[: k + 1 - n])

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return f"TruncatedPowerSeries([{head}{tail}], order={self.order})"


def series_inverse(a: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """Multiplicative inverse of a series with invertible constant term."""
    if a.coeffs[0] == 0:
        raise ValueError("series with zero constant term has no inverse")
    k = a.order
    inv = [Fraction(0)] * (k + 1)
    inv[0] = 1 / a.coeffs[0]
    for n in range(1, k + 1):
        acc = Fraction(0)
        for i in range(1, n + 1):
            if a.coeffs[i]:
                acc += a.coeffs[i] * inv[n - i]
        inv[n] = -acc * inv[0]
    return TruncatedPowerSeries(inv)


def inverse_sqrt_one_plus(u: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """Series s with s**2 * (1 + u) = 1, for u with zero constant term.

    Newton iteration s <- s * (3 - s**2 * (1 + u)) / 2 doubles the number of
    correct coefficients each step, starting from s = 1.
    """
    if u.coeffs[0] != 0:
        raise ValueError("u must have zero constant term")
    order = u.order
    one_plus = TruncatedPowerSeries.one(order) + u
    s = TruncatedPowerSeries.one(order)
    correct = 1
    while correct <= order:
        s = s * (TruncatedPowerSeries.constant(3, order) - s * s * one_plus) * Fraction(1, 2)
        correct *= 2
    return s


def catalan_root_series(order: int) -> TruncatedPowerSeries:
    """The power-series root g of g**2 + g = t with zero constant term.

    Its coefficients are the signed Catalan numbers: g = t - t**2 + 2t**3 - 5t**4 + ...
    """
    b = signed_catalan_sequence(order)
    return TruncatedPowerSeries([0] + b[1:] if order >= 1 else [0])


def weighted_fibonacci_series(n: int, order: int) -> TruncatedPowerSeries:
    """Polynomial h_n with h_0 = 1, h_1 = t, h_n = t*(h_(n-1) + h_(n-2)).

    Closed form: h_n = sum_r C(n-r, r) * t**(n-r) over 0 <= r <= n/2.  These
    are the lower-right entries of powers of [[0, 1+g], [g, t]].
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = [Fraction(0)] * (order + 1)
    for r in range(n // 2 + 1):
        if n - r <= order:
            coeffs[n - r] = Fraction(binomial(n - r, r))
    return TruncatedPowerSeries(coeffs)


def weighted_fibonacci_by_recursion(n: int, order: int) -> TruncatedPowerSeries:
    """Same polynomials built from the recursion, as an independent route."""
    if n < 0:
        raise ValueError("n must be >= 0")
    prev = TruncatedPowerSeries.one(order)
    if n == 0:
        return prev
    if order < 1:
        raise ValueError("order must be >= 1 for n >= 1")
    t = TruncatedPowerSeries.variable(order)
    cur = t
    for _ in range(n - 1):
        prev, cur = cur, t * (cur + prev)
    return cur


class SeriesMatrix2x2:
    """2x2 matrix of truncated power series, all of one common order."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        order = min(x.order for x in (a, b, c, d))
        self.a = a.truncate(order)
        self.b = b.truncate(order)
        self.c = c.truncate(order)
        self.d = d.truncate(order)

    @property
    def order(self) -> int:
        return self.a.order

    @classmethod
    def identity(cls, order: int) -> "SeriesMatrix2x2":
        one = TruncatedPowerSeries.one(order)
        zero = TruncatedPowerSeries.zero(order)
        return cls(one, zero, zero, one)

    @classmethod
    def from_scalars(cls, rows, order: int) -> "SeriesMatrix2x2":
        (a, b), (c, d) = rows
        return cls(
            TruncatedPowerSeries.constant(a, order),
            TruncatedPowerSeries.constant(b, order),
            TruncatedPowerSeries.constant(c, order),
            TruncatedPowerSeries.constant(d, order),
        )

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SeriesMatrix2x2):
            return NotImplemented
        return self.entries() == other.entries()

    def __neg__(self) -> "SeriesMatrix2x2":
        return SeriesMatrix2x2(-self.a, -self.b, -self.c, -self.d)

    def __add__(self, other) -> "SeriesMatrix2x2":
        return SeriesMatrix2x2(
            self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d
        )

    def __sub__(self, other) -> "SeriesMatrix2x2":
        return SeriesMatrix2x2(
            self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d
        )

    def __mul__(self, other) -> "SeriesMatrix2x2":
        if not isinstance(other, SeriesMatrix2x2):
            return NotImplemented
        return SeriesMatrix2x2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __pow__(self, n: int) -> "SeriesMatrix2x2":
        if n < 0:
            return self.inverse() ** (-n)
        out = SeriesMatrix2x2.identity(self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def determinant(self) -> TruncatedPowerSeries:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> "SeriesMatrix2x2":
        """Adjugate divided by the determinant, which must be a unit series."""
        det_inv = series_inverse(self.determinant())
        return SeriesMatrix2x2(
            self.d * det_inv, -self.b * det_inv, -self.c * det_inv, self.a * det_inv
        )

    def constant_block(self):
        """The 2x2 matrix of constant terms, as Fractions."""
        return (
            (self.a.coeffs[0], self.b.coeffs[0]),
            (self.c.coeffs[0], self.d.coeffs[0]),
        )

    def coefficient_block(self, n: int):
        return (
            (self.a.coefficient(n), self.b.coefficient(n)),
            (self.c.coefficient(n), self.d.coefficient(n)),
        )

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries())

    def __repr__(self):
        return f"SeriesMatrix2x2(order={self.order})"


def sl2_generator_images(order: int):
    """Series matrices for the SL(2,Z) generators S, T and the product R = -S*T.

    S maps to the constant rotation [[0, -1], [1, 0]], T to the unipotent
    [[1, 1+g], [g, 1+t]] with g the root of g**2 + g = t, and R = -S*T to
    [[g, 1+t], [-1, -1-g]], which satisfies R**2 + R + 1 = 0.
    """
    g = catalan_root_series(order)
    t = TruncatedPowerSeries.variable(order)
    one = TruncatedPowerSeries.one(order)
    zero = TruncatedPowerSeries.zero(order)
    s_img = SeriesMatrix2x2(zero, -one, one, zero)
    t_img = SeriesMatrix2x2(one, one + g, g, one + t)
    r_img = SeriesMatrix2x2(g, one + t, -one, -(one + g))
    return s_img, t_img, r_img


def gl_reflection_image(order: int) -> SeriesMatrix2x2:
    """Series matrix W(t) = [[-t, 2g+1], [2g+1, t]] / sqrt(t**2 + 4t + 1).

    W(t) squares to the identity, conjugates the image of S to its inverse,
    and has constant block [[0, 1], [1, 0]]; it extends the SL(2,Z) action to
    GL(2,Z) at the price of non-integral matrix entries downstream.
    """
    g = catalan_root_series(order)
    t = TruncatedPowerSeries.variable(order)
    one = TruncatedPowerSeries.one(order)
    u = t * t + 4 * t
    scale = inverse_sqrt_one_plus(u)
    two_g_plus_one = 2 * g + one
    return SeriesMatrix2x2(
        -t * scale, two_g_plus_one * scale, two_g_plus_one * scale, t * scale
    )


def reflection_coefficient_bound(order: int = 128) -> tuple[bool, Fraction]:
    """Check |r_n| <= 4**n for every coefficient r_n of every entry of W(t).

    Returns (holds, largest ratio |r_n| / 4**n observed).  The entries of
    W(t) have radius of convergence 2 - sqrt(3), so 4**n has slack over the
    true growth rate of about (3.73...)**n.
    """
    w = gl_reflection_image(order)
    worst = Fraction(0)
    for entry in w.entries():
        for n, c in enumerate(entry.coeffs):
            ratio = abs(c) / 4**n
            if ratio > worst:
                worst = ratio
    return worst <= 1, worst
