"""Windowed exact linear algebra for column-finite infinite matrices.

A WindowedMatrix is the leading nrows x ncols block of an infinite matrix
together with a certified growth factor w: the infinite matrix vanishes at
(i, j) whenever i > w * j.  That certificate is what makes finite windows
faithful: the product of a window of A and a window of B agrees with the
corresponding window of the infinite product provided the windows are large
enough, and windowed_mul refuses to proceed otherwise instead of silently
truncating.

The constructors build the cast of the divisor-matrix Jordan story: the
divisor matrix itself, its Jordan-form target with ones at (i, i) and
(i, 2i), the infinite Jordan block, the integer transition matrices on both
the Dirichlet side and the block-Toeplitz side, the interleaving that
replicates a matrix across the dyadic towers d, 2d, 4d, ... for odd d, and
the classical pair showing that inverses can escape polynomial entry bounds.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache

from zetaorbit.exactnum import (
    FactorizationTable,
    binomial,
    moebius,
    signed_catalan_sequence,
)
from zetaorbit.dseries import format_exact
from zetaorbit.pseries import SeriesMatrix2x2, sl2_generator_images


class InsufficientWindowError(Exception):
    """A window is too small for the requested exact computation."""

    def __init__(self, message: str, needed_rows: int | None = None, needed_cols: int | None = None):
        super().__init__(message)
        self.needed_rows = needed_rows
        self.needed_cols = needed_cols


class WindowedMatrix:
    """Sparse leading block of an infinite matrix with a growth certificate.

    rows maps i -> {j -> value} with only nonzero values stored; indices are
    1-based.  Instances are treated as immutable: all operations return new
    matrices.
    """

    __slots__ = ("nrows", "ncols", "growth", "rows")

    def __init__(self, nrows: int, ncols: int, growth: int, rows: dict):
        if nrows < 1 or ncols < 1:
            raise ValueError("window must have at least one row and column")
        if growth < 1:
            raise ValueError("growth factor must be a positive integer")
        self.nrows = nrows
        self.ncols = ncols
        self.growth = growth
        self.rows = rows

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, growth: int, entries) -> "WindowedMatrix":
        """Build from an iterable of (i, j, value), dropping zeros."""
        rows: dict = {}
        for i, j, v in entries:
            if not 1 <= i <= nrows or not 1 <= j <= ncols:
                raise ValueError(f"entry ({i}, {j}) outside window {nrows} x {ncols}")
            if v:
                rows.setdefault(i, {})[j] = v
        return cls(nrows, ncols, growth, rows)

    @classmethod
    def identity(cls, n: int) -> "WindowedMatrix":
        return cls(n, n, 1, {i: {i: 1} for i in range(1, n + 1)})

    def entry(self, i: int, j: int):
        if not 1 <= i <= self.nrows or not 1 <= j <= self.ncols:
            raise IndexError(f"({i}, {j}) outside window {self.nrows} x {self.ncols}")
        return self.rows.get(i, {}).get(j, 0)

    def nonzero_count(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def entries(self):
        """Iterate (i, j, value) over stored nonzero entries, row-major sorted."""
        for i in sorted(self.rows):
            row = self.rows[i]
            for j in sorted(row):
                yield i, j, row[j]

    def submatrix(self, nrows: int, ncols: int) -> "WindowedMatrix":
        """Leading sub-window; growth certificate carries over."""
        if nrows > self.nrows or ncols > self.ncols:
            raise InsufficientWindowError(
                f"cannot slice {nrows} x {ncols} out of {self.nrows} x {self.ncols}",
                needed_rows=nrows,
                needed_cols=ncols,
            )
        rows: dict = {}
        for i, row in self.rows.items():
            if i <= nrows:
                newrow = {j: v for j, v in row.items() if j <= ncols}
                if newrow:
                    rows[i] = newrow
        return WindowedMatrix(nrows, ncols, self.growth, rows)

    def scale(self, c) -> "WindowedMatrix":
        if not c:
            return WindowedMatrix(self.nrows, self.ncols, self.growth, {})
        rows = {i: {j: c * v for j, v in row.items()} for i, row in self.rows.items()}
        return WindowedMatrix(self.nrows, self.ncols, self.growth, rows)

    def __neg__(self) -> "WindowedMatrix":
        return self.scale(-1)

    def add(self, other: "WindowedMatrix") -> "WindowedMatrix":
        """Entrywise sum on identical windows; growth is the larger factor."""
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("window shape mismatch in add")
        rows: dict = {}
        for i in set(self.rows) | set(other.rows):
            merged = dict(self.rows.get(i, {}))
            for j, v in other.rows.get(i, {}).items():
                s = merged.get(j, 0) + v
                if s:
                    merged[j] = s
                else:
                    merged.pop(j, None)
            if merged:
                rows[i] = merged
        return WindowedMatrix(self.nrows, self.ncols, max(self.growth, other.growth), rows)

    def sub(self, other: "WindowedMatrix") -> "WindowedMatrix":
        return self.add(-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WindowedMatrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return False
        keys = set(self.rows) | set(other.rows)
        return all(self.rows.get(i, {}) == other.rows.get(i, {}) for i in keys)

    def is_identity(self) -> bool:
        for i in range(1, self.nrows + 1):
            row = self.rows.get(i, {})
            if i <= self.ncols:
                if row != {i: 1}:
                    return False
            elif row:
                return False
        return True

    def is_zero(self) -> bool:
        return not self.rows

    def measured_growth(self) -> int:
        """Smallest integer w with i <= w * j for every stored nonzero entry."""
        worst = 1
        for i, row in self.rows.items():
            for j in row:
                need = -(-i // j)  # ceil(i / j)
                if need > worst:
                    worst = need
        return worst

    def growth_certificate_holds(self) -> bool:
        """Stored entries all satisfy the claimed growth bound."""
        return self.measured_growth() <= self.growth

    def first_row(self) -> list:
        """Row 1 of the window as a dense list indexed 1..ncols (slot 0 unused)."""
        out = [0] * (self.ncols + 1)
        for j, v in self.rows.get(1, {}).items():
            out[j] = v
        return out

    def to_json(self) -> str:
        payload = {
            "rows": self.nrows,
            "cols": self.ncols,
            "growth": self.growth,
            "entries": [[i, j, format_exact(v)] for i, j, v in self.entries()],
        }
        return json.dumps(payload, sort_keys=True)

    def __repr__(self):
        return (
            f"WindowedMatrix({self.nrows} x {self.ncols}, growth={self.growth}, "
            f"nnz={self.nonzero_count()})"
        )


def windowed_mul(a: WindowedMatrix, b: WindowedMatrix, out_cols: int) -> WindowedMatrix:
    """Exact product window: the leading (w(a)*w(b)*out_cols) x out_cols block
    of the infinite product, with growth certificate w(a)*w(b).

    Requires b to supply w(b)*out_cols rows and out_cols columns, and a to
    supply w(a)*w(b)*out_cols rows and w(b)*out_cols columns; raises
    InsufficientWindowError otherwise.
    """
    if out_cols < 1:
        raise InsufficientWindowError("out_cols must be >= 1", needed_cols=1)
    mid = b.growth * out_cols
    out_rows = a.growth * mid
    if b.ncols < out_cols or b.nrows < mid:
        raise InsufficientWindowError(
            f"right factor window {b.nrows} x {b.ncols} too small: "
            f"need {mid} x {out_cols} for {out_cols} output columns",
            needed_rows=mid,
            needed_cols=out_cols,
        )
    if a.ncols < mid or a.nrows < out_rows:
        raise InsufficientWindowError(
            f"left factor window {a.nrows} x {a.ncols} too small: "
            f"need {out_rows} x {mid} for {out_cols} output columns",
            needed_rows=out_rows,
            needed_cols=mid,
        )
    rows: dict = {}
    b_rows = b.rows
    for i, arow in a.rows.items():
        if i > out_rows:
            continue
        acc: dict = {}
        get = acc.get
        for k, av in arow.items():
            if k > mid:
                continue
            brow = b_rows.get(k)
            if not brow:
                continue
            for j, bv in brow.items():
                if j <= out_cols:
                    acc[j] = get(j, 0) + av * bv
        cleaned = {j: v for j, v in acc.items() if v}
        if cleaned:
            rows[i] = cleaned
    return WindowedMatrix(out_rows, out_cols, a.growth * b.growth, rows)


@lru_cache(maxsize=4)
def _alpha_table(max_m: int) -> FactorizationTable:
    return FactorizationTable(max_m)


def divisor_matrix(n: int) -> WindowedMatrix:
    """D with D[i, j] = 1 when i divides j: the matrix of multiplication by zeta."""
    rows = {
        i: {j: 1 for j in range(i, n + 1, i)}
        for i in range(1, n + 1)
    }
    return WindowedMatrix(n, n, 1, rows)


def divisor_matrix_inverse(n: int) -> WindowedMatrix:
    """D**-1 with entries moebius(j / i) when i divides j."""
    mu = [0] * (n + 1)
    for m in range(1, n + 1):
        mu[m] = moebius(m)
    rows: dict = {}
    for i in range(1, n + 1):
        row = {}
        for j in range(i, n + 1, i):
            v = mu[j // i]
            if v:
                row[j] = v
        rows[i] = row
    return WindowedMatrix(n, n, 1, rows)


def dyadic_jordan_matrix(n: int) -> WindowedMatrix:
    """J with ones at (i, i) and (i, 2i): the Jordan form of the divisor matrix."""
    rows: dict = {}
    for i in range(1, n + 1):
        row = {i: 1}
        if 2 * i <= n:
            row[2 * i] = 1
        rows[i] = row
    return WindowedMatrix(n, n, 1, rows)


def jordan_block_matrix(n: int) -> WindowedMatrix:
    """The standard infinite Jordan block: ones at (i, i) and (i, i+1)."""
    rows: dict = {}
    for i in range(1, n + 1):
        row = {i: 1}
        if i + 1 <= n:
            row[i + 1] = 1
        rows[i] = row
    return WindowedMatrix(n, n, 1, rows)


def parity_sign_matrix(n: int) -> WindowedMatrix:
    """Diagonal signs (-1)**v2(i), where v2 is the 2-adic valuation."""
    rows = {}
    for i in range(1, n + 1):
        v2 = (i & -i).bit_length() - 1
        rows[i] = {i: -1 if v2 % 2 else 1}
    return WindowedMatrix(n, n, 1, rows)


def divisor_transition_matrix(n: int) -> WindowedMatrix:
    """Z: odd rows from the identity; row d * 2**k holds the counts of ordered
    k-factorizations along multiples of d.  Conjugates D into the dyadic
    Jordan form: Z * D * Z**-1 = J.
    """
    table = _alpha_table(n) if n >= 1 else None
    rows: dict = {}
    for i in range(1, n + 1):
        k = (i & -i).bit_length() - 1
        if k == 0:
            rows[i] = {i: 1}
            continue
        d = i >> k
        row = {}
        for m in range(1 << k, n // d + 1):
            v = table.count(k, m)
            if v:
                row[d * m] = v
        rows[i] = row
    return WindowedMatrix(n, n, 1, rows)


def divisor_transition_inverse(n: int) -> WindowedMatrix:
    """Z**-1, built entrywise as (-1)**(v2(i) + v2(j)) * Z[i, j].

    This is an independent construction, not a matrix inversion, so
    Z * Z**-1 = I is a genuine check downstream.
    """
    z = divisor_transition_matrix(n)
    rows: dict = {}
    for i, row in z.rows.items():
        ki = (i & -i).bit_length() - 1
        newrow = {}
        for j, v in row.items():
            kj = (j & -j).bit_length() - 1
            newrow[j] = -v if (ki + kj) % 2 else v
        rows[i] = newrow
    return WindowedMatrix(n, n, 1, rows)


def toeplitz_transition_matrix(n: int) -> WindowedMatrix:
    """P: upper unitriangular integer matrix whose row m is the first row of
    the (m-1)-th power of the block-Toeplitz unipotent minus identity.

    Entries come from the closed binomial form: at row l >= 2,
    column 2s+1 holds C(s-1, l-s-2) and column 2s+2 holds
    sum_k b_k * C(s-k, l+k-s-2) over the signed Catalans b_k.
    """
    b = signed_catalan_sequence(n // 2 + 2)
    rows: dict = {1: {1: 1}}
    for ell in range(2, n + 1):
        row = {}
        for s in range((n - 1) // 2 + 1):
            col = 2 * s + 1
            v = binomial(s - 1, ell - s - 2)
            if v:
                row[col] = v
        for s in range((n - 2) // 2 + 1):
            col = 2 * s + 2
            hi = s + 1 - (ell + 1) // 2  # floor(s + 1 - ell/2)
            lo = max(0, s + 2 - ell)
            acc = 0
            for k in range(lo, hi + 1):
                c = binomial(s - k, ell + k - s - 2)
                if c:
                    acc += b[k] * c
            if acc:
                row[col] = acc
        rows[ell] = row
    return WindowedMatrix(n, n, 1, rows)


def toeplitz_transition_inverse(n: int) -> WindowedMatrix:
    """Q = P**-1 from its own closed binomial form (columns 1, 2 are e1, e2;
    for m >= 3, row 2s+1 holds (-1)**(m-1) C(m-s-2, s-1) and row 2s+2 holds
    (-1)**m sum_k b_k C(m-s-k-2, s+k-2))."""
    b = signed_catalan_sequence(n // 2 + 2)
    rows: dict = {}
    for i in range(1, n + 1):
        row = {}
        if i <= 2:
            row[i] = 1
        s, odd = divmod(i - 1, 2)
        if odd == 0:
            # i = 2s + 1
            for m in range(max(3, i), n + 1):
                v = binomial(m - s - 2, s - 1)
                if v:
                    row[m] = -v if m % 2 == 0 else v
        else:
            # i = 2s + 2
            for m in range(max(3, i), n + 1):
                acc = 0
                for k in range(1, m // 2 - s + 1):
                    c = binomial(m - s - k - 2, s + k - 2)
                    if c:
                        acc += b[k] * c
                if acc:
                    row[m] = acc if m % 2 == 0 else -acc
        rows[i] = row
    return WindowedMatrix(n, n, 1, rows)


def toeplitz_intertwiner_matrix(n: int) -> WindowedMatrix:
    """A: the intertwiner with (block unipotent - I) * A = A * (Jordan block - I),
    normalized by first column e1.  Satisfies Q = A * (Jordan block), which is
    the independent route to Q used in verification.
    """
    b = signed_catalan_sequence(n // 2 + 2)
    rows: dict = {}
    for i in range(1, n + 1):
        row = {}
        if i == 1:
            row[1] = 1
            if n >= 2:
                row[2] = -1
        elif i == 2 and n >= 2:
            row[2] = 1
        s, odd = divmod(i - 1, 2)
        if odd == 0:
            for m in range(max(3, i), n + 1):
                v = binomial(m - s - 1, s)
                if v:
                    row[m] = -v if m % 2 == 0 else v
        else:
            for m in range(max(3, i), n + 1):
                acc = 0
                for k in range(1, m // 2 - s + 1):
                    c = binomial(m - s - k - 1, s + k - 1)
                    if c:
                        acc += b[k] * c
                if acc:
                    row[m] = acc if m % 2 == 0 else -acc
        rows[i] = {j: v for j, v in row.items() if v}
    return WindowedMatrix(n, n, 1, rows)


def expand_block_toeplitz(m2: SeriesMatrix2x2, size: int) -> WindowedMatrix:
    """Expand a 2x2 series matrix into its size x size block-Toeplitz window:
    the 2x2 block at block position (r, r+m) is the coefficient matrix of t**m.
    """
    if size < 2 or size % 2:
        raise ValueError("size must be a positive even number")
    half = size // 2
    if m2.order < half:
        raise InsufficientWindowError(
            f"series order {m2.order} too small for window {size}: need >= {half}",
            needed_cols=half,
        )
    rows: dict = {}
    series = m2.entries()  # (a, b, c, d) = entries (1,1), (1,2), (2,1), (2,2)
    for br in range(1, half + 1):
        for m in range(0, half - br + 1):
            block = (
                (series[0].coeffs[m], series[1].coeffs[m]),
                (series[2].coeffs[m], series[3].coeffs[m]),
            )
            bc = br + m
            for di in (0, 1):
                for dj in (0, 1):
                    v = block[di][dj]
                    if v:
                        i = 2 * br - 1 + di
                        j = 2 * bc - 1 + dj
                        rows.setdefault(i, {})[j] = v if v.denominator != 1 else v.numerator
    return WindowedMatrix(size, size, 2, rows)


def dyadic_interleave(a: WindowedMatrix, cols: int, rows_out: int | None = None) -> WindowedMatrix:
    """Replicate a small matrix across every dyadic tower d, 2d, 4d, ... (d odd):
    output (d * 2**(k-1), d * 2**(l-1)) = a[k, l].

    The growth certificate comes from the band structure of a: if a[k, l] = 0
    whenever k > l + r, towers give i <= 2**r * j, so growth is 2**max(r, 1).
    """
    shift = 0
    for k, row in a.rows.items():
        for ell in row:
            if k - ell > shift:
                shift = k - ell
    growth = 1 << max(shift, 1)
    if rows_out is None:
        rows_out = growth * cols
    need_rows = rows_out.bit_length()      # floor(log2(rows_out)) + 1
    need_cols = cols.bit_length()
    if a.nrows < need_rows or a.ncols < need_cols:
        raise InsufficientWindowError(
            f"interleave source {a.nrows} x {a.ncols} too small for window "
            f"{rows_out} x {cols}: need {need_rows} x {need_cols}",
            needed_rows=need_rows,
            needed_cols=need_cols,
        )
    rows: dict = {}
    for k, arow in a.rows.items():
        pi = 1 << (k - 1)
        if pi > rows_out:
            continue
        for ell, v in arow.items():
            pj = 1 << (ell - 1)
            if pj > cols:
                continue
            d_max = min(rows_out // pi, cols // pj)
            for d in range(1, d_max + 1, 2):
                rows.setdefault(d * pi, {})[d * pj] = v
    return WindowedMatrix(rows_out, cols, growth, rows)


def growth_counterexample_pair(n: int) -> tuple[WindowedMatrix, WindowedMatrix]:
    """The pair (B, B') with B unitriangular with -1 above the diagonal and
    B'[i, j] = 2**(j-i-1) above the diagonal: B * B' = I although the entries
    of B' outgrow every polynomial bound."""
    b_rows = {
        i: {i: 1, **{j: -1 for j in range(i + 1, n + 1)}}
        for i in range(1, n + 1)
    }
    bp_rows = {
        i: {i: 1, **{j: 1 << (j - i - 1) for j in range(i + 1, n + 1)}}
        for i in range(1, n + 1)
    }
    return (
        WindowedMatrix(n, n, 1, b_rows),
        WindowedMatrix(n, n, 1, bp_rows),
    )


def verify_jordan_suite(n: int = 512) -> dict:
    """Exact checks that Z conjugates the divisor matrix into dyadic Jordan
    form on an n x n window: Z * D = J * Z and Z * Z**-1 = I."""
    z = divisor_transition_matrix(n)
    zinv = divisor_transition_inverse(n)
    d = divisor_matrix(n)
    j = dyadic_jordan_matrix(n)
    checks = []

    lhs = windowed_mul(z, d, n)
    rhs = windowed_mul(j, z, n)
    checks.append({
        "name": f"Z * D = J * Z on {n} x {n}",
        "pass": lhs == rhs,
        "detail": f"{lhs.nonzero_count()} nonzero product entries",
    })

    prod = windowed_mul(z, zinv, n)
    checks.append({
        "name": f"Z * (X Z X) = I on {n} x {n}",
        "pass": prod.is_identity(),
        "detail": "inverse built entrywise by parity signs, not by inversion",
    })

    return {
        "suite": "jordan",
        "size": n,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }


def verify_transition_suite(n: int = 256) -> dict:
    """Exact checks for the block-Toeplitz transition pair on an n-window:
    P * Q = I, the unipotent intertwine P * (U - I) = (Jinf - I) * P, the
    independent route Q = A * Jinf, and the entry bounds 2**(2j), 2**(3j)."""
    checks = []
    p = toeplitz_transition_matrix(n)
    q = toeplitz_transition_inverse(n)

    prod = windowed_mul(p, q, n)
    checks.append({
        "name": f"P * Q = I on {n} x {n}",
        "pass": prod.is_identity(),
        "detail": "both factors from closed binomial forms",
    })

    n2 = 2 * n
    p2 = toeplitz_transition_matrix(n2)
    _, t_img, _ = sl2_generator_images(n + 1)
    u_minus_i = expand_block_toeplitz(
        t_img - SeriesMatrix2x2.identity(t_img.order), n2
    )
    jinf2 = jordan_block_matrix(n2)
    shift2 = jinf2.sub(WindowedMatrix.identity(n2))
    lhs = windowed_mul(p2, u_minus_i, n)
    rhs = windowed_mul(shift2, p2, n2).submatrix(n2, n)
    checks.append({
        "name": f"P * (U - I) = (Jinf - I) * P on {n2} x {n}",
        "pass": lhs == rhs,
        "detail": "U is the block-Toeplitz image of T",
    })

    a = toeplitz_intertwiner_matrix(n)
    q_alt = windowed_mul(a, jordan_block_matrix(n), n)
    checks.append({
        "name": f"Q = A * Jinf on {n} x {n}",
        "pass": q_alt == q,
        "detail": "independent derivation of Q through the intertwiner",
    })

    p_ok = all(abs(v) <= (1 << (2 * j)) for _, j, v in p.entries())
    q_ok = all(abs(v) <= (1 << (3 * j)) for _, j, v in q.entries())
    checks.append({
        "name": f"entry bounds |P[i,j]| <= 2**(2j) and |Q[i,j]| <= 2**(3j), window {n}",
        "pass": p_ok and q_ok,
        "detail": "largest entries occur in the final columns",
    })

    return {
        "suite": "transition",
        "size": n,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }


def verify_counterexample_suite(n: int = 256) -> dict:
    """B * B' = I with B' entries 2**(j-i-1): inverses escape entry bounds."""
    b, bp = growth_counterexample_pair(n)
    checks = []
    checks.append({
        "name": f"B * B' = I on {n} x {n}",
        "pass": windowed_mul(b, bp, n).is_identity(),
        "detail": "B' has entries 2**(j-i-1) above the diagonal",
    })
    demo = all((1 << (j - 2)) > j**10 for j in range(72, n + 1))
    checks.append({
        "name": f"entry blow-up demonstration 2**(j-2) > j**10 for 72 <= j <= {n}",
        "pass": demo,
        "detail": "no polynomial bound can hold for the inverse",
    })
    return {
        "suite": "counterexample",
        "size": n,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }
