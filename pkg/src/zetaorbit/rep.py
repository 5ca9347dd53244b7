"""The SL(2,Z) action on Dirichlet series, built in three exact stages.

Stage one sends the generators S, T into 2x2 power-series matrices and
expands them to block-Toeplitz windows.  Stage two conjugates by the
transition pair P, Q so that T acts as the infinite Jordan block.  Stage
three interleaves across the dyadic towers and conjugates by the divisor
transition matrix Z, after which T acts as the divisor matrix itself and
every group element acts by an integer matrix vanishing at (i, j) for
i > 2j.

Words in the generators are evaluated by windowed products with the column
budget precomputed from the growth factors, so the result is exactly the
corresponding window of the infinite product.  The GL(2,Z) reflection W is
available behind an explicit flag: it acts by rational, not integral,
matrices.
"""

from __future__ import annotations

from fractions import Fraction

from zetaorbit.cfmat import (
    InsufficientWindowError,
    WindowedMatrix,
    divisor_matrix,
    divisor_matrix_inverse,
    divisor_transition_inverse,
    divisor_transition_matrix,
    dyadic_interleave,
    expand_block_toeplitz,
    toeplitz_transition_inverse,
    toeplitz_transition_matrix,
    windowed_mul,
)
from zetaorbit.pseries import (
    SeriesMatrix2x2,
    gl_reflection_image,
    sl2_generator_images,
)


class WNotEnabledError(Exception):
    """A word uses the GL(2,Z) reflection without gl=True."""


_LETTERS = ("S", "S^-1", "T", "T^-1", "W")
_INVERSE = {"S": "S^-1", "S^-1": "S", "T": "T^-1", "T^-1": "T", "W": "W"}
_GROWTH = {"S": 2, "S^-1": 2, "T": 1, "T^-1": 1, "W": 2}


class GroupWord:
    """A word in the generators S, T (and optionally the reflection W)."""

    __slots__ = ("letters",)

    def __init__(self, letters):
        letters = tuple(letters)
        for letter in letters:
            if letter not in _LETTERS:
                raise ValueError(f"unknown generator {letter!r}")
        self.letters = letters

    @classmethod
    def parse(cls, text: str) -> "GroupWord":
        """Parse whitespace-separated tokens S, S^-1, T, T^-1, W; an integer
        exponent like T^5 or S^-2 expands to repetition."""
        letters = []
        for token in text.split():
            base, caret, exponent = token.partition("^")
            if base not in ("S", "T", "W"):
                raise ValueError(f"unknown generator {token!r}")
            e = 1
            if caret:
                try:
                    e = int(exponent)
                except ValueError:
                    raise ValueError(f"bad exponent in token {token!r}") from None
            letter = base if e >= 0 else _INVERSE[base]
            letters.extend([letter] * abs(e))
        return cls(letters)

    @property
    def uses_reflection(self) -> bool:
        return "W" in self.letters

    def growth(self) -> int:
        out = 1
        for letter in self.letters:
            out *= _GROWTH[letter]
        return out

    def inverse(self) -> "GroupWord":
        return GroupWord([_INVERSE[letter] for letter in reversed(self.letters)])

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, GroupWord):
            return NotImplemented
        return self.letters == other.letters

    def __repr__(self):
        return f"GroupWord({' '.join(self.letters) or 'empty'})"


def gamma_rep(letter: str, order: int) -> SeriesMatrix2x2:
    """The 2x2 series matrix of a generator (stage one before expansion)."""
    s_img, t_img, _ = sl2_generator_images(order)
    if letter == "S":
        return s_img
    if letter == "S^-1":
        return -s_img
    if letter == "T":
        return t_img
    if letter == "T^-1":
        return t_img.inverse()
    if letter == "W":
        return gl_reflection_image(order)
    raise ValueError(f"unknown generator {letter!r}")


def toeplitz_rep(letter: str, size: int) -> WindowedMatrix:
    """Block-Toeplitz window of a generator image, size x size (size even)."""
    return expand_block_toeplitz(gamma_rep(letter, size // 2 + 1), size)


def jordan_rep(letter: str, size: int) -> WindowedMatrix:
    """Window of the Jordan-side image: conjugate the block-Toeplitz image by
    the transition pair so that T becomes the infinite Jordan block.  Returns
    the leading (2*size) x size block with growth certificate 2."""
    tau1 = toeplitz_rep(letter, 2 * size)
    q = toeplitz_transition_inverse(size)
    m1 = windowed_mul(tau1, q, size)
    p = toeplitz_transition_matrix(2 * size)
    return windowed_mul(p, m1, size)


_rho_cache: dict = {}


def clear_caches() -> None:
    _rho_cache.clear()


def _cached_letter(letter: str, cols: int) -> WindowedMatrix:
    cached = _rho_cache.get(letter)
    if cached is None or cached.ncols < cols:
        cached = _build_letter(letter, cols)
        _rho_cache[letter] = cached
    growth = _GROWTH[letter]
    if cached.ncols == cols:
        return cached
    return cached.submatrix(growth * cols, cols)


def _build_letter(letter: str, cols: int) -> WindowedMatrix:
    if letter == "T":
        return divisor_matrix(cols)
    if letter == "T^-1":
        return divisor_matrix_inverse(cols)
    if letter == "S^-1":
        return _cached_letter("S", cols).scale(-1)
    # S and W go through the full three-stage pipeline.
    rows_out = 2 * cols
    k = rows_out.bit_length()  # tower heights present in the output window
    tau = jordan_rep(letter, k)
    psi = dyadic_interleave(tau, cols, rows_out)
    zinv = divisor_transition_inverse(rows_out)
    z = divisor_transition_matrix(cols)
    mid = windowed_mul(zinv, psi, cols)
    return windowed_mul(mid, z, cols)


def divisor_rep_letter(letter: str, cols: int, gl: bool = False) -> WindowedMatrix:
    """The image of one generator acting on Dirichlet coefficients, as the
    leading (growth * cols) x cols window."""
    if letter not in _LETTERS:
        raise ValueError(f"unknown generator {letter!r}")
    if letter == "W" and not gl:
        raise WNotEnabledError("the reflection W requires gl=True")
    return _cached_letter(letter, cols)


def required_source_columns(word: GroupWord, out_cols: int) -> int:
    """Columns the leading factor must supply to produce out_cols columns."""
    return word.growth() * out_cols


def evaluate_word(word: GroupWord, out_cols: int, gl: bool = False) -> WindowedMatrix:
    """Windowed product over the letters of the word, left to right, with the
    column budget of each factor precomputed from the growth factors."""
    if out_cols < 1:
        raise InsufficientWindowError("out_cols must be >= 1", needed_cols=1)
    if word.uses_reflection and not gl:
        raise WNotEnabledError("the word uses W; pass gl=True to allow it")
    letters = word.letters
    if not letters:
        return WindowedMatrix.identity(out_cols)
    # budget[i] = columns letter i must supply
    budget = [out_cols] * len(letters)
    for i in range(len(letters) - 2, -1, -1):
        budget[i] = budget[i + 1] * _GROWTH[letters[i + 1]]
    acc = divisor_rep_letter(letters[0], budget[0], gl=gl)
    for i in range(1, len(letters)):
        factor = divisor_rep_letter(letters[i], budget[i], gl=gl)
        acc = windowed_mul(acc, factor, budget[i])
    return acc


def reflection_rep(cols: int) -> WindowedMatrix:
    """The image of the GL(2,Z) reflection W; entries are exact rationals."""
    return divisor_rep_letter("W", cols, gl=True)


def _negated_identity_window(nrows: int, ncols: int) -> WindowedMatrix:
    rows = {i: {i: -1} for i in range(1, min(nrows, ncols) + 1)}
    return WindowedMatrix(nrows, ncols, 1, rows)


def verify_representation_suite(source: int = 4096) -> dict:
    """Exact checks of the defining relations on windows budgeted from a
    source column count: rho(S)**4 = I, (rho(S) rho(T))**6 = I and
    rho(S)**2 = (rho(S) rho(T))**3 on source/64 columns or more, plus the
    pipeline consistency rho(T) = divisor matrix and the integrality and
    growth certificates for rho(S)."""
    checks = []
    out6 = source // 64
    if out6 < 1:
        raise InsufficientWindowError(
            f"source {source} too small for the sixth-power relation: need >= 64",
            needed_cols=64,
        )

    n_t = min(source, 512)
    direct = divisor_matrix(2 * n_t).submatrix(2 * n_t, n_t)
    # build rho(T) through the full pipeline rather than the closed form
    rows_out = 2 * n_t
    k = rows_out.bit_length()
    tau_t = jordan_rep("T", k)
    psi_t = dyadic_interleave(tau_t, n_t, rows_out)
    mid = windowed_mul(divisor_transition_inverse(rows_out), psi_t, n_t)
    piped = windowed_mul(mid, divisor_transition_matrix(n_t), n_t)
    checks.append({
        "name": f"pipeline rho(T) equals the divisor matrix on {n_t} columns",
        "pass": piped == direct,
        "detail": "Zinv * interleave(jordan image of T) * Z",
    })

    rho_s = divisor_rep_letter("S", source)
    integral = all(
        isinstance(v, int) or (isinstance(v, Fraction) and v.denominator == 1)
        for _, _, v in rho_s.entries()
    )
    checks.append({
        "name": f"rho(S) integral on {source} columns",
        "pass": integral,
        "detail": f"{rho_s.nonzero_count()} nonzero entries",
    })
    checks.append({
        "name": "rho(S) vanishes at (i, j) for i > 2j",
        "pass": rho_s.measured_growth() <= 2,
        "detail": f"measured growth {rho_s.measured_growth()}",
    })

    out4 = source // 16
    word4 = GroupWord(["S"] * 4)
    checks.append({
        "name": f"rho(S)**4 = I on {out4} columns",
        "pass": evaluate_word(word4, out4).is_identity(),
        "detail": "fourth power of the order-four generator",
    })

    word6 = GroupWord(["S", "T"] * 6)
    checks.append({
        "name": f"(rho(S) * rho(T))**6 = I on {out6} columns",
        "pass": evaluate_word(word6, out6).is_identity(),
        "detail": "sixth power of the order-six product",
    })

    out_m = source // 8
    sq = evaluate_word(GroupWord(["S", "S"]), out_m)
    cube = evaluate_word(GroupWord(["S", "T"] * 3), out_m)
    neg_sq = sq == _negated_identity_window(sq.nrows, sq.ncols)
    neg_cube = cube == _negated_identity_window(cube.nrows, cube.ncols)
    checks.append({
        "name": f"rho(S)**2 = (rho(S) * rho(T))**3 = -I on {out_m} columns",
        "pass": neg_sq and neg_cube,
        "detail": "the center acts by -1",
    })

    return {
        "suite": "representation",
        "size": source,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }


def verify_gl_suite(cols: int = 32) -> dict:
    """Checks for the reflection: rho(W)**2 = I, the conjugation
    rho(W) rho(S) rho(W) rho(S) = I, and a non-integral witness entry."""
    checks = []

    w_word = GroupWord(["W", "W"])
    checks.append({
        "name": f"rho(W)**2 = I on {cols} columns",
        "pass": evaluate_word(w_word, cols, gl=True).is_identity(),
        "detail": "the reflection is an involution",
    })

    # W S W S = I restates W S W = S^-1
    conj = GroupWord(["W", "S", "W", "S"])
    checks.append({
        "name": f"rho(W) rho(S) rho(W) rho(S) = I on {cols} columns",
        "pass": evaluate_word(conj, cols, gl=True).is_identity(),
        "detail": "the reflection conjugates S to its inverse",
    })

    w = reflection_rep(cols)
    witness = None
    for i, j, v in w.entries():
        if isinstance(v, Fraction) and v.denominator != 1:
            witness = (i, j, v)
            break
    checks.append({
        "name": "rho(W) has a non-integral entry",
        "pass": witness is not None,
        "detail": f"rho(W)[{witness[0]}, {witness[1]}] = {witness[2]}" if witness else "all entries integral",
    })

    return {
        "suite": "gl",
        "size": cols,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }
