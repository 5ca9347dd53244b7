import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaorbit import cfmat
from zetaorbit.cfmat import (
    InsufficientWindowError,
    WindowedMatrix,
    divisor_matrix,
    divisor_matrix_inverse,
    divisor_transition_inverse,
    divisor_transition_matrix,
    dyadic_interleave,
    dyadic_jordan_matrix,
    expand_block_toeplitz,
    growth_counterexample_pair,
    jordan_block_matrix,
    parity_sign_matrix,
    toeplitz_intertwiner_matrix,
    toeplitz_transition_inverse,
    toeplitz_transition_matrix,
    windowed_mul,
)
from zetaorbit.exactnum import FactorizationTable, moebius, signed_catalan_sequence
from zetaorbit.pseries import sl2_generator_images

from oracles import dense_mul, moebius_brute, window_to_dense


class TestWindowedMatrix:
    def test_construction_and_entry(self):
        m = WindowedMatrix.from_entries(3, 3, 1, [(1, 2, 5), (3, 3, -1)])
        assert m.entry(1, 2) == 5
        assert m.entry(3, 3) == -1
        assert m.entry(2, 2) == 0
        assert m.nonzero_count() == 2
        with pytest.raises(IndexError):
            m.entry(4, 1)

    def test_entries_are_sorted_row_major(self):
        m = WindowedMatrix.from_entries(3, 3, 1, [(2, 3, 1), (1, 1, 1), (2, 1, 1)])
        assert list(m.entries()) == [(1, 1, 1), (2, 1, 1), (2, 3, 1)]

    def test_identity_and_flags(self):
        eye = WindowedMatrix.identity(4)
        assert eye.is_identity()
        assert not eye.is_zero()
        assert eye.sub(eye).is_zero()
        assert (-eye).scale(-1) == eye

    def test_add_sub_shape_checks(self):
        a = WindowedMatrix.identity(3)
        b = WindowedMatrix.identity(4)
        with pytest.raises(ValueError):
            a.add(b)

    def test_submatrix_and_window_error(self):
        eye = WindowedMatrix.identity(6)
        top = eye.submatrix(2, 4)
        assert top.nrows == 2 and top.ncols == 4
        assert top.entry(2, 2) == 1
        with pytest.raises(InsufficientWindowError):
            eye.submatrix(7, 3)

    def test_measured_growth_and_certificate(self):
        m = WindowedMatrix.from_entries(4, 4, 2, [(4, 2, 1), (1, 4, 1)])
        assert m.measured_growth() == 2
        assert m.growth_certificate_holds()
        liar = WindowedMatrix.from_entries(4, 4, 1, [(4, 2, 1)])
        assert not liar.growth_certificate_holds()

    def test_first_row_dense(self):
        m = WindowedMatrix.from_entries(2, 5, 3, [(1, 2, 7), (2, 1, 1)])
        assert m.first_row() == [0, 0, 7, 0, 0, 0]

    def test_json_deterministic(self):
        m = WindowedMatrix.from_entries(2, 2, 1, [(1, 1, 1), (2, 2, -3)])
        text = m.to_json()
        assert text == m.to_json()
        payload = json.loads(text)
        assert payload["rows"] == 2 and payload["growth"] == 1
        assert payload["entries"] == [[1, 1, "1"], [2, 2, "-3"]]


def random_growth_window(rng, growth, nrows, ncols, density=0.4):
    entries = []
    for i in range(1, nrows + 1):
        for j in range(1, ncols + 1):
            if i <= growth * j and rng.random() < density:
                entries.append((i, j, rng.randint(-5, 5)))
    return WindowedMatrix.from_entries(nrows, ncols, growth, entries)


class TestWindowedMul:
    @given(st.integers(min_value=0, max_value=10_000),
           st.sampled_from([1, 2]), st.sampled_from([1, 2]),
           st.integers(min_value=1, max_value=6))
    @settings(max_examples=60)
    def test_matches_dense_product(self, seed, wa, wb, out_cols):
        rng = random.Random(seed)
        mid = wb * out_cols
        a = random_growth_window(rng, wa, wa * mid, mid)
        b = random_growth_window(rng, wb, mid, out_cols)
        got = windowed_mul(a, b, out_cols)
        want = dense_mul(window_to_dense(a), window_to_dense(b))
        assert got.nrows == wa * mid and got.ncols == out_cols
        assert window_to_dense(got) == [row[:out_cols] for row in want]
        assert got.growth == wa * wb
        assert got.growth_certificate_holds()

    def test_window_too_small_raises_with_hint(self):
        a = WindowedMatrix.identity(4)
        b = WindowedMatrix.from_entries(4, 4, 2, [(2, 1, 1)])
        with pytest.raises(InsufficientWindowError) as exc:
            windowed_mul(a, b, 4)  # b needs 8 rows for growth 2 at 4 columns
        assert exc.value.needed_rows == 8 or exc.value.needed_cols is not None

    def test_products_extend_windows_consistently(self):
        # the 8-column window of D*D must equal the top of the 16-column one
        small = windowed_mul(divisor_matrix(8), divisor_matrix(8), 8)
        large = windowed_mul(divisor_matrix(16), divisor_matrix(16), 16)
        assert large.submatrix(8, 8) == small


class TestNamedMatrices:
    def test_divisor_matrix_entries(self):
        d = divisor_matrix(12)
        for i in range(1, 13):
            for j in range(1, 13):
                assert d.entry(i, j) == (1 if j % i == 0 else 0)

    def test_divisor_inverse_is_moebius_quotient(self):
        dinv = divisor_matrix_inverse(12)
        for i in range(1, 13):
            for j in range(1, 13):
                want = moebius_brute(j // i) if j % i == 0 else 0
                assert dinv.entry(i, j) == want

    def test_divisor_inverse_roundtrip(self):
        n = 24
        prod = windowed_mul(divisor_matrix(n), divisor_matrix_inverse(n), n)
        assert prod.is_identity()

    def test_jordan_targets(self):
        j = dyadic_jordan_matrix(10)
        for i in range(1, 11):
            for k in range(1, 11):
                assert j.entry(i, k) == (1 if k in (i, 2 * i) else 0)
        jinf = jordan_block_matrix(5)
        for i in range(1, 6):
            for k in range(1, 6):
                assert jinf.entry(i, k) == (1 if k in (i, i + 1) else 0)

    def test_parity_sign_matrix(self):
        x = parity_sign_matrix(8)
        signs = {1: 1, 2: -1, 3: 1, 4: 1, 5: 1, 6: -1, 7: 1, 8: -1}
        for i in range(1, 9):
            assert x.entry(i, i) == signs[i]
        assert x.nonzero_count() == 8


class TestDivisorTransition:
    def test_row_structure(self):
        n = 32
        z = divisor_transition_matrix(n)
        table = FactorizationTable(n)
        for d in (1, 3, 5):
            for k in range(0, 4):
                i = d * 2 ** k
                if i > n:
                    continue
                for j in range(1, n + 1):
                    want = table.count(k, j // d) if j % d == 0 and k >= 1 else 0
                    if k == 0:
                        want = 1 if j == d else 0
                    assert z.entry(i, j) == want

    def test_conjugates_divisor_matrix_to_jordan_form(self):
        n = 64
        z = divisor_transition_matrix(n)
        lhs = windowed_mul(z, divisor_matrix(n), n)
        rhs = windowed_mul(dyadic_jordan_matrix(n), z, n)
        assert lhs == rhs

    def test_inverse_by_parity_signs(self):
        n = 48
        z = divisor_transition_matrix(n)
        zinv = divisor_transition_inverse(n)
        assert windowed_mul(z, zinv, n).is_identity()
        assert windowed_mul(zinv, z, n).is_identity()
        # the inverse is X Z X: entrywise signs (-1)^(v2(i) + v2(j))
        x = parity_sign_matrix(n)
        xzx = windowed_mul(windowed_mul(x, z, n), x, n)
        assert xzx == zinv


class TestToeplitzTransition:
    def test_unitriangular(self):
        p = toeplitz_transition_matrix(12)
        q = toeplitz_transition_inverse(12)
        for m in (p, q):
            for i in range(1, 13):
                assert m.entry(i, i) == 1
                for j in range(1, i):
                    assert m.entry(i, j) == 0

    def test_known_entries(self):
        q = toeplitz_transition_inverse(8)
        assert q.entry(2, 4) == -1
        assert q.entry(2, 3) == 0
        p = toeplitz_transition_matrix(16)
        b = signed_catalan_sequence(7)
        # second row of P collects the signed Catalan numbers at even columns
        for s in range(1, 7):
            assert p.entry(2, 2 * s + 2) == b[s]

    def test_inverse_roundtrip(self):
        n = 48
        p = toeplitz_transition_matrix(n)
        q = toeplitz_transition_inverse(n)
        assert windowed_mul(p, q, n).is_identity()
        assert windowed_mul(q, p, n).is_identity()

    def test_q_from_intertwiner(self):
        n = 32
        a = toeplitz_intertwiner_matrix(n)
        jinf = jordan_block_matrix(n)
        assert windowed_mul(a, jinf, n) == toeplitz_transition_inverse(n)

    def test_intertwining_relation(self):
        # P (U - I) = (Jinf - I) P where U is the block-Toeplitz image of T
        n = 16
        _, t_img, _ = sl2_generator_images(n)
        u = expand_block_toeplitz(t_img, 2 * n)
        p2 = toeplitz_transition_matrix(2 * n)
        u_minus = u.sub(WindowedMatrix.identity(2 * n))
        lhs = windowed_mul(p2, u_minus, n)
        jshift = jordan_block_matrix(2 * n).sub(WindowedMatrix.identity(2 * n))
        rhs = windowed_mul(jshift, p2, 2 * n).submatrix(2 * n, n)
        assert lhs == rhs


class TestBlockToeplitz:
    def test_layout_matches_coefficient_blocks(self):
        order = 6
        _, t_img, _ = sl2_generator_images(order)
        size = 12
        u = expand_block_toeplitz(t_img, size)
        for m in range(0, size // 2):
            block = t_img.coefficient_block(m)
            for a in (1, 2):
                for bcol in (1, 2):
                    r = 1  # first block row
                    i = 2 * (r - 1) + a
                    j = 2 * (r - 1 + m) + bcol
                    assert u.entry(i, j) == block[a - 1][bcol - 1]

    def test_block_shift_invariance(self):
        order = 8
        s_img, _, _ = sl2_generator_images(order)
        size = 16
        w = expand_block_toeplitz(s_img, size)
        for i in range(1, size - 1):
            for j in range(1, size - 1):
                assert w.entry(i, j) == w.entry(i + 2, j + 2)

    def test_window_needs_enough_order(self):
        _, t_img, _ = sl2_generator_images(2)
        with pytest.raises(InsufficientWindowError):
            expand_block_toeplitz(t_img, 12)

    def test_odd_size_rejected(self):
        _, t_img, _ = sl2_generator_images(8)
        with pytest.raises(ValueError):
            expand_block_toeplitz(t_img, 7)


class TestDyadicInterleave:
    def test_jordan_block_interleaves_to_dyadic_form(self):
        jinf = jordan_block_matrix(6)
        got = dyadic_interleave(jinf, 32, 32)
        assert got == dyadic_jordan_matrix(32)

    def test_position_mapping(self):
        a = WindowedMatrix.from_entries(5, 4, 2, [(1, 2, 7), (3, 2, 9)])
        out = dyadic_interleave(a, 8, 16)
        # entry (k, l) lands at (d 2^(k-1), d 2^(l-1)) for every odd d
        for d in (1, 3):
            assert out.entry(d, 2 * d) == 7
            assert out.entry(4 * d, 2 * d) == 9
        assert out.entry(2, 2) == 0

    def test_window_requirements(self):
        a = WindowedMatrix.from_entries(2, 2, 2, [(1, 1, 1)])
        with pytest.raises(InsufficientWindowError):
            dyadic_interleave(a, 64, 64)  # needs tower height 7


class TestCounterexamplePair:
    def test_inverse_pair(self):
        b, bprime = growth_counterexample_pair(40)
        assert windowed_mul(b, bprime, 40).is_identity()
        assert windowed_mul(bprime, b, 40).is_identity()

    def test_entry_formulas(self):
        b, bprime = growth_counterexample_pair(10)
        for i in range(1, 11):
            for j in range(1, 11):
                if i == j:
                    assert b.entry(i, j) == 1 and bprime.entry(i, j) == 1
                elif j > i:
                    assert b.entry(i, j) == -1
                    assert bprime.entry(i, j) == 2 ** (j - i - 1)
                else:
                    assert b.entry(i, j) == 0 and bprime.entry(i, j) == 0


class TestSuites:
    def test_jordan_suite(self):
        report = cfmat.verify_jordan_suite(48)
        assert report["pass"] and len(report["checks"]) == 2

    def test_transition_suite(self):
        report = cfmat.verify_transition_suite(24)
        assert report["pass"] and len(report["checks"]) == 4

    def test_counterexample_suite(self):
        report = cfmat.verify_counterexample_suite(96)
        assert report["pass"] and len(report["checks"]) == 2
