"""The second change of basis: block-Toeplitz to the infinite Jordan block.

The generator T acts on pairs of power series by a unipotent block-Toeplitz
matrix U.  A transition pair P, Q with P * Q = I intertwines U - I with the
shift J_inf - I, so after conjugation T acts by the standard infinite Jordan
block.  The entries of P and Q grow at most like 2**(2j) and 2**(3j) in the
column index j; such a bound is what keeps windowed products exact, and it
is not automatic: an innocent-looking 0/1 upper-triangular matrix is shown
below whose inverse has entries 2**(j-i-1).

Run: python3 demos/transition_pair.py
"""

from zetaorbit.cfmat import (
    WindowedMatrix,
    expand_block_toeplitz,
    growth_counterexample_pair,
    jordan_block_matrix,
    toeplitz_intertwiner_matrix,
    toeplitz_transition_inverse,
    toeplitz_transition_matrix,
    windowed_mul,
)
from zetaorbit.pseries import SeriesMatrix2x2, sl2_generator_images


def main():
    n = 64
    p = toeplitz_transition_matrix(n)
    q = toeplitz_transition_inverse(n)

    print("leading 8 x 8 corner of P:")
    for i in range(1, 9):
        print("   " + " ".join(f"{p.entry(i, j):4d}" for j in range(1, 9)))
    print(f"\nP * Q == I on the {n}-window: "
          f"{windowed_mul(p, q, n).is_identity()}")

    # the intertwining relation that characterizes P up to normalization
    _, t_img, _ = sl2_generator_images(n + 1)
    u_minus_i = expand_block_toeplitz(
        t_img - SeriesMatrix2x2.identity(t_img.order), 2 * n)
    p2 = toeplitz_transition_matrix(2 * n)
    shift = jordan_block_matrix(2 * n).sub(WindowedMatrix.identity(2 * n))
    lhs = windowed_mul(p2, u_minus_i, n)
    rhs = windowed_mul(shift, p2, 2 * n).submatrix(2 * n, n)
    print(f"P * (U - I) == (J_inf - I) * P: {lhs == rhs}")

    # Q can be derived independently through an intertwiner A
    a = toeplitz_intertwiner_matrix(n)
    print(f"Q == A * J_inf:               "
          f"{windowed_mul(a, jordan_block_matrix(n), n) == q}")

    # entry growth: the bounds that make column-finite windows composable
    worst_p = max(abs(v) for _, _, v in p.entries())
    worst_q = max(abs(v) for _, _, v in q.entries())
    print(f"\nlargest |entry| at window {n}: P has {worst_p.bit_length()} bits, "
          f"Q has {worst_q.bit_length()} bits")
    p_bounded = all(abs(v) <= 1 << (2 * j) for _, j, v in p.entries())
    q_bounded = all(abs(v) <= 1 << (3 * j) for _, j, v in q.entries())
    print(f"bounds 2**(2j), 2**(3j) hold: {p_bounded and q_bounded}")

    # why a bound must be earned: B has entries in {0, 1} but its inverse
    # blows up exponentially
    b, bp = growth_counterexample_pair(20)
    print(f"\ncounterexample: B upper unitriangular of -1s, B * B' == I: "
          f"{windowed_mul(b, bp, 20).is_identity()}")
    print("row 1 of B':", [bp.entry(1, j) for j in range(1, 13)])


if __name__ == "__main__":
    main()
