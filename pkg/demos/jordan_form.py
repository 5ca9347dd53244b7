"""Walk through the Jordan form of the divisor matrix.

The divisor matrix D has a 1 at (i, j) exactly when i divides j; acting on
coefficient sequences it multiplies a Dirichlet series by zeta.  Conjugating
by the transition matrix Z turns D into the dyadic Jordan matrix J, which
has ones on the diagonal and at (i, 2i): a single unipotent Jordan block
replicated across the odd-indexed dyadic towers.  The inverse of Z is Z
itself sandwiched between parity sign flips, so everything stays integral.

Run: python3 demos/jordan_form.py
"""

from zetaorbit.cfmat import (
    divisor_matrix,
    divisor_transition_inverse,
    divisor_transition_matrix,
    dyadic_jordan_matrix,
    parity_sign_matrix,
    windowed_mul,
)


def show(label, m, size=12):
    print(f"{label} (leading {size} x {size} corner):")
    for i in range(1, size + 1):
        row = " ".join(f"{m.entry(i, j):3d}" for j in range(1, size + 1))
        print("   " + row)
    print()


def main():
    n = 64

    d = divisor_matrix(n)
    z = divisor_transition_matrix(n)
    j = dyadic_jordan_matrix(n)
    show("divisor matrix D", d)
    show("transition matrix Z", z)
    show("dyadic Jordan matrix J", j)

    # the conjugation identity, checked exactly on the window
    lhs = windowed_mul(z, d, n)
    rhs = windowed_mul(j, z, n)
    print(f"Z * D == J * Z on the {n}-window: {lhs == rhs}")

    # Z is its own inverse up to parity signs: Z^-1 = X Z X
    x = parity_sign_matrix(n)
    zinv = divisor_transition_inverse(n)
    via_signs = windowed_mul(windowed_mul(x, z, n), x, n)
    print(f"Z^-1 == X * Z * X entrywise: {zinv == via_signs}")
    print(f"Z * Z^-1 == I on the window:  "
          f"{windowed_mul(z, zinv, n).is_identity()}")

    # odd rows of Z come from the identity; row d * 2**k carries the counts
    # of ordered k-factorizations along the multiples of d
    row = [(j, z.entry(12, j)) for j in range(1, n + 1) if z.entry(12, j)]
    print(f"row 12 of Z (12 = 3 * 2**2, so 2-factorization counts over 3m): {row}")


if __name__ == "__main__":
    main()
