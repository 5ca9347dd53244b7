"""The orbit-mate of zeta and the cubic equation tying the two together.

Acting on the constant series 1, the generator T produces zeta and its
convolution powers.  Acting by S produces a new Dirichlet series phi whose
coefficients a_n are integers computable three independent ways: a closed
alternating formula over ordered factorizations, the first row of -rho(S),
and a coefficientwise recursion.  The three agree, and phi satisfies

    (zeta - 1) phi^2 + zeta phi - zeta (zeta - 1) = 0

exactly, coefficient by coefficient.  The identity survives restriction to
any finite set of primes and any completely multiplicative twist, and a_n
depends only on the multiset of prime exponents of n.

Run: python3 demos/orbit_cubic.py
"""

from zetaorbit.dseries import DirichletSeries
from zetaorbit.orbit import (
    chi4_prime_values,
    cubic_residual,
    partition_table,
    phi_via_cubic,
    phi_via_matrix,
    phi_via_rhos,
)


def main():
    n = 2000

    a = phi_via_rhos(n)
    b = phi_via_matrix(min(n, 512))  # matrix route kept smaller, same values
    c = phi_via_cubic(n)
    print(f"oracle agreement: closed formula == recursion on {n} terms: {a == c}")
    print(f"                  closed formula == matrix row on {b.terms} terms: "
          f"{all(a[m] == b[m] for m in range(1, b.terms + 1))}")
    print("a_1..a_16:", [a[m] for m in range(1, 17)])

    zeta = DirichletSeries.zeta(n)
    res = cubic_residual(zeta, a)
    print(f"\ncubic residual vanishes for n <= {n}: "
          f"{all(res[m] == 0 for m in range(1, n + 1))}")

    # the identity is stable under restriction and twisting because both
    # operations are ring homomorphisms of the convolution algebra
    res23 = cubic_residual(zeta.restrict_to_primes({2, 3}),
                           a.restrict_to_primes({2, 3}))
    print(f"same, restricted to primes {{2, 3}}: "
          f"{all(res23[m] == 0 for m in range(1, n + 1))}")
    chi = chi4_prime_values(n)
    res_chi = cubic_residual(zeta.twist(chi), a.twist(chi))
    print(f"same, twisted by the character mod 4: "
          f"{all(res_chi[m] == 0 for m in range(1, n + 1))}")

    # a_n only sees the exponent partition of n, so the table below is the
    # whole story for n <= 2000
    table = partition_table(n, phi=a)
    print(f"\n{len(table)} exponent partitions realized below {n}:")
    for lam in sorted(table, key=lambda t: (sum(t), t))[:12]:
        print(f"   a_{lam or '()'} = {table[lam]}")
    print("   ...")

    # the sequence is not multiplicative, unlike the zeta coefficients
    print(f"\na_12 = {a[12]} but a_4 * a_3 = {a[4] * a[3]}: "
          "phi is not multiplicative")


if __name__ == "__main__":
    main()
