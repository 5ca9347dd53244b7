"""Eliminating zeta from the cubic at mirror points.

The cubic ties phi(s) to the value u = zeta(s).  Writing the same cubic at
the mirror point with zeta value a * u and taking the resultant in u yields
a single polynomial G(a, x, y) relating x = phi(s), y = phi(mirror) and the
ratio a of zeta values.  The resultant reproduces G with proportionality
factor 1, G(1, x, x) vanishes identically, and seeded numeric samples that
follow one branch of the cubic land on the zero set of G to forty digits.
The discriminant of the cubic in its series variable factors over Q with a
conjugate root pair of absolute value exactly 1/2.

Run: python3 demos/functional_equation.py
"""

import sympy

from zetaorbit.orbit import (
    delta_roots_check,
    functional_equation_resultant,
    functional_equation_samples,
    functional_polynomial,
    functional_value,
)


def main():
    g = functional_polynomial()
    a, x, y = sympy.symbols("a x y")
    print("G(a, x, y) =")
    print("   " + sympy.pretty(sympy.collect(g, a), use_unicode=False).replace(
        "\n", "\n   "))

    res, quo, rem = functional_equation_resultant()
    print(f"\nresultant == G exactly: quotient {quo}, remainder {rem}")

    print(f"G(1, x, x) expands to: {sympy.expand(functional_value(1, x, x))}")

    failures, worst = functional_equation_samples(samples=100)
    print(f"100 seeded branch samples: {failures} failures, "
          f"worst |G| = {worst:.2e}")

    # the discriminant of the cubic in w, as a polynomial in z = zeta - 1
    report = delta_roots_check()
    for check in report["checks"]:
        print(f"{'ok ' if check['pass'] else 'FAIL'} {check['name']}")
    print("\nthe conjugate pair sits on the circle |z| = 1/2; the only real")
    print("root z = -1 corresponds to the line where the cubic degenerates")


if __name__ == "__main__":
    main()
