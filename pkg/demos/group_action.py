"""The action of SL(2,Z) on Dirichlet series coefficients.

T acts by the divisor matrix D (multiplication by zeta); the image of S is
built in three exact stages: a 2x2 power-series matrix, its block-Toeplitz
expansion conjugated to the Jordan picture, and a dyadic interleaving that
transports the Jordan block onto the divisor matrix.  The resulting rho(S)
is integral and vanishes at (i, j) once i > 2j, so windows of any size can
be produced and multiplied exactly.  The defining relations S^4 = 1 and
(S T)^6 = 1 then hold window by window.

Run: python3 demos/group_action.py
"""

from zetaorbit.cfmat import divisor_matrix
from zetaorbit.rep import (
    GroupWord,
    divisor_rep_letter,
    evaluate_word,
    required_source_columns,
)


def main():
    n = 512

    rho_t = divisor_rep_letter("T", n)
    print(f"rho(T) == divisor matrix on {n} columns: "
          f"{rho_t == divisor_matrix(n)}")

    rho_s = divisor_rep_letter("S", n)
    print(f"rho(S) window: {rho_s.nrows} x {rho_s.ncols}, "
          f"{rho_s.nonzero_count()} nonzero entries, "
          f"growth certificate {rho_s.growth}")
    print(f"all entries integral: "
          f"{all(getattr(v, 'denominator', 1) == 1 for _, _, v in rho_s.entries())}")

    print("\nleading 8 x 8 corner of rho(S):")
    for i in range(1, 9):
        print("   " + " ".join(f"{rho_s.entry(i, j):4d}" for j in range(1, 9)))

    # the first row of -rho(S) is the coefficient sequence of the orbit
    # series phi; see demos/orbit_cubic.py for what it satisfies
    row = rho_s.first_row()
    print("\nfirst row of -rho(S):", [-row[j] for j in range(1, 17)])

    # relations, evaluated as windowed products with precomputed budgets
    for text, out in (("S^4", 32), ("S T S T S T S T S T S T", 8)):
        word = GroupWord.parse(text)
        need = required_source_columns(word, out)
        ok = evaluate_word(word, out).is_identity()
        print(f"rho({text}) == I on {out} columns "
              f"(leading factor needs {need}): {ok}")

    # the center: S^2 = (S T)^3 = -1
    sq = evaluate_word(GroupWord.parse("S^2"), 32)
    cube = evaluate_word(GroupWord.parse("S T S T S T"), 16)
    sq_ok = all(v == (-1 if i == j else 0) for i, j, v in sq.entries())
    cube_ok = all(v == (-1 if i == j else 0) for i, j, v in cube.entries())
    print(f"rho(S^2) == rho((S T)^3) == -I: {sq_ok and cube_ok}")

    # inverses come from the antipode of the word, not matrix inversion
    word = GroupWord.parse("S T^2")
    both = GroupWord(word.letters + word.inverse().letters)
    print(f"rho(S T^2) * rho(T^-2 S^-1) == I: "
          f"{evaluate_word(both, 8).is_identity()}")

    # the reflection extending the action to GL(2,Z) is an involution that
    # conjugates S to S^-1, but it leaves the integers: entries are rational
    print(f"\nrho(W)^2 == I on 16 columns: "
          f"{evaluate_word(GroupWord.parse('W W'), 16, gl=True).is_identity()}")
    print(f"rho(W S W S) == I on 16 columns: "
          f"{evaluate_word(GroupWord.parse('W S W S'), 16, gl=True).is_identity()}")
    w = divisor_rep_letter("W", 16, gl=True)
    frac = next((i, j, v) for i, j, v in w.entries()
                if getattr(v, "denominator", 1) != 1)
    print(f"first non-integral entry of rho(W): [{frac[0]}, {frac[1]}] = {frac[2]}")


if __name__ == "__main__":
    main()
