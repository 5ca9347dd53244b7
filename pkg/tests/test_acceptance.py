"""Acceptance gate: every criterion at full scale, one pass/fail line each.

Run with `pytest tests/test_acceptance.py -s` to see the lines; the stated
runtime budgets are asserted where a criterion carries one.  All checks are
exact equalities except the seeded numeric branch sampling in criterion 9,
which uses the stated 1e-9 tolerance at 40 working digits.
"""

import time

from zetaorbit.cfmat import (
    growth_counterexample_pair,
    verify_counterexample_suite,
    verify_jordan_suite,
    verify_transition_suite,
)
from zetaorbit.exactnum import verify_combinatorics_suite
from zetaorbit.orbit import (
    FROZEN_PHI_VALUES,
    phi_via_rhos,
    verify_cubic_suite,
    verify_functional_suite,
    verify_genfunc_suite,
    verify_phi_suite,
)
from zetaorbit.rep import verify_gl_suite, verify_representation_suite


def _run(number, label, suite_fn, budget=None, extra_ok=True, extra_note=""):
    start = time.perf_counter()
    report = suite_fn()
    elapsed = time.perf_counter() - start
    ok = report["pass"] and extra_ok
    in_budget = budget is None or elapsed < budget
    timing = f" [{elapsed:.1f} s" + (f", budget {budget} s]" if budget else "]")
    print(f"{'PASS' if ok and in_budget else 'FAIL'} criterion {number}: {label}{timing}")
    failed = [c["name"] for c in report["checks"] if not c["pass"]]
    assert ok, f"criterion {number}: failed checks {failed} {extra_note}"
    assert in_budget, f"criterion {number}: {elapsed:.1f} s exceeds {budget} s"


def test_criterion_01_jordan_form():
    _run(1, "Z conjugates the divisor matrix to dyadic Jordan form, window 512",
         lambda: verify_jordan_suite(512), budget=30)


def test_criterion_02_transition_pair():
    _run(2, "block-Toeplitz transition pair: inverse, intertwine, bounds, window 256",
         lambda: verify_transition_suite(256), budget=60)


def test_criterion_03_representation():
    _run(3, "rho(T) = D, rho(S) integral of growth 2, group relations from source 4096",
         lambda: verify_representation_suite(4096), budget=300)


def test_criterion_04_gl_extension():
    _run(4, "reflection involution, conjugation of S, non-integral entry, 32 columns",
         lambda: verify_gl_suite(32))


def test_criterion_05_phi_oracles():
    phi = phi_via_rhos(8)
    frozen_ok = all(phi[n] == v for n, v in FROZEN_PHI_VALUES.items())
    _run(5, "three coefficient oracles agree for n <= 4096; frozen spot values",
         lambda: verify_phi_suite(4096), extra_ok=frozen_ok,
         extra_note="frozen values a_1=0, a_2=a_3=a_4=a_6=1, a_8=0")


def test_criterion_06_cubic_identity():
    _run(6, "cubic identity exact for n <= 10000, plain, {2,3}-restricted, chi_4-twisted",
         lambda: verify_cubic_suite(10000), budget=60)


def test_criterion_07_combinatorics():
    _run(7, "factorization-count identities m <= 10000 (k <= 12); growth bound; "
            "signed Catalan k <= 64",
         lambda: verify_combinatorics_suite(max_m=10000, max_k=12, catalan_max=64))


def test_criterion_08_generating_functions():
    _run(8, "series identities: g at 256, weighted Fibonacci to 128, "
            "branch terms k <= 16 at 64, branch cubic at 64",
         lambda: verify_genfunc_suite(order=256, fib_max=128,
                                      term_max=16, term_order=64))


def test_criterion_09_functional_equation():
    _run(9, "resultant reproduces the two-variable polynomial (factor reported); "
            "100 branch samples within 1e-9",
         lambda: verify_functional_suite(samples=100, tolerance=1e-9))


def test_criterion_10_counterexample():
    b, bprime = growth_counterexample_pair(256)
    formula_ok = all(
        bprime.entry(i, j) == (1 if i == j else (1 << (j - i - 1)) if j > i else 0)
        for i in range(1, 257)
        for j in range(1, 257)
    )
    _run(10, "inverse pair B, B' at 256 with B' entries 2**(j-i-1)",
         lambda: verify_counterexample_suite(256), extra_ok=formula_ok,
         extra_note="entry formula for B'")
