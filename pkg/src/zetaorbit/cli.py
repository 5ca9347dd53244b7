"""Batch command-line surface for the package.

Subcommands: alpha (ordered-factorization table), matrix (named matrix
windows), verify (verification suites), phi (coefficient oracles), orbit
(series attached to a group word), eval (numeric evaluation at a complex
point), export (one-file verification bundle).

Exit codes: 0 success, 1 a verification check failed (report still written),
2 usage error, 3 window too small (the error message carries the required
size).  Identical flags produce byte-identical output; random sampling is
seeded.  ZETA_ORBIT_THREADS caps the worker count where oracles fan out.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from zetaorbit import cfmat, exactnum, orbit, rep
from zetaorbit.cfmat import InsufficientWindowError, WindowedMatrix
from zetaorbit.dseries import DirichletSeries, format_exact
from zetaorbit.exactnum import FactorizationTable
from zetaorbit.rep import GroupWord, WNotEnabledError


def _max_workers(cap: int) -> int:
    env = os.environ.get("ZETA_ORBIT_THREADS")
    if env is not None:
        try:
            cap = min(cap, max(1, int(env)))
        except ValueError:
            raise SystemExit(f"ZETA_ORBIT_THREADS must be an integer, got {env!r}")
    return max(1, cap)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json_text(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# matrix construction by name
# ---------------------------------------------------------------------------

def _build_matrix(name: str, size: int) -> WindowedMatrix:
    if name == "D":
        return cfmat.divisor_matrix(size)
    if name == "Dinv":
        return cfmat.divisor_matrix_inverse(size)
    if name == "J":
        return cfmat.dyadic_jordan_matrix(size)
    if name == "Jinf":
        return cfmat.jordan_block_matrix(size)
    if name == "X":
        return cfmat.parity_sign_matrix(size)
    if name == "Z":
        return cfmat.divisor_transition_matrix(size)
    if name == "Zinv":
        return cfmat.divisor_transition_inverse(size)
    if name == "P":
        return cfmat.toeplitz_transition_matrix(size)
    if name == "Q":
        return cfmat.toeplitz_transition_inverse(size)
    if name == "A":
        return cfmat.toeplitz_intertwiner_matrix(size)
    if name == "B":
        return cfmat.growth_counterexample_pair(size)[0]
    if name == "Bprime":
        return cfmat.growth_counterexample_pair(size)[1]
    if name == "rhoS":
        return rep.divisor_rep_letter("S", size)
    if name == "rhoW":
        return rep.divisor_rep_letter("W", size, gl=True)
    raise SystemExit(f"unknown matrix name {name!r}")


MATRIX_NAMES = ("D", "Dinv", "J", "Jinf", "X", "Z", "Zinv",
                "P", "Q", "A", "B", "Bprime", "rhoS", "rhoW")


def _matrix_csv(m: WindowedMatrix) -> str:
    lines = ["i,j,value"]
    lines.extend(f"{i},{j},{format_exact(v)}" for i, j, v in m.entries())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# verification suite registry
# ---------------------------------------------------------------------------

# name -> (runner taking the --size override, default size note)
def _run_suite(name: str, size: int | None, samples: int | None,
               tolerance: float, seed: int) -> dict:
    if name == "jordan":
        return cfmat.verify_jordan_suite(size or 512)
    if name == "transition":
        return cfmat.verify_transition_suite(size or 256)
    if name == "representation":
        return rep.verify_representation_suite(size or 4096)
    if name == "gl":
        return rep.verify_gl_suite(size or 32)
    if name == "phi":
        return orbit.verify_phi_suite(size or 4096)
    if name == "cubic":
        return orbit.verify_cubic_suite(size or 10000)
    if name == "combinatorics":
        return exactnum.verify_combinatorics_suite(max_m=size or 10000)
    if name == "genfunc":
        return orbit.verify_genfunc_suite(order=size or 256)
    if name == "functional":
        return orbit.verify_functional_suite(samples or size or 100, tolerance, seed)
    if name == "counterexample":
        return cfmat.verify_counterexample_suite(size or 256)
    raise SystemExit(f"unknown suite {name!r}")


SUITE_NAMES = ("jordan", "transition", "representation", "gl", "phi",
               "cubic", "combinatorics", "genfunc", "functional",
               "counterexample")

# reduced sizes for the quick export bundle
_QUICK_SIZES = {
    "jordan": 128,
    "transition": 64,
    "representation": 512,
    "gl": 16,
    "phi": 512,
    "cubic": 2000,
    "combinatorics": 2000,
    "genfunc": 64,
    "functional": 25,
    "counterexample": 128,
}


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_alpha(args) -> int:
    table = FactorizationTable(args.max_m, args.max_k)
    if args.format == "csv":
        header = "m," + ",".join(f"k={k}" for k in range(1, args.max_k + 1))
        lines = [header]
        for m in range(1, args.max_m + 1):
            row = ",".join(str(table.count(k, m)) for k in range(1, args.max_k + 1))
            lines.append(f"{m},{row}")
        _emit("\n".join(lines) + "\n", args.output)
    else:
        payload = {
            "max_m": args.max_m,
            "max_k": args.max_k,
            "values": [
                [str(table.count(k, m)) for k in range(1, args.max_k + 1)]
                for m in range(1, args.max_m + 1)
            ],
        }
        _emit(_json_text(payload), args.output)
    return 0


def _cmd_matrix(args) -> int:
    m = _build_matrix(args.name, args.size)
    text = m.to_json() + "\n" if args.format == "json" else _matrix_csv(m)
    _emit(text, args.output)
    return 0


def _cmd_verify(args) -> int:
    report = _run_suite(args.suite, args.size, args.samples, args.tolerance, args.seed)
    _emit(_json_text(report), args.output)
    return 0 if report["pass"] else 1


def _cmd_phi(args) -> int:
    if args.oracle == "all":
        workers = _max_workers(3)
        names = ("rhos", "matrix", "cubic")
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = {
                name: pool.submit(orbit.PHI_ORACLES[name], args.terms)
                for name in names
            }
            series = {name: futures[name].result() for name in names}
        agree = series["rhos"] == series["matrix"] == series["cubic"]
        if args.format == "csv":
            lines = ["n,rhos,matrix,cubic,agree"]
            for n in range(1, args.terms + 1):
                vals = ",".join(str(series[name][n]) for name in names)
                row_ok = series["rhos"][n] == series["matrix"][n] == series["cubic"][n]
                lines.append(f"{n},{vals},{str(row_ok).lower()}")
            _emit("\n".join(lines) + "\n", args.output)
        else:
            payload = {
                "terms": args.terms,
                "oracles": {
                    name: [str(series[name][n]) for n in range(1, args.terms + 1)]
                    for name in names
                },
                "agree": agree,
            }
            _emit(_json_text(payload), args.output)
        return 0 if agree else 1
    phi = orbit.PHI_ORACLES[args.oracle](args.terms)
    _emit(phi.to_csv() if args.format == "csv" else phi.to_json() + "\n", args.output)
    return 0


def _parse_word(text: str) -> GroupWord:
    try:
        return GroupWord.parse(text)
    except ValueError as err:
        raise SystemExit(f"bad word: {err}")


def _cmd_orbit(args) -> int:
    word = _parse_word(args.word)
    series = orbit.orbit_series(word, args.terms, gl=args.gl)
    if args.format == "csv":
        _emit(series.to_csv(), args.output)
    else:
        payload = {
            "word": " ".join(word.letters),
            "terms": args.terms,
            "coefficients": [format_exact(series[n]) for n in range(1, args.terms + 1)],
        }
        _emit(_json_text(payload), args.output)
    return 0


def _cmd_eval(args) -> int:
    word = _parse_word(args.word)
    try:
        point = complex(args.point)
    except ValueError:
        raise SystemExit(f"bad complex point {args.point!r}")
    series = orbit.orbit_series(word, args.terms, gl=args.gl)
    value = series.evaluate(point)
    payload = {
        "word": " ".join(word.letters),
        "terms": args.terms,
        "point": repr(point),
        "value": {"re": repr(value.real), "im": repr(value.imag)},
    }
    _emit(_json_text(payload), args.output)
    return 0


def _cmd_export(args) -> int:
    reports = []
    for name in SUITE_NAMES:
        size = None if args.full else _QUICK_SIZES[name]
        if name == "functional":
            reports.append(_run_suite(name, None, size, 1e-9, 20260815))
        else:
            reports.append(_run_suite(name, size, None, 1e-9, 20260815))
    bundle = {
        "package": "zetaorbit",
        "scale": "full" if args.full else "quick",
        "suites": reports,
        "pass": all(r["pass"] for r in reports),
    }
    _emit(_json_text(bundle), args.output)
    return 0 if bundle["pass"] else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetaorbit",
        description="Exact arithmetic for the SL(2,Z) action on Dirichlet series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alpha", help="table of ordered factorization counts")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_alpha)

    p = sub.add_parser("matrix", help="emit a named matrix window")
    p.add_argument("--name", choices=MATRIX_NAMES, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITE_NAMES, required=True)
    p.add_argument("--size", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--seed", type=int, default=20260815)
    p.add_argument("--output")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("phi", help="coefficients of the orbit series phi")
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--oracle", choices=("rhos", "matrix", "cubic", "all"), default="all")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("orbit", help="coefficients of 1 acted on by a word")
    p.add_argument("--word", required=True)
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--gl", action="store_true", help="allow the reflection W")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("eval", help="numerically evaluate an orbit series")
    p.add_argument("--word", required=True)
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--point", required=True, help="complex point, e.g. 2+1j")
    p.add_argument("--gl", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("export", help="write a verification bundle")
    p.add_argument("--output", required=True)
    p.add_argument("--full", action="store_true",
                   help="acceptance-scale sizes instead of quick defaults")
    p.set_defaults(func=_cmd_export)

    return parser


def _validate(args) -> None:
    for attr in ("size", "terms", "max_m", "max_k"):
        value = getattr(args, attr, None)
        if value is not None and value < 1:
            raise SystemExit(f"--{attr.replace('_', '-')} must be >= 1")
    samples = getattr(args, "samples", None)
    if samples is not None and samples < 1:
        raise SystemExit("--samples must be >= 1")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(args)
        return args.func(args)
    except SystemExit as err:
        if isinstance(err.code, str):
            print(err.code, file=sys.stderr)
            return 2
        return err.code if err.code is not None else 2
    except WNotEnabledError as err:
        print(f"usage error: {err} (pass --gl)", file=sys.stderr)
        return 2
    except InsufficientWindowError as err:
        hint = {
            "error": "insufficient window",
            "message": str(err),
            "needed_rows": err.needed_rows,
            "needed_cols": err.needed_cols,
        }
        print(json.dumps(hint, sort_keys=True), file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
