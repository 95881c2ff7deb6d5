"""Command-line interface: discriminant-resultant series, identity
verification and independence certificates, with deterministic seeded
runs and JSON or text output.

Exit codes: 0 success, 1 verification failure, 2 usage/input error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
import time

from . import __version__
from .binforms import BinaryForm, NumericDegenerateError, dr_series
from .brackets import (bracket_eval, derive_seed, dr_bracket_sum,
                       forms_from_assignment, plucker_relation,
                       random_generic_assignment, verify_theorem1)
from .independence import run_independence_suite
from .laurent import PolygonModel, laurent_expand_bracket
from .multipoly import MultiPoly
from .rationals import format_rational

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="drbracket",
        description="Exact discriminant-resultant computations and "
                    "machine-checkable identity certificates.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0,
                       help="master seed; identical flags give identical output")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--budget", type=float, default=None,
                       help="soft time budget in seconds")
        p.add_argument("--out", default=None, help="write output to a file")

    p = sub.add_parser("dr-series", help="compute the DR series of a pair of forms")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("symbolic", "numeric"), default="symbolic")
    p.add_argument("--in", dest="infile", default=None,
                   help="JSON file with {'f_n': form, 'f_m': form}")
    p.add_argument("--forms", default=None,
                   help="the same JSON object, inline")
    common(p)

    p = sub.add_parser("verify", help="verify one of the library's identities")
    p.add_argument("target", choices=("theorem1", "vanishing", "plucker",
                                      "invariance", "laurent"))
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--mode", choices=("symbolic", "numeric"), default="numeric")
    common(p)

    p = sub.add_parser("independence", help="emit independence certificates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=10,
                   help="random points for the Jacobian check")
    common(p)
    return parser


def _load_forms(args) -> tuple:
    if args.infile and args.forms:
        raise UsageError("give either --in or --forms, not both")
    raw = None
    if args.infile:
        with open(args.infile) as fh:
            raw = fh.read()
    elif args.forms:
        raw = args.forms
    if raw is None:
        if args.mode == "numeric":
            raise UsageError("numeric mode needs --in or --forms")
        f_n = BinaryForm.generic(args.n, "a")
        if args.n == 2:
            f_m = BinaryForm.from_coeffs([MultiPoly.variable("b0")])
        else:
            f_m = BinaryForm.generic(args.n - 2, "b")
        return f_n, f_m
    try:
        data = json.loads(raw)
        f_n = BinaryForm.from_json(data["f_n"])
        f_m = BinaryForm.from_json(data["f_m"])
    except (json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
        raise UsageError(f"malformed form input: {exc}")
    if f_n.degree != args.n or f_m.degree != args.n - 2:
        raise UsageError("form degrees disagree with --n")
    return f_n, f_m


def cmd_dr_series(args) -> tuple:
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    f_n, f_m = _load_forms(args)
    try:
        series = dr_series(f_n, f_m, mode=args.mode)
    except NumericDegenerateError as exc:
        return {"error": str(exc)}, EXIT_FAILURE
    entries = []
    for r, e in enumerate(series.entries):
        if isinstance(e, MultiPoly):
            entries.append({"r": r, "value": e.to_json(), "text": str(e)})
        else:
            entries.append({"r": r, "value": format_rational(e),
                            "text": format_rational(e)})
    return {"n": args.n, "mode": args.mode, "entries": entries}, EXIT_OK


def _verify_vanishing(args) -> dict:
    """DR_{n,1} = 0: symbolically for small n, at random points otherwise."""
    n = args.n
    failures = []
    symbolic = args.mode == "symbolic" or n <= 4
    if symbolic:
        bs = dr_bracket_sum(n, 1)
        if not bs.expand_to_coordinates().is_zero:
            failures.append({"kind": "symbolic", "n": n})
    for trial in range(args.trials if not symbolic else 0):
        assignment = random_generic_assignment(n, derive_seed(args.seed, trial))
        if dr_bracket_sum(n, 1).evaluate(assignment) != 0:
            failures.append({"trial": trial})
    return {"target": "vanishing", "n": n, "mode": "symbolic" if symbolic
            else "numeric", "failures": failures}


def _verify_plucker(args) -> dict:
    from random import Random

    from .brackets import alpha
    rng = Random(derive_seed(args.seed, "plucker"))
    syms = [alpha(i) for i in range(1, 5)]
    rel = plucker_relation(*syms)
    failures = []
    for trial in range(args.trials):
        assignment = {s: (rng.randint(-50, 50), rng.randint(-50, 50))
                      for s in syms}
        from fractions import Fraction
        assignment = {s: (Fraction(u), Fraction(v))
                      for s, (u, v) in assignment.items()}
        if rel.evaluate(assignment) != 0:
            failures.append({"trial": trial})
    return {"target": "plucker", "trials": args.trials, "failures": failures}


def _verify_invariance(args) -> dict:
    from random import Random

    from .binforms import sl2_transform
    n = args.n
    rng = Random(derive_seed(args.seed, "invariance"))
    failures = []
    for trial in range(args.trials):
        assignment = random_generic_assignment(n, derive_seed(args.seed, trial))
        f_n, f_m = forms_from_assignment(assignment, n)
        base = dr_series(f_n, f_m, mode="numeric")
        b, c, d = (rng.randint(-3, 3) for _ in range(3))
        g = _unimodular(b, c, d)
        try:
            moved = dr_series(sl2_transform(f_n, g), sl2_transform(f_m, g)
                              if f_m.degree >= 1 else f_m, mode="numeric")
        except NumericDegenerateError:
            continue  # transformed a_0*a_n hit zero; skip the sample
        if moved.entries != base.entries:
            failures.append({"trial": trial, "g": list(g)})
    return {"target": "invariance", "n": n, "trials": args.trials,
            "failures": failures}


def _unimodular(b: int, c: int, d: int) -> tuple:
    """Product of three shears; determinant 1 by construction."""
    m1 = ((1, b), (0, 1))
    m2 = ((1, 0), (c, 1))
    m3 = ((1, d), (0, 1))

    def mul(p, q):
        return tuple(tuple(sum(p[i][k] * q[k][j] for k in range(2))
                           for j in range(2)) for i in range(2))
    m = mul(mul(m1, m2), m3)
    return (m[0][0], m[0][1], m[1][0], m[1][1])


def _verify_laurent(args) -> dict:
    from .brackets import all_symbols
    n = args.n
    if n < 3:
        raise UsageError("laurent verification needs --n >= 3")
    model = PolygonModel(n)
    defs = model.defining_brackets()
    inv = set(model.invertible_vars())
    failures = []
    syms = all_symbols(n)
    expansions = {(x, y): laurent_expand_bracket(model, x, y)
                  for x, y in itertools.combinations(syms, 2)}
    for (x, y), lp in expansions.items():
        for mono in lp.terms:
            for v, e in mono.exponents:
                if e < 0 and v not in inv:
                    failures.append({"kind": "denominator", "bracket":
                                     [f"{x[0]}{x[1]}", f"{y[0]}{y[1]}"],
                                     "variable": f"{v[0]}{v[1]}"})
    for trial in range(args.trials):
        assignment = random_generic_assignment(n, derive_seed(args.seed, trial))
        values = {v: bracket_eval(s, t, assignment)
                  for v, (s, t) in defs.items()}
        for (x, y), lp in expansions.items():
            if lp.evaluate(values) != bracket_eval(x, y, assignment):
                failures.append({"kind": "evaluation", "trial": trial,
                                 "bracket": [f"{x[0]}{x[1]}", f"{y[0]}{y[1]}"]})
    return {"target": "laurent", "n": n, "trials": args.trials,
            "failures": failures}


def cmd_verify(args) -> tuple:
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    if args.target == "theorem1":
        report = verify_theorem1(args.n, trials=args.trials, seed=args.seed,
                                 mode=args.mode)
        report["target"] = "theorem1"
    elif args.target == "vanishing":
        report = _verify_vanishing(args)
    elif args.target == "plucker":
        report = _verify_plucker(args)
    elif args.target == "invariance":
        report = _verify_invariance(args)
    else:
        report = _verify_laurent(args)
    code = EXIT_OK if not report["failures"] else EXIT_FAILURE
    return report, code


def cmd_independence(args) -> tuple:
    if args.n < 3:
        raise UsageError("the independence suite starts at --n 3")
    summary = run_independence_suite(args.n, seed=args.seed,
                                     jacobian_points=args.trials)
    code = EXIT_OK if summary["all_independent"] else EXIT_FAILURE
    return summary, code


def _render_text(payload: dict) -> str:
    lines = []

    def walk(obj, indent=0):
        pad = "  " * indent
        if isinstance(obj, dict):
            for k, v in obj.items():
                if isinstance(v, (dict, list)):
                    lines.append(f"{pad}{k}:")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}{k}: {v}")
        elif isinstance(obj, list):
            for v in obj:
                if isinstance(v, (dict, list)):
                    walk(v, indent)
                    lines.append("")
                else:
                    lines.append(f"{pad}- {v}")
        else:
            lines.append(f"{pad}{obj}")
    walk(payload)
    return "\n".join(line for line in lines if line is not None)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; keep its codes
        return int(exc.code or 0)
    started = time.time()
    try:
        if args.command == "dr-series":
            payload, code = cmd_dr_series(args)
        elif args.command == "verify":
            payload, code = cmd_verify(args)
        else:
            payload, code = cmd_independence(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    config = {k: v for k, v in sorted(vars(args).items()) if k != "forms"}
    payload = {"version": __version__, "config": config, **payload}
    if args.budget is not None and time.time() - started > args.budget:
        payload["budget_exceeded"] = True
    if args.format == "json":
        text = json.dumps(payload, sort_keys=True, indent=2)
    else:
        text = _render_text(payload)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
