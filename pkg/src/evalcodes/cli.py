"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 verification mismatch,
3 budget exceeded under --strict.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .gf import FieldError, field_for_q
from .groebner import quotient_degree, standard_monomials
from .mpoly import default_names, format_polynomial, monomial_order, parse_polynomials
from .variety import (
    EmptyVarietyError,
    affine_space,
    affine_variety_points,
    projective_variety_points,
    read_point_file,
    torus,
    vanishing_ideal,
    variety_ideal_nullstellensatz,
)
from .codes import evaluation_code, projective_rm_code, rm_code, squarefree_code, toric_hypersimplex_code
from .weights import (
    BudgetError,
    DEFAULT_BUDGET,
    footprint_bound,
    gaussian_binomial,
    ghw,
    ghw_bruteforce,
    rm_footprint,
    squarefree_dimension,
    squarefree_footprint,
    squarefree_min_distance,
    squarefree_second_weight,
    toric_dimension,
    toric_min_distance,
)
from .repro import FIXTURES, run_fixture


class UsageError(ValueError):
    pass


def _add_input_options(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--points", metavar="FILE", help="point set file")
    src.add_argument("--torus", metavar="Q,S", help="torus (F_q^*)^s")
    src.add_argument("--affine", metavar="Q,S", help="affine space F_q^s")
    space = p.add_mutually_exclusive_group(required=True)
    space.add_argument("--basis", metavar="POLYS",
                       help="semicolon-separated polynomial basis")
    space.add_argument("--degree", type=int, metavar="D",
                       help="all polynomials of total degree at most D "
                            "(exactly D on a projective point set)")
    p.add_argument("--order", default="grevlex", choices=("grevlex", "grlex", "lex"))
    p.add_argument("--vars", default=None,
                   help="comma-separated variable names (default t1..ts)")


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--threads", type=int, default=None,
                   help="cap on worker threads (mirrors EVALCODE_THREADS; the "
                        "current implementation runs on a single worker)")


def _thread_cap(args) -> int:
    cap = args.threads
    if cap is None:
        cap = int(os.environ.get("EVALCODE_THREADS", "1"))
    if cap < 1:
        raise UsageError("thread cap must be positive")
    return cap


def _parse_qs(text):
    try:
        q, s = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected Q,S integers, got {text!r}") from None
    return q, s


def _build_code(args):
    order = monomial_order(args.order)
    if args.points:
        X = read_point_file(args.points)
    elif args.torus:
        q, s = _parse_qs(args.torus)
        X = torus(q, s)
    else:
        q, s = _parse_qs(args.affine)
        X = affine_space(q, s)
    names = tuple(args.vars.split(",")) if args.vars else default_names(X.s)
    if len(names) != X.s:
        raise UsageError(f"{len(names)} variable names for {X.s} coordinates")
    if args.basis is not None:
        basis = parse_polynomials(args.basis, X.field, names)
        if not basis:
            raise UsageError("empty basis")
        return evaluation_code(X, basis, order)
    if args.degree is None or args.degree < 0:
        raise UsageError("--degree must be nonnegative")
    if X.projective:
        return projective_rm_code(X, args.degree, order)
    return rm_code(X, args.degree, order)


def cmd_params(args) -> int:
    code = _build_code(args)
    if args.json:
        print(code.metadata_json())
    else:
        print(f"length m    : {code.m}")
        print(f"dimension k : {code.k}")
        print(f"field       : F_{code.field.q}")
        print(f"order       : {code.order.kind}")
        print("standardized basis:")
        for g in code.std_basis:
            print(f"  {format_polynomial(g, code.order)}")
    if args.matrix_tsv:
        with open(args.matrix_tsv, "w", encoding="utf-8") as fh:
            fh.write(code.matrix_tsv())
    return 0


def cmd_ghw(args) -> int:
    code = _build_code(args)
    r = args.r
    if not 1 <= r <= code.k:
        raise UsageError(f"need 1 <= r <= k = {code.k}")
    budget = args.budget
    out = {}
    exceeded = False
    if args.method in ("degree", "both"):
        report = ghw(code, r, budget)
        try:
            report.fp = footprint_bound(code, r, budget)
        except BudgetError:
            pass
        out["degree"] = report.to_dict()
        exceeded = exceeded or report.status != "exact"
    if args.method in ("matrix", "both"):
        try:
            out["matrix"] = {"r": r, "value": ghw_bruteforce(code, r, budget),
                             "status": "exact"}
        except BudgetError as exc:
            out["matrix"] = {"r": r, "value": None, "status": "budget_exceeded",
                             "detail": str(exc)}
            exceeded = True
    if args.json:
        print(json.dumps(out["degree"] if args.method == "degree" else out, indent=2))
    else:
        for method, rep in out.items():
            extra = f" (fp >= {rep['fp']})" if rep.get("fp") is not None else ""
            print(f"delta_{r} [{method}] = {rep['value']}  status={rep['status']}{extra}")
    if args.method == "both":
        dv, mv = out["degree"]["value"], out["matrix"]["value"]
        if mv is not None and dv != mv:
            print(f"MISMATCH: degree method {dv} != matrix oracle {mv}", file=sys.stderr)
            return 2
    if exceeded and args.strict:
        return 3
    return 0


def cmd_footprint(args) -> int:
    code = _build_code(args)
    r = args.r
    value = footprint_bound(code, r)
    if args.json:
        print(json.dumps({"r": r, "fp": value}))
    else:
        print(f"fp_{r} = {value}")
    return 0


def _formula_report(args, kind) -> int:
    q, s, d, r = args.q, args.s, args.d, args.r
    if kind == "toric":
        dim = toric_dimension(q, s, d)
        rows = {"m": (q - 1) ** s, "k": dim, "delta_1": toric_min_distance(q, s, d)}
        if r is not None and r != 1:
            raise UsageError("only r = 1 has a closed form for hypersimplex codes")
        make = lambda: toric_hypersimplex_code(q, s, d)
        targets = [("delta_1", 1)]
    else:
        dim = squarefree_dimension(q, s, d)
        rows = {"m": (q - 1) ** s, "k": dim, "delta_1": squarefree_min_distance(q, s, d)}
        if dim >= 2:
            rows["delta_2"] = squarefree_second_weight(q, s, d)
        if r is not None:
            if r not in (1, 2) or (r == 2 and dim < 2):
                raise UsageError("closed forms cover r = 1 and, when k >= 2, r = 2")
        make = lambda: squarefree_code(q, s, d)
        targets = [("delta_1", 1)] + ([("delta_2", 2)] if "delta_2" in rows else [])
        rows["fp"] = None
        if r is not None:
            rows["fp"] = squarefree_footprint(q, s, d, r)
    mismatches = []
    if args.verify:
        code = make()
        for name, rr in targets:
            if r is not None and rr != r:
                continue
            try:
                brute = ghw_bruteforce(code, rr, args.budget)
            except BudgetError:
                rows[f"{name}_verified"] = "skipped (budget)"
                continue
            rows[f"{name}_verified"] = brute
            if brute != rows[name]:
                mismatches.append((name, rows[name], brute))
    if args.json:
        print(json.dumps({"q": q, "s": s, "d": d, **rows}, indent=2))
    else:
        for key, val in rows.items():
            if val is not None:
                print(f"{key:18s}: {val}")
    if mismatches:
        for name, want, got in mismatches:
            print(f"MISMATCH: {name} formula {want} != brute force {got}", file=sys.stderr)
        return 2
    return 0


def cmd_toric(args) -> int:
    return _formula_report(args, "toric")


def cmd_squarefree(args) -> int:
    return _formula_report(args, "squarefree")


def cmd_points(args) -> int:
    field = field_for_q(args.q)
    s = args.s
    names = tuple(args.vars.split(",")) if args.vars else default_names(s)
    if len(names) != s:
        raise UsageError(f"{len(names)} variable names for s = {s}")
    system = parse_polynomials(args.system, field, names)
    if not system:
        raise UsageError("empty polynomial system")
    try:
        if args.projective:
            X = projective_variety_points(system, field, s)
        else:
            X = affine_variety_points(system, field, s)
    except EmptyVarietyError:
        X = None
    count = len(X) if X is not None else 0
    out = {"q": args.q, "s": s, "count": count}
    if args.list and X is not None:
        out["points"] = [[field.format_element(c) for c in pt] for pt in X]
    if args.ideal:
        gb = variety_ideal_nullstellensatz(system, field, s,
                                           monomial_order(args.order))
        out["groebner_basis"] = [format_polynomial(g, gb.order) for g in gb.generators]
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        print(f"zeros over F_{args.q}: {count}")
        for key in ("points", "groebner_basis"):
            if key in out:
                print(f"{key}:")
                for row in out[key]:
                    print("  " + (",".join(row) if isinstance(row, list) else row))
    return 0


def cmd_repro(args) -> int:
    ids = list(FIXTURES) if args.all else [args.example]
    if not ids or ids == [None]:
        raise UsageError("give --example ID or --all")
    failed = 0
    for fid in ids:
        try:
            rows = run_fixture(fid)
        except KeyError as exc:
            raise UsageError(str(exc)) from None
        ok = all(passed for *_, passed in rows)
        failed += 0 if ok else 1
        print(f"[{'PASS' if ok else 'FAIL'}] {fid}")
        for name, expected, actual, passed in rows:
            if not passed or args.verbose:
                mark = "ok" if passed else "MISMATCH"
                print(f"    {name}: expected {expected!r}, got {actual!r}  [{mark}]")
    print(f"{len(ids) - failed}/{len(ids)} fixtures passed")
    return 0 if failed == 0 else 2


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="evalcodes",
        description="Evaluation codes over finite fields: parameters, "
                    "generalized Hamming weights, footprint bounds.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="code length, dimension and standardized basis")
    _add_input_options(p)
    _add_common(p)
    p.add_argument("--matrix-tsv", metavar="FILE", help="write the generator matrix as TSV")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("ghw", help="generalized Hamming weight")
    _add_input_options(p)
    _add_common(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--method", default="degree", choices=("degree", "matrix", "both"))
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--strict", action="store_true",
                   help="exit 3 when the budget was exceeded")
    p.set_defaults(func=cmd_ghw)

    p = sub.add_parser("footprint", help="footprint lower bound")
    _add_input_options(p)
    _add_common(p)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_footprint)

    for name, fn in (("toric", cmd_toric), ("squarefree", cmd_squarefree)):
        p = sub.add_parser(name, help=f"closed formulas for {name} codes on the torus")
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--s", type=int, required=True)
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--r", type=int, default=None)
        p.add_argument("--verify", action="store_true",
                       help="brute-force the formula values and compare")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        _add_common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("points", help="zeros of a polynomial system")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--system", required=True, help="semicolon-separated polynomials")
    p.add_argument("--projective", action="store_true")
    p.add_argument("--ideal", action="store_true", help="also print the Groebner basis")
    p.add_argument("--list", action="store_true", help="also print the points")
    p.add_argument("--order", default="grevlex", choices=("grevlex", "grlex", "lex"))
    p.add_argument("--vars", default=None)
    _add_common(p)
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("repro", help="re-run the published worked examples")
    p.add_argument("--example", default=None, choices=sorted(FIXTURES), metavar="ID")
    p.add_argument("--all", action="store_true")
    p.add_argument("--verbose", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_repro)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; the contract reserves 2 for
        # verification mismatches, so remap
        return 1 if exc.code else 0
    try:
        if hasattr(args, "threads"):
            _thread_cap(args)
        return args.func(args)
    except (UsageError, FieldError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
