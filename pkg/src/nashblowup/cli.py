"""Command-line front-end.

Every pipeline is exposed as a subcommand with deterministic text or
structured (JSON) output, so invocations can be recorded as regression
golden files.  Exit codes: 0 ok, 2 input error, 3 precondition violation,
4 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import hilbert as hilbert_mod
from . import hjac, limits
from .groebner import BudgetExceededError, Ideal, buchberger
from .parser import ParseError, format_polynomial, parse_polynomial
from .polynomial import Polynomial, grevlex, grlex, lex

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4


class InputError(Exception):
    pass


class PreconditionError(Exception):
    pass


def _parse_vars(text: str) -> tuple[str, ...]:
    names = tuple(v.strip() for v in text.split(","))
    if not names or any(not v for v in names):
        raise InputError(f"malformed variable list: {text!r}")
    if len(set(names)) != len(names):
        raise InputError(f"duplicate variable in: {text!r}")
    return names


def _parse_point(text: str, s: int) -> tuple[Fraction, ...]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != s:
        raise InputError(f"point has {len(parts)} coordinates, expected {s}")
    coords = []
    for p in parts:
        if "." in p:
            raise InputError(f"decimal input rejected, use exact rationals: {p!r}")
        try:
            coords.append(Fraction(p))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational {p!r}: {exc}") from None
    return tuple(coords)


def _parse_poly(text: str, names: tuple[str, ...]) -> Polynomial:
    try:
        return parse_polynomial(text, names)
    except ParseError as exc:
        raise InputError(str(exc)) from None


def _order_from_name(name: str):
    try:
        return {"lex": lex, "grlex": grlex, "grevlex": grevlex}[name]()
    except KeyError:
        raise InputError(f"unknown order {name!r}") from None


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "structured":
        payload = {"schema": SCHEMA_VERSION, "command": args.command, **payload}
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _label(alpha) -> str:
    return "(" + ",".join(str(a) for a in alpha) + ")"


def cmd_jac(args) -> int:
    names = _parse_vars(args.vars)
    F = _parse_poly(args.poly, names)
    jac = hjac.build(F, args.n)
    rows = [[format_polynomial(e) for e in row] for row in jac.entries]
    lines = [f"Jac_{args.n}: {jac.num_rows} x {jac.num_cols}",
             "columns: " + " ".join(_label(a) for a in jac.col_labels)]
    for beta, row in zip(jac.row_labels, rows):
        lines.append(_label(beta) + " | " + "  ".join(row))
    _emit(args, {"n": args.n,
                 "row_labels": [list(b) for b in jac.row_labels],
                 "col_labels": [list(a) for a in jac.col_labels],
                 "rows": rows}, lines)
    return EXIT_OK


def cmd_singular(args) -> int:
    names = _parse_vars(args.vars)
    F = _parse_poly(args.poly, names)
    point = _parse_point(args.point, len(names))
    try:
        rank = hjac.rank_at(F, args.n, point)
    except hjac.PointNotOnHypersurfaceError as exc:
        raise PreconditionError(str(exc)) from None
    M, _ = hjac.shape(len(names), args.n)
    verdict = "singular" if rank < M else "non-singular"
    _emit(args, {"rank": rank, "full_rank": M, "verdict": verdict},
          [f"rank {rank} of {M}: {verdict}"])
    return EXIT_OK


def cmd_tangent(args) -> int:
    names = _parse_vars(args.vars)
    F = _parse_poly(args.poly, names)
    point = _parse_point(args.point, len(names))
    try:
        basis = hjac.tangent_space(F, args.n, point)
    except hjac.PointNotOnHypersurfaceError as exc:
        raise PreconditionError(str(exc)) from None
    except hjac.SingularPointError as exc:
        raise PreconditionError(str(exc)) from None
    lines = [f"dim T^{args.n} = {len(basis)}"]
    lines += ["(" + ", ".join(str(c) for c in v) + ")" for v in basis]
    _emit(args, {"dim": len(basis),
                 "basis": [[str(c) for c in v] for v in basis]}, lines)
    return EXIT_OK


def cmd_minors(args) -> int:
    names = _parse_vars(args.vars)
    F = _parse_poly(args.poly, names)
    table = hjac.maximal_minors(F, args.n)
    lines = [f"{len(table)} minors"]
    payload = []
    for k, (J, d) in enumerate(table, start=1):
        cols = tuple(j + 1 for j in J)
        text = format_polynomial(d)
        lines.append(f"u_{k} {_label(cols)} = {text}")
        payload.append({"index": k, "columns": list(cols), "minor": text})
    _emit(args, {"count": len(table), "minors": payload}, lines)
    return EXIT_OK


def cmd_nashideal(args) -> int:
    names = _parse_vars(args.vars)
    F = _parse_poly(args.poly, names)
    table = hjac.maximal_minors(F, args.n)
    ideal = hjac.nash_ideal(F, args.n)
    gens = [format_polynomial(g) for g in ideal.generators]
    lines = [f"{len(table)} minors"]
    for k, (J, d) in enumerate(table, start=1):
        cols = tuple(j + 1 for j in J)
        lines.append(f"u_{k} {_label(cols)} = {format_polynomial(d)}")
    lines.append(f"nash ideal modulo <F>: {len(gens)} generators")
    lines += ["  " + g for g in gens]
    _emit(args, {"minor_count": len(table), "generators": gens}, lines)
    return EXIT_OK


def cmd_limits(args) -> int:
    names = _parse_vars(args.vars)
    F = _parse_poly(args.poly, names)
    center = _parse_point(args.point, len(names))
    try:
        result = limits.limit_ideal(
            F, args.n, center, style=args.order,
            max_pairs=args.max_pairs, max_reductions=args.max_reductions)
    except hjac.SingularPointError as exc:
        raise PreconditionError(str(exc)) from None
    except BudgetExceededError as exc:
        # still emit the minor table computed before the engine gave up
        table = hjac.maximal_minors(
            limits.translate_to_origin(F, center), args.n)
        lines = [f"lambda size {len(table)}"]
        for k, (J, d) in enumerate(table, start=1):
            cols = tuple(j + 1 for j in J)
            lines.append(f"u_{k} {_label(cols)} = {format_polynomial(d)}")
        lines.append(f"resource budget exceeded: {exc}")
        _emit(args, {"status": "resource-budget-exceeded",
                     "lambda_size": len(table),
                     "minors": [{"index": k + 1,
                                 "columns": [j + 1 for j in J],
                                 "minor": format_polynomial(d)}
                                for k, (J, d) in enumerate(table)],
                     "error": str(exc)}, lines)
        return EXIT_BUDGET
    except ValueError as exc:
        # the center is off the hypersurface
        raise PreconditionError(str(exc)) from None
    oracle = limits.containment_oracle(result)
    gens = [format_polynomial(g) for g in result.generators]
    lines = [f"lambda size {result.lambda_size}"]
    for k, (J, d) in enumerate(result.minors, start=1):
        cols = tuple(j + 1 for j in J)
        lines.append(f"u_{k} {_label(cols)} = {format_polynomial(d)}")
    lines.append(f"limit ideal ({args.order} order): {len(gens)} generators")
    lines += ["  " + g for g in gens]
    lines.append(f"containment oracle: {'pass' if oracle else 'FAIL'}")
    if result.planes is None:
        lines.append("planes: not reported (generators outside supported patterns)")
    else:
        lines.append(f"planes: {len(result.planes)}")
        for plane in result.planes:
            for v in plane:
                lines.append("  (" + ", ".join(str(c) for c in v) + ")")
    _emit(args, {"status": "ok",
                 "lambda_size": result.lambda_size,
                 "minors": [{"index": k + 1,
                             "columns": [j + 1 for j in J],
                             "minor": format_polynomial(d)}
                            for k, (J, d) in enumerate(result.minors)],
                 "generators": gens,
                 "oracle": oracle,
                 "order": args.order,
                 "planes": None if result.planes is None else
                 [[[str(c) for c in v] for v in plane]
                  for plane in result.planes]}, lines)
    return EXIT_OK


def cmd_hilbert(args) -> int:
    if (args.monomials is None) == (args.poly is None):
        raise InputError("give exactly one of --monomials or --poly")
    if args.monomials is not None:
        if args.vars is not None:
            names = _parse_vars(args.vars)
        else:
            seen: list[str] = []
            for chunk in args.monomials.split(","):
                for tok in chunk.replace("^", " ").replace("*", " ").split():
                    if tok.isidentifier() and tok not in seen:
                        seen.append(tok)
            names = tuple(sorted(seen))
            if not names:
                raise InputError("cannot infer variables from --monomials")
        exps = []
        for chunk in args.monomials.split(","):
            p = _parse_poly(chunk.strip(), names)
            if len(p.terms) != 1 or next(iter(p.terms.values())) != 1:
                raise InputError(f"not a monomial: {chunk.strip()!r}")
            exps.append(next(iter(p.terms)))
        value = hilbert_mod.graded_dim(
            hilbert_mod.MonomialIdeal(len(names), exps), args.n)
    else:
        names = _parse_vars(args.vars) if args.vars else None
        if names is None:
            raise InputError("--poly needs --vars")
        F = _parse_poly(args.poly, names)
        try:
            value = hilbert_mod.local_hilbert(F, args.n)
        except ValueError as exc:
            raise PreconditionError(str(exc)) from None
    _emit(args, {"n": args.n, "dim": value}, [str(value)])
    return EXIT_OK


def cmd_gb(args) -> int:
    names = _parse_vars(args.vars)
    try:
        with open(args.file) as fh:
            lines_in = [ln.strip() for ln in fh if ln.strip()]
    except OSError as exc:
        raise InputError(str(exc)) from None
    if not lines_in:
        raise InputError(f"no generators in {args.file}")
    gens = [_parse_poly(ln, names) for ln in lines_in]
    order = _order_from_name(args.order)
    basis = buchberger(gens, order, max_pairs=args.max_pairs,
                       max_reductions=args.max_reductions)
    out = [format_polynomial(g) for g in basis]
    _emit(args, {"order": args.order, "basis": out},
          [f"reduced basis ({args.order}): {len(out)} elements"] +
          ["  " + g for g in out])
    return EXIT_OK


def _add_common(p, point=False, order=None):
    p.add_argument("--poly", "-f", required=True, help="polynomial in the input grammar")
    p.add_argument("--vars", required=True, help="comma-separated variable names")
    p.add_argument("-n", type=int, required=True, help="order of the Jacobian matrix")
    if point:
        p.add_argument("--point", required=True, help="comma-separated exact rationals")
    if order:
        p.add_argument("--order", choices=order, default=order[0])
    p.add_argument("--format", choices=("text", "structured"), default="text")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="nashblowup",
        description="Higher-order Jacobian matrices of hypersurfaces: "
                    "singularity tests, tangent spaces, Nash-blowup ideals, "
                    "and limits of higher tangent spaces.")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jac", help="print the order-n Jacobian matrix")
    _add_common(p)
    p.set_defaults(func=cmd_jac)

    p = sub.add_parser("singular", help="rank test at a point")
    _add_common(p, point=True)
    p.set_defaults(func=cmd_singular)

    p = sub.add_parser("tangent", help="higher tangent space at a non-singular point")
    _add_common(p, point=True)
    p.set_defaults(func=cmd_tangent)

    p = sub.add_parser("minors", help="all maximal minors of the matrix")
    _add_common(p)
    p.set_defaults(func=cmd_minors)

    p = sub.add_parser("nashideal", help="minors reduced modulo <F>")
    _add_common(p)
    p.set_defaults(func=cmd_nashideal)

    p = sub.add_parser("limits", help="limit ideal of higher tangent spaces at a singular center")
    _add_common(p, point=True, order=("block", "lex"))
    p.add_argument("--max-pairs", type=int, default=None)
    p.add_argument("--max-reductions", type=int, default=None)
    p.set_defaults(func=cmd_limits)

    p = sub.add_parser("hilbert", help="standard-monomial counts")
    p.add_argument("--monomials", help="comma-separated monomial generators")
    p.add_argument("--poly", help="hypersurface polynomial (local count at the origin)")
    p.add_argument("--vars", help="comma-separated variable names")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("gb", help="reduced Groebner basis of an ideal file")
    p.add_argument("file", help="one generator per line in the input grammar")
    p.add_argument("--vars", required=True)
    p.add_argument("--order", choices=("grevlex", "grlex", "lex"), default="grevlex")
    p.add_argument("--max-pairs", type=int, default=None)
    p.add_argument("--max-reductions", type=int, default=None)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_gb)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except PreconditionError as exc:
        print(f"precondition violation: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BudgetExceededError as exc:
        print(f"resource budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
