"""Command-line front end.

Subcommands: count (FPTAS), exact (rational oracle), check (instance and
structure validation), gen (seeded random instance), verify-bound
(gradient-norm maximization and certification).  Exit status: 0 success,
1 invalid input or flags, 2 structural-assumption failure, 3 bound
certification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import mpmath

from . import bound as bound_mod
from .counter import count_matchings
from .decay import LAMBDA_CERTIFIED_MAX
from .errors import ParseError, StructureError
from .exact import exact_zm
from .hypergraph import gen_random_33, parse, serialize, validate_33
from .intersection import build_line_graph, check_structure

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_STRUCTURE = 2
EXIT_BOUND = 3


def sig15(x) -> str:
    """15 significant digits, trailing zeros kept, '.' separator."""
    return mpmath.nstr(mpmath.mpf(x) if not isinstance(x, mpmath.mpf) else x,
                       15, strip_zeros=False)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _parse_lambda(text: str) -> Fraction:
    try:
        lam = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad activity {text!r}: {exc}") from None
    if lam <= 0:
        raise argparse.ArgumentTypeError("activity must be positive")
    return lam


def _emit(args, record: dict, plain_lines: list[str]) -> None:
    if args.format == "json-lines":
        print(json.dumps(record))
    else:
        for line in plain_lines:
            print(line)


def _cmd_count(args) -> int:
    h = parse(_read_input(args.file))
    result = count_matchings(h, args.epsilon, lam=args.lam, t=args.t)
    if args.lam > LAMBDA_CERTIFIED_MAX:
        print(
            f"warning: lambda {args.lam} exceeds the proven decay interval "
            f"(0, {LAMBDA_CERTIFIED_MAX}]; value computed but not certified",
            file=sys.stderr,
        )
    if args.t is not None and args.t < min(result.required_t, 2 * result.n_vertices + 2):
        print(
            f"warning: t={args.t} is below the required depth "
            f"{result.required_t}; value not certified",
            file=sys.stderr,
        )
    value = sig15(result.value)
    record = {
        "command": "count",
        "value": value,
        "epsilon": result.epsilon,
        "lambda": str(result.lam),
        "t_used": result.t_used,
        "required_t": result.required_t,
        "certified": result.certified,
        "components": result.n_components,
    }
    _emit(args, record, [
        value,
        f"epsilon {result.epsilon}",
        f"lambda {result.lam}",
        f"t_used {result.t_used}",
        f"required_t {result.required_t}",
        f"certified {'true' if result.certified else 'false'}",
        f"components {result.n_components}",
    ])
    return EXIT_OK


def _cmd_exact(args) -> int:
    h = parse(_read_input(args.file))
    value = exact_zm(h, args.lam)
    text = str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    record = {"command": "exact", "value": text, "lambda": str(args.lam)}
    _emit(args, record, [text])
    return EXIT_OK


def _cmd_check(args) -> int:
    h = parse(_read_input(args.file))
    report = validate_33(h)
    lines = [
        f"valid_33 {'true' if report.ok else 'false'}",
        f"max_degree {report.max_degree}",
    ]
    for v, d in report.degree_violations:
        lines.append(f"degree_violation vertex {v} degree {d}")
    for i, reason in report.edge_violations:
        lines.append(f"edge_violation index {i} {reason}")
    record = {
        "command": "check",
        "valid_33": report.ok,
        "max_degree": report.max_degree,
        "degree_violations": list(report.degree_violations),
    }
    structure_pass = False
    if report.ok:
        g = build_line_graph(h)
        s = check_structure(g)
        structure_pass = s.passes
        lines += [
            f"claw_free_4 {'true' if s.claw_free_4 else 'false'}",
            f"igraph_max_degree {s.max_degree}",
            f"neighborhood_ok {'true' if s.neighborhood_ok else 'false'}",
            f"structure_pass {'true' if s.passes else 'false'}",
        ]
        for w in s.claw_witnesses:
            lines.append(f"claw_witness {' '.join(map(str, sorted(w)))}")
        for w in s.neighborhood_witnesses:
            lines.append(f"neighborhood_witness {' '.join(map(str, sorted(w)))}")
        record.update(
            claw_free_4=s.claw_free_4,
            igraph_max_degree=s.max_degree,
            neighborhood_ok=s.neighborhood_ok,
            structure_pass=s.passes,
        )
    _emit(args, record, lines)
    return EXIT_OK if report.ok and structure_pass else EXIT_STRUCTURE


def _cmd_gen(args) -> int:
    h = gen_random_33(args.vertices, args.edges, args.seed)
    text = serialize(h)
    if args.format == "json-lines":
        print(json.dumps({"command": "gen", "n": h.n, "m": h.m, "text": text}))
    else:
        sys.stdout.write(text)
    if h.m < args.edges:
        print(f"note: reached {h.m} of {args.edges} requested edges", file=sys.stderr)
    return EXIT_OK


def _report_lines(rep: bound_mod.BoundReport) -> list[str]:
    return [
        f"lambda {rep.lam}",
        f"max {sig15(rep.max_value)}",
        f"argmax {' '.join(sig15(x) for x in rep.argmax)}",
        f"margin {sig15(rep.margin)}",
        f"threshold {rep.threshold}",
        f"certified {'true' if rep.certified else 'false'}",
        f"cert_cells {rep.cert_cells}",
    ]


def _report_record(rep: bound_mod.BoundReport) -> dict:
    return {
        "command": "verify-bound",
        "lambda": rep.lam,
        "max": rep.max_value,
        "argmax": list(rep.argmax),
        "margin": rep.margin,
        "threshold": rep.threshold,
        "certified": rep.certified,
        "cert_cells": rep.cert_cells,
        "grid_steps": rep.grid_steps,
        "restarts": rep.restarts,
    }


def _cmd_verify_bound(args) -> int:
    if args.lambda_sweep:
        reports = bound_mod.sweep_lambda(
            grid_steps=min(args.grid_steps, 5),
            restarts=min(args.restarts, 16),
            tol=args.tol,
        )
    else:
        reports = [
            bound_mod.maximize_F(
                grid_steps=args.grid_steps, restarts=args.restarts, tol=args.tol
            )
        ]
    for rep in reports:
        _emit(args, _report_record(rep), _report_lines(rep))
    if any(rep.margin <= 0 for rep in reports):
        return EXIT_BOUND
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="trimatch",
        description="Count matchings in 3-uniform hypergraphs of maximum degree 3.",
    )
    top.add_argument(
        "--format",
        choices=("plain", "json-lines"),
        default="plain",
        help="output format (default: plain)",
    )
    top.add_argument("-v", "--verbose", action="count", default=0)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="approximate the matching count")
    p.add_argument("file", metavar="FILE", help="instance path, or - for stdin")
    p.add_argument("--epsilon", type=float, required=True, help="relative error in (0,1)")
    p.add_argument("--lambda", dest="lam", type=_parse_lambda, default=Fraction(1),
                   help="activity weight (rational, default 1)")
    p.add_argument("--t", type=int, default=None, help="override truncation depth")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("exact", help="exact matching count (brute force)")
    p.add_argument("file", metavar="FILE")
    p.add_argument("--lambda", dest="lam", type=_parse_lambda, default=Fraction(1))
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("check", help="validate the instance and its intersection graph")
    p.add_argument("file", metavar="FILE")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("gen", help="generate a seeded random instance")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify-bound", help="maximize and certify the gradient-norm bound")
    p.add_argument("--grid-steps", type=int, default=6)
    p.add_argument("--restarts", type=int, default=64)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--lambda-sweep", action="store_true",
                   help="sweep activities over (0.01, 1.077] instead of lambda=1")
    p.set_defaults(func=_cmd_verify_bound)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except StructureError as exc:
        print(f"structure error: {exc}", file=sys.stderr)
        return EXIT_STRUCTURE
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
