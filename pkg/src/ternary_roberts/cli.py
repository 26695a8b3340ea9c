"""Command-line front end.

    ternary-roberts --degree 3 reconstruct --expr "a[0,0]*a[2,0]-a[1,0]^2"
    ternary-roberts --degree 3 act --word "Dh1^2 Dh3" --expr "a[0,0]"
    ternary-roberts dim --m1 2 --m2 2

Exit codes: 0 ok, 2 parse error, 3 precondition violation, 4 solver
failure, 5 internal verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, TextIO

from .action import (NotIsobaric, apply_word, order_of,
                     parse_word, weight_of)
from .parsing import ParseError, parse_polynomial
from .render import FORMATS, render_polynomial
from .reptheory import NotHighestVector, irrep_dim, lowering_span
from .ring import RingConfig, is_pure_a
from .roberts import (KINDS, PreconditionError, SolverError, VerificationError,
                      dual_conic_oracle, hessian_covariant, reconstruct,
                      verify_concomitant)

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_SOLVER, EXIT_VERIFY = 0, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(f"usage: {message}", EXIT_PARSE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ternary-roberts",
                     description="Concomitants of ternary forms from their lead coefficients.")
    parser.add_argument("--degree", type=int, help="degree n of the ternary form")
    parser.add_argument("--format", choices=FORMATS, default="text")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    act = sub.add_parser("act", help="apply a word in the sl3 generators")
    act.add_argument("--word", required=True)
    act.add_argument("--expr", required=True)
    for name in ("weight", "order", "span", "verify"):
        sub.add_parser(name).add_argument("--expr", required=True)
    dim = sub.add_parser("dim", help="dimension of the irreducible module [m1, m2]")
    dim.add_argument("--m1", type=int, required=True)
    dim.add_argument("--m2", type=int, required=True)
    rec = sub.add_parser("reconstruct", help="concomitant with the given lead coefficient")
    rec.add_argument("--expr", required=True)
    rec.add_argument("--kind", choices=KINDS, default="auto")
    sub.add_parser("hessian")
    sub.add_parser("dualconic")
    return parser


def _parse(expr: str, ring: RingConfig, a_only: bool):
    try:
        p = parse_polynomial(expr, ring)
    except ParseError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    if a_only and not is_pure_a(p):
        raise CliError("this command accepts a-variables only", EXIT_PRECONDITION)
    return p


def _dispatch(args, out: TextIO) -> None:
    fmt = args.format
    if args.command == "dim":
        if args.m1 < 0 or args.m2 < 0:
            raise CliError("m1 and m2 must be nonnegative", EXIT_PRECONDITION)
        d = irrep_dim(args.m1, args.m2)
        print(json.dumps({"dim": d}) if fmt == "json" else d, file=out)
        return
    if args.degree is None:
        raise CliError("--degree is required for this command", EXIT_PARSE)
    try:
        ring = RingConfig(args.degree)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from None

    if args.command == "act":
        try:
            word = parse_word(args.word)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_PARSE) from None
        print(render_polynomial(apply_word(word, _parse(args.expr, ring, False), ring), fmt),
              file=out)
    elif args.command in ("weight", "order"):
        p = _parse(args.expr, ring, args.command == "order")
        try:
            pair = weight_of(p, ring) if args.command == "weight" else order_of(p, ring)
        except (NotIsobaric, ValueError) as exc:
            raise CliError(str(exc), EXIT_PRECONDITION) from None
        if fmt == "json":
            print(json.dumps({args.command: list(pair)}), file=out)
        else:
            print(f"[{pair[0]}, {pair[1]}]", file=out)
    elif args.command == "span":
        p = _parse(args.expr, ring, True)
        try:
            diagram = lowering_span(p, ring)
        except NotHighestVector as exc:
            raise CliError(str(exc), EXIT_PRECONDITION) from None
        if fmt == "json":
            print(json.dumps(diagram.to_json()), file=out)
        else:
            print(f"highest weight: [{diagram.highest_weight[0]}, {diagram.highest_weight[1]}]",
                  file=out)
            print(f"dimension: {diagram.dimension}", file=out)
            for w in diagram.weights():
                for word, poly in diagram.spaces[w]:
                    print(f"({w[0]},{w[1]})  {word or '1'}:  {render_polynomial(poly, fmt)}",
                          file=out)
    elif args.command == "reconstruct":
        p = _parse(args.expr, ring, True)
        try:
            report = reconstruct(p, ring, args.kind)
        except PreconditionError as exc:
            raise CliError(str(exc), EXIT_PRECONDITION) from None
        except SolverError as exc:
            raise CliError(str(exc), EXIT_SOLVER) from None
        except VerificationError as exc:
            raise CliError(str(exc), EXIT_VERIFY) from None
        if fmt == "json":
            print(json.dumps(report.to_json()), file=out)
            return
        print(f"kind: {report.kind}", file=out)
        print(f"degree: {report.degree}", file=out)
        print(f"class: [{report.order}, {report.class_}]", file=out)
        print(f"seed: {render_polynomial(report.seed, fmt)}", file=out)
        print("verified: " + " ".join(f"{g}={'pass' if ok else 'FAIL'}"
                                      for g, ok in report.verified.items()), file=out)
        print(f"polynomial: {render_polynomial(report.polynomial, fmt)}", file=out)
    elif args.command == "verify":
        table = verify_concomitant(_parse(args.expr, ring, False), ring)
        if fmt == "json":
            print(json.dumps(table), file=out)
        else:
            for g, ok in table.items():
                print(f"{g}: {'pass' if ok else 'fail'}", file=out)
    elif args.command == "hessian":
        try:
            h = hessian_covariant(ring)
        except PreconditionError as exc:
            raise CliError(str(exc), EXIT_PRECONDITION) from None
        print(render_polynomial(h, fmt), file=out)
    elif args.command == "dualconic":
        try:
            print(render_polynomial(dual_conic_oracle(ring), fmt), file=out)
        except PreconditionError as exc:
            raise CliError(str(exc), EXIT_PRECONDITION) from None
    else:
        raise CliError("a command is required", EXIT_PARSE)


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(list(sys.argv[1:] if argv is None else argv))
        _dispatch(args, out)
    except CliError as exc:
        print(f"error: {exc}".replace("\n", " "), file=err)
        return exc.code
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
