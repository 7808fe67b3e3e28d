"""Command-line front end.

Exit codes: 0 success, 1 bad input or usage, 2 infeasible, 3 codebook
verification failed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from decimal import Decimal, localcontext
from fractions import Fraction

from .codebook import Codebook, assign_canonical, verify
from .fringe import FringeProblem, fringe_solve
from .linspace import solve_linear_space
from .model import CodingError, Infeasible, Penalty, fraction_str
from .oracle import TooLarge, brute_force_code
from .solver import CodingProblem, SolveResult, solve

EXIT_USAGE, EXIT_INFEASIBLE, EXIT_VERIFY = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def read_weights(stream) -> list[Fraction]:
    """One weight per line (integer, decimal or a/b); '#' starts a comment."""
    out = []
    for lineno, line in enumerate(stream, 1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            w = Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise CodingError(f"line {lineno}: cannot parse weight {text!r}")
        out.append(w)
    if not out:
        raise CodingError("no weights given")
    return out


def _decimal(x: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = 20
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def _load_weights(path: str | None) -> list[Fraction]:
    if path is None or path == "-":
        return read_weights(sys.stdin)
    with open(path) as fh:
        return read_weights(fh)


def _report(problem_radix: int, penalty: Penalty, res: SolveResult, extra: dict) -> dict:
    book = assign_canonical(res.lengths, problem_radix)
    out = {
        "radix": problem_radix,
        "lengths": list(res.lengths),
        "codewords": book.strings(),
        "penalty": penalty.to_json(),
        "penalty_value": fraction_str(res.penalty_value),
        "penalty_decimal": _decimal(res.penalty_value),
        "kraft": fraction_str(res.kraft),
    }
    out.update(extra)
    return out


def _emit(report: dict, fmt: str, elapsed: float | None) -> None:
    if fmt == "json":
        if elapsed is not None:
            report = dict(report, seconds=round(elapsed, 6))
        print(json.dumps(report, sort_keys=True, indent=2))
        return
    for key, value in report.items():
        if key == "codewords":
            value = " ".join(w if w else "''" for w in value)
        elif isinstance(value, list):
            value = ",".join(json.dumps(v, sort_keys=True) if isinstance(v, dict) else str(v)
                             for v in value)
        elif isinstance(value, dict) and key != "penalty":
            value = json.dumps(value, sort_keys=True)
        elif key == "penalty":
            value = " ".join(f"{k}={v}" for k, v in value.items())
        print(f"{key}: {value}")
    if elapsed is not None:
        print(f"seconds: {elapsed:.6f}")


def _penalty(args) -> Penalty:
    return Penalty.parse(args.penalty, args.precision)


def cmd_solve(args) -> int:
    weights = _load_weights(args.weights)
    penalty = _penalty(args)
    problem = CodingProblem.create(weights, args.radix, args.min_len, args.max_len, penalty)
    start = time.perf_counter()
    res = (solve_linear_space if args.space == "linear" else solve)(problem)
    elapsed = time.perf_counter() - start
    report = _report(args.radix, penalty, res, {
        "min_len": problem.l_min,
        "max_len": problem.l_max,
        "n": problem.weights.n_real,
        "dummies": problem.weights.n_dummies,
        "nodeset_weight": fraction_str(res.nodeset_weight),
    })
    _emit(report, args.format, elapsed if args.timing or args.format == "text" else None)
    return 0


def cmd_fringe(args) -> int:
    weights = _load_weights(args.weights)
    penalty = _penalty(args)
    problem = FringeProblem.create(weights, args.radix, args.max_fringe, penalty,
                                   args.extra_dummy_blocks)
    start = time.perf_counter()
    fr = fringe_solve(problem, args.space)
    elapsed = time.perf_counter() - start
    report = _report(args.radix, penalty, fr.result, {
        "max_fringe": args.max_fringe,
        "l_top": fr.l_top,
        "n": problem.weights.n_real,
        "dummies": problem.weights.n_dummies,
        "sweep": [{"l_top": e.l_top, "l_min": e.l_low,
                   "penalty_value": None if e.penalty_value is None
                   else fraction_str(e.penalty_value)} for e in fr.sweep],
    })
    _emit(report, args.format, elapsed if args.timing or args.format == "text" else None)
    return 0


def cmd_verify(args) -> int:
    try:
        if args.codebook in (None, "-"):
            data = json.load(sys.stdin)
        else:
            with open(args.codebook) as fh:
                data = json.load(fh)
        radix = int(data["radix"])
        book = Codebook.from_strings(data["codewords"], radix)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise CodingError(f"cannot read codebook: {exc}")
    violations = verify(book, data.get("min_len"), data.get("max_len"), data.get("lengths"))
    print(json.dumps({"ok": not violations, "violations": violations},
                     sort_keys=True, indent=2))
    return 0 if not violations else EXIT_VERIFY


def cmd_oracle(args) -> int:
    weights = _load_weights(args.weights)
    problem = CodingProblem.create(weights, args.radix, args.min_len, args.max_len,
                                   _penalty(args))
    best, argmins = brute_force_code(problem)
    if best is None:
        raise Infeasible("no complete code fits the bounds")
    print(json.dumps({"penalty_value": fraction_str(best),
                      "argmins": [list(v) for v in argmins]}, sort_keys=True, indent=2))
    return 0


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("weights", nargs="?", help="weights file (default: stdin)")
    p.add_argument("--radix", type=int, default=2)
    p.add_argument("--penalty", default="linear",
                   help="linear | quadratic | exp:<t> | table:v0,v1,...")
    p.add_argument("--precision", type=int, default=10**12,
                   help="denominator used to round exponential penalties")
    p.add_argument("--space", choices=("full", "linear"), default="linear")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--timing", action="store_true", help="include wall time in json")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="boundedcode",
                     description="Optimal D-ary prefix codes with bounded codeword lengths.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="optimal code with lengths in [min-len, max-len]")
    _common(p)
    p.add_argument("--min-len", type=int, default=0)
    p.add_argument("--max-len", type=int, default=None,
                   help="default ceil((n-1)/(radix-1)), which never binds")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("fringe", help="optimal code with max-min length <= max-fringe")
    _common(p)
    p.add_argument("--max-fringe", type=int, required=True)
    p.add_argument("--extra-dummy-blocks", type=int, default=0)
    p.set_defaults(func=cmd_fringe)

    p = sub.add_parser("verify", help="check a codebook JSON file")
    p.add_argument("codebook", nargs="?")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="(dev) brute-force optimum for tiny inputs")
    _common(p)
    p.add_argument("--min-len", type=int, default=0)
    p.add_argument("--max-len", type=int, default=None)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (CodingError, TooLarge, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
