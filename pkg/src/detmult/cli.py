"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 usage error, 3 internal invariant
violation or fuzz violations.  JSON keys are emitted in a fixed order and
big integers as decimal strings, so identical invocations give identical
bytes.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import __version__
from .conjecture import FuzzConfig, check_bounds, fuzz_campaign
from .degmat import DegreeMatrix, DegreeMatrixError, equidegree, from_full_matrix, from_vectors
from .multiplicity import (
    InvariantViolation,
    multiplicity,
    multiplicity_en,
    multiplicity_linkage,
    multiplicity_linkage_dual,
    multiplicity_pure,
)
from .resolution import (
    EnumerationCapExceeded,
    betti_table,
    betti_table_enumerated,
    default_enum_cap,
    k_polynomial,
)
from .shifts import max_shifts, min_shifts

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

_INT_LIST = re.compile(r"-?\d+(,-?\d+)*")


class UsageError(Exception):
    pass


def int_list(text: str) -> list[int]:
    if not _INT_LIST.fullmatch(text):
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers without spaces, got {text!r}")
    return [int(x) for x in text.split(",")]


def _read_input_file(path: str) -> DegreeMatrix:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise DegreeMatrixError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise DegreeMatrixError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise DegreeMatrixError("input JSON must be an object")
    if "u" in data:
        if set(data) != {"u"}:
            raise DegreeMatrixError('"u" cannot be combined with other keys')
        u = data["u"]
        if not isinstance(u, list) or not all(isinstance(r, list) for r in u):
            raise DegreeMatrixError('"u" must be a list of integer lists')
        return from_full_matrix(u)
    if set(data) != {"cols", "rows"}:
        raise DegreeMatrixError('input JSON needs either "u" or both "cols" and "rows"')
    for key in ("cols", "rows"):
        vals = data[key]
        if not isinstance(vals, list) or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in vals):
            raise DegreeMatrixError(f'"{key}" must be a list of integers')
    return from_vectors(data["cols"], data["rows"])


def parse_input(args: argparse.Namespace):
    """Return a DegreeMatrix, or a ``(t, c, d)`` triple for ``pure``."""
    pair = args.cols is not None or args.rows is not None
    triple = any(getattr(args, k, None) is not None for k in ("t", "c", "d"))
    sources = pair + (args.input is not None) + triple
    if sources != 1:
        raise UsageError("give exactly one of --cols/--rows, --input, or --t/--c/--d")
    if pair:
        if args.cols is None or args.rows is None:
            raise UsageError("--cols and --rows must be given together")
        return from_vectors(args.cols, args.rows)
    if args.input is not None:
        return _read_input_file(args.input)
    if None in (args.t, args.c, args.d):
        raise UsageError("--t, --c and --d must be given together")
    if min(args.t, args.c, args.d) < 1:
        raise DegreeMatrixError("--t, --c and --d must be positive")
    return args.t, args.c, args.d


def _as_matrix(parsed) -> DegreeMatrix:
    return equidegree(*parsed) if isinstance(parsed, tuple) else parsed


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def cmd_shifts(args, dm):
    return _dump({"t": dm.t, "c": dm.c, "m": list(min_shifts(dm)), "M": list(max_shifts(dm))})


def cmd_betti(args, dm):
    if args.enumerate:
        bt = betti_table_enumerated(dm, args.enum_cap)
    else:
        bt = betti_table(dm)
    if args.pretty:
        return bt.diagram()
    return _dump({
        "t": bt.t,
        "c": bt.c,
        "betti": bt.to_json(),
        "kPolynomial": [str(x) for x in k_polynomial(bt).coefficients],
    })


def cmd_mult(args, dm):
    return _dump({"e": str(multiplicity(dm, args.method)), "method": args.method})


def cmd_check(args, dm):
    return _dump(check_bounds(dm).to_json())


def cmd_pure(args, parsed):
    t, c, d = parsed
    dm = equidegree(t, c, d)
    e = multiplicity_pure(t, c, d)
    others = (multiplicity_en(dm), multiplicity_linkage(dm), multiplicity_linkage_dual(dm))
    if any(x != e for x in others):
        raise InvariantViolation(f"pure closed form {e} disagrees with {others}")
    return _dump({"e": str(e), "m": list(min_shifts(dm)), "M": list(max_shifts(dm))})


def cmd_fuzz(args):
    try:
        cfg = FuzzConfig(seed=args.seed, trials=args.trials, max_t=args.max_t,
                         max_c=args.max_c, max_b=args.max_b, max_gap=args.max_gap,
                         enum_cap=args.enum_cap)
    except ValueError as exc:
        raise DegreeMatrixError(str(exc)) from exc
    summary = fuzz_campaign(cfg, workers=args.workers)
    return _dump(summary.to_json()), (EXIT_OK if summary.ok else EXIT_INTERNAL)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="detmult", description=(
        "Betti shifts, Eagon-Northcott Betti tables and multiplicity bounds "
        "for determinantal ideals given by their degree matrix."))
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(p, pure_required=False):
        p.add_argument("--cols", type=int_list, help="column degrees a_j, e.g. 1,1,2")
        p.add_argument("--rows", type=int_list, help="row degrees b_i, e.g. 0,0")
        p.add_argument("--input", metavar="FILE",
                       help='JSON file: {"cols": [...], "rows": [...]} or {"u": [[...], ...]}')
        p.add_argument("--t", type=int, help="rows of an equidegree matrix")
        p.add_argument("--c", type=int, help="codimension of an equidegree matrix")
        p.add_argument("--d", type=int, help="common entry degree of an equidegree matrix")
        return p

    with_input(sub.add_parser("shifts", help="minimal and maximal shifts m_i, M_i"))
    p = with_input(sub.add_parser("betti", help="graded Betti table and K-polynomial"))
    p.add_argument("--pretty", action="store_true", help="print a Betti diagram instead of JSON")
    p.add_argument("--enumerate", action="store_true",
                   help="list every Eagon-Northcott generator instead of the DP")
    p.add_argument("--enum-cap", type=int, default=None,
                   help=f"generator cap for --enumerate (default {default_enum_cap()})")
    p = with_input(sub.add_parser("mult", help="multiplicity e(R/I)"))
    p.add_argument("--method", choices=("auto", "en", "linkage"), default="auto")
    with_input(sub.add_parser("check", help="multiplicity with its lower and upper bounds"))
    with_input(sub.add_parser("pure", help="equidegree closed form"))

    p = sub.add_parser("fuzz", help="randomized verification campaign")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-t", type=int, required=True)
    p.add_argument("--max-c", type=int, required=True)
    p.add_argument("--max-b", type=int, required=True)
    p.add_argument("--max-gap", type=int, required=True)
    p.add_argument("--enum-cap", type=int, default=None)
    p.add_argument("--workers", type=int, default=1, help="worker processes")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "enum_cap", None) is None and args.command in ("betti", "fuzz"):
        args.enum_cap = default_enum_cap()
    try:
        code = EXIT_OK
        if args.command == "fuzz":
            text, code = cmd_fuzz(args)
        else:
            parsed = parse_input(args)
            if args.command == "pure":
                if not isinstance(parsed, tuple):
                    raise UsageError("pure takes --t, --c and --d")
                text = cmd_pure(args, parsed)
            else:
                handler = {"shifts": cmd_shifts, "betti": cmd_betti,
                           "mult": cmd_mult, "check": cmd_check}[args.command]
                text = handler(args, _as_matrix(parsed))
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"detmult: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DegreeMatrixError, EnumerationCapExceeded) as exc:
        print(f"detmult: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (InvariantViolation, AssertionError) as exc:
        print(f"detmult: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
