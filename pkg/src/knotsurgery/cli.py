"""Command-line interface.

Exit codes:

    0  success
    1  report ran but at least one acceptance criterion failed
    2  bad command-line usage (argparse)
    3  invalid Levine parameters
    4  malformed diagram code
    5  degenerate Alexander minor
    6  invalid Seifert matrix
    7  constants cannot be certified
    8  census would exceed --max-records
    9  budget too small for the growth chain
    10 growth chain step failed
    11 oracle disagrees with the closed form
    12 file could not be read or written
"""

from __future__ import annotations

import argparse
import sys

from .census import (
    DEFAULT_MAX_RECORDS,
    bound_report,
    census_to_csv,
    census_to_json,
    enumerate_census,
    reports_to_csv,
    reports_to_json,
)
from .errors import KnotSurgeryError, OracleMismatchError
from .foxcalc import fox_alexander, parse_diagram
from .kirby_ledger import (
    DEFAULT_GRID,
    GridSpec,
    build_ledger,
    constants_document,
    fit_constants,
    load_constants,
)
from .levine import LevineParams, alexander_closed, generate_diagram

EXIT_CRITERION_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 12


def _params(args) -> LevineParams:
    return LevineParams.parse(args.c, args.central)


def _int_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _grid(text: str) -> GridSpec:
    try:
        return GridSpec.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def cmd_alex(args, out) -> int:
    out.write(alexander_closed(_params(args)).to_json() + "\n")
    return 0


def cmd_diagram(args, out) -> int:
    out.write(generate_diagram(_params(args)).to_text())
    return 0


def cmd_oracle(args, out) -> int:
    if args.file is not None:
        with open(args.file) as fh:
            pd = parse_diagram(fh.read())
    elif args.c is not None:
        pd = generate_diagram(_params(args))
    else:
        raise argparse.ArgumentTypeError("oracle needs a diagram file or --c")
    poly = fox_alexander(pd)
    if not args.check:
        out.write(poly.to_json() + "\n")
        return 0
    if args.c is None:
        raise argparse.ArgumentTypeError("--check needs --c to name the expected knot")
    expected = alexander_closed(_params(args))
    if poly != expected:
        raise OracleMismatchError(f"oracle gives {poly.to_json()}, closed form {expected.to_json()}")
    out.write("MATCH\n")
    return 0


def cmd_ledger(args, out) -> int:
    out.write(build_ledger(_params(args)).to_csv())
    return 0


def cmd_constants(args, out) -> int:
    k = fit_constants(args.grid)
    doc = constants_document(k, str(args.grid))
    if args.constants_file is not None:
        with open(args.constants_file, "w") as fh:
            fh.write(doc)
    out.write(doc)
    return 0


def cmd_census(args, out) -> int:
    k = load_constants(args.constants_file)
    census = enumerate_census(args.n, k, args.max_records, args.central_sign)
    out.write(census_to_json(census) if args.format == "json" else census_to_csv(census))
    return 0


def cmd_bounds(args, out) -> int:
    k = load_constants(args.constants_file)
    ns = args.n_list if args.n_list is not None else [args.n]
    if any(n < 0 for n in ns):
        raise argparse.ArgumentTypeError("budgets must be nonnegative")
    reports = [bound_report(n, k, args.max_records) for n in ns]
    out.write(reports_to_json(reports) if args.format == "json" else reports_to_csv(reports))
    return 0


def cmd_report(args, out) -> int:
    from .acceptance import render_report, run_all

    results = run_all(args.max_records)
    out.write(render_report(results))
    return 0 if all(r.passed for r in results) else EXIT_CRITERION_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knotsurgery",
                                     description="Levine knots, Kirby ledgers and smooth-structure counts.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_params(p, required=True):
        p.add_argument("--c", required=required, help="comma-separated twist counts, e.g. 2,3")
        p.add_argument("--central", default="-1", help="central twist sign, +1 or -1")

    def with_budget(p):
        p.add_argument("--max-records", type=int, default=DEFAULT_MAX_RECORDS)
        p.add_argument("--constants-file", default=None,
                       help="constants JSON (default: the frozen set shipped with the package)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("alex", help="closed-form Alexander polynomial as JSON")
    with_params(p)
    p.set_defaults(func=cmd_alex)

    p = sub.add_parser("diagram", help="diagram code of the Levine knot")
    with_params(p)
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("oracle", help="Fox-calculus Alexander polynomial of a diagram")
    p.add_argument("file", nargs="?", help="diagram code file")
    with_params(p, required=False)
    p.add_argument("--check", action="store_true", help="compare with the closed form for --c")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("ledger", help="complexity ledger as CSV")
    with_params(p)
    p.set_defaults(func=cmd_ledger)

    p = sub.add_parser("constants", help="certify A1, A2, A3 and emit them as JSON")
    p.add_argument("--grid", type=_grid, default=GridSpec.parse(DEFAULT_GRID))
    p.add_argument("--constants-file", default=None, help="also write the JSON here")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("census", help="enumerate the counting slice under budget n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--central", dest="central_sign", type=int, choices=(-1, 1), default=-1)
    with_budget(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("bounds", help="count, lower bound and Martelli band per budget")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--n-list", type=_int_list)
    with_budget(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("report", help="run the acceptance sweep")
    p.add_argument("--max-records", type=int, default=None)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except KnotSurgeryError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except (argparse.ArgumentTypeError, ValueError) as e:
        print(f"{parser.prog} {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
