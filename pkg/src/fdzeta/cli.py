"""Command-line front end.

    fdzeta eval --k 1 --eta 0 [--method closed|quadrature|series]
    fdzeta table --k 1 --etas=-2,0,2 [--format csv|json] [--out PATH]
    fdzeta reproduce-table1

Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 Table 1
reproduction mismatch.
"""
from __future__ import annotations

import argparse
import math
import sys

from . import report
from .errors import DomainError, NumericalFailure
from .fd_core import VALIDITY_LIMIT, Method, fd_closed_form
from .oracle import QuadratureConfig, fd_quadrature, fd_series_nondegenerate

EXIT_OK, EXIT_USAGE, EXIT_NUMERICAL, EXIT_MISMATCH = 0, 1, 2, 3

WARNING_TEXT = ("warning: eta > {limit:g}; the exponential model is outside "
                "its reliable range and the value may be badly off")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _finite(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not finite: {text!r}")
    return value


def _eta_list(text: str) -> list[float]:
    items = [t.strip() for t in text.split(",")]
    if not items or any(not t for t in items):
        raise argparse.ArgumentTypeError(f"malformed eta list: {text!r}")
    return [_finite(t) for t in items]


def _positive(text: str) -> float:
    value = _finite(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _digits(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 1 <= value <= 17:
        raise argparse.ArgumentTypeError("digits must be in 1..17")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rel-tol", type=_positive, default=1e-12,
                        help="relative tolerance of the quadrature oracle")
    common.add_argument("--digits", type=_digits, default=6,
                        help="significant digits in displayed values")
    common.add_argument("--quiet", action="store_true", help="suppress warnings")

    parser = _Parser(prog="fdzeta",
                     description="Fermi-Dirac integrals F_{k/2}(eta) via zeta functions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="evaluate one value")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eta", type=_finite, required=True)
    p.add_argument("--method", choices=[m.value for m in Method], default="closed")

    p = sub.add_parser("table", parents=[common],
                       help="closed form vs. quadrature on a list of eta values")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--etas", type=_eta_list, required=True,
                   help="comma-separated list; write --etas=-4,-3 for negatives")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="write to this path instead of stdout")

    sub.add_parser("reproduce-table1", parents=[common],
                   help="recompute the published F_{1/2} comparison table")
    return parser


def _warn(args) -> None:
    if not args.quiet:
        print(WARNING_TEXT.format(limit=VALIDITY_LIMIT), file=sys.stderr)


def cmd_eval(args) -> int:
    config = QuadratureConfig(rel_tol=args.rel_tol)
    method = Method(args.method)
    if method is Method.CLOSED_FORM:
        result = fd_closed_form(args.k, args.eta)
    elif method is Method.QUADRATURE:
        result = fd_quadrature(args.k, args.eta, config)
    else:
        result = fd_series_nondegenerate(args.k, args.eta)
    print(report.format_value(result.value, args.digits))
    if result.validity_warning:
        _warn(args)
    return EXIT_OK


def cmd_table(args) -> int:
    config = QuadratureConfig(rel_tol=args.rel_tol)
    rows = report.grid_rows(args.k, args.etas, config)
    text = report.rows_to_csv(rows) if args.format == "csv" else report.rows_to_json(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if any(r.warning for r in rows):
        _warn(args)
    return EXIT_OK


def cmd_reproduce_table1(args) -> int:
    fmt = lambda x: report.format_value(x, args.digits)
    checks = report.check_table1()
    header = f"{'eta':>5}  {'eq.':>11}  {'paper eq.':>11}  {'reference':>11}  " \
             f"{'error %':>11}  {'paper err %':>11}  status"
    print(header)
    for c in checks:
        r = c.row
        status = "PASS" if c.passed else "FAIL"
        if not c.value_ok:
            status += " (value)"
        if not c.error_ok:
            status += " (error %)"
        print(f"{r.eta:>5g}  {fmt(r.approx):>11}  {fmt(c.paper_value):>11}  "
              f"{fmt(r.reference):>11}  {fmt(r.error_pct):>11}  "
              f"{fmt(c.paper_error_pct):>11}  {status}")
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} rows pass")
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


_COMMANDS = {"eval": cmd_eval, "table": cmd_table, "reproduce-table1": cmd_reproduce_table1}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"fdzeta: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalFailure as exc:
        print(f"fdzeta: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
