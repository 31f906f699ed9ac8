"""The `bell` command line tool.

Subcommands: table, value, poly, asympt, selfcheck. Exit code 0 on
success, 1 when a selfcheck invariant fails, 2 on usage errors
(argparse's convention).
"""

from __future__ import annotations

import argparse
import sys

from .rendering import (
    FORMATS,
    METHODS,
    OutputDocument,
    render_asympt,
    render_poly,
    render_table,
    render_value,
)
from .selfcheck import run_selfcheck


def cmd_table(n_max: int, m_max: int, fmt: str = "tsv") -> OutputDocument:
    return render_table(n_max, m_max, fmt)


def cmd_value(n: int, m: int, method: str = "auto", fmt: str = "tsv") -> OutputDocument:
    return render_value(n, m, method, fmt)


def cmd_poly(n: int, fmt: str = "json") -> OutputDocument:
    return render_poly(n, fmt)


def cmd_asympt(n: int, m: int, digits: int = 6, fmt: str = "tsv") -> OutputDocument:
    return render_asympt(n, m, digits, fmt)


def cmd_selfcheck() -> int:
    return run_selfcheck()


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bell",
        description="Exact iterated-exponential Bell numbers: "
        "tables, single values, polynomial coefficients, asymptotics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="grid of B(n, m) values")
    table.add_argument("--n-max", type=int, default=8, help="largest n (default 8)")
    table.add_argument("--m-max", type=int, default=5, help="largest m (default 5)")
    table.add_argument("--format", choices=FORMATS, default="tsv")

    value = sub.add_parser("value", help="a single B(n, m)")
    value.add_argument("--n", type=int, required=True)
    value.add_argument("--m", type=int, required=True)
    value.add_argument("--method", choices=METHODS, default="auto")
    value.add_argument("--format", choices=FORMATS, default="tsv")

    poly = sub.add_parser("poly", help="coefficients of B_n as a polynomial in m")
    poly.add_argument("--n", type=int, required=True)
    poly.add_argument("--format", choices=FORMATS, default="json")
    poly.add_argument(
        "--allow-zero",
        action="store_true",
        help="accept n = 0 and report the constant polynomial 1",
    )

    asympt = sub.add_parser("asympt", help="exact value next to its leading term")
    asympt.add_argument("--n", type=int, required=True)
    asympt.add_argument("--m", type=int, required=True)
    asympt.add_argument("--digits", type=int, default=6, help="decimal places (default 6)")
    asympt.add_argument("--format", choices=FORMATS, default="tsv")

    sub.add_parser("selfcheck", help="re-verify every library invariant")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.command == "selfcheck":
        return cmd_selfcheck()

    if args.command == "table":
        if args.n_max < 1 or args.m_max < 1:
            parser.error("--n-max and --m-max must be at least 1")
        doc = cmd_table(args.n_max, args.m_max, args.format)
    elif args.command == "value":
        if args.n < 0 or args.m < 0:
            parser.error("--n and --m must be non-negative")
        doc = cmd_value(args.n, args.m, args.method, args.format)
    elif args.command == "poly":
        if args.n < 0 or (args.n == 0 and not args.allow_zero):
            parser.error("--n must be at least 1 (or pass --allow-zero for n = 0)")
        doc = cmd_poly(args.n, args.format)
    else:
        if args.n < 1 or args.m < 1:
            parser.error("--n and --m must be at least 1")
        if args.digits < 0:
            parser.error("--digits must be non-negative")
        doc = cmd_asympt(args.n, args.m, args.digits, args.format)

    sys.stdout.write(doc.payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())
