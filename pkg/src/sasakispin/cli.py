"""Command line interface: run the check suite or list the registry.

Exit status: 0 when every entry passed or was skipped, 1 when any check
failed, 2 on a usage error (unknown check filter, malformed rational,
unsupported dimension).
"""
from __future__ import annotations

import argparse

from .checks import (
    DEFAULT_ALPHAS,
    DEFAULT_DELTAS,
    has_failures,
    render_check_table,
    render_json,
    render_text,
    run_suite,
)
from .scalars import Scalar


def _rational(text: str) -> Scalar:
    try:
        value = Scalar(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a rational number: {exc}") from exc
    if not value.is_rational():
        raise argparse.ArgumentTypeError(f"{text!r} is not rational")
    return value


def _dims(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a comma-separated list of dimensions") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sasakispin",
        description="Exact verification suite for spin geometry on "
                    "3-(alpha, delta)-Sasaki structures.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser(
        "verify", help="run checks over a parameter grid")
    verify.add_argument(
        "--filter", default="*", metavar="GLOB",
        help="glob on check ids (default: all checks)")
    verify.add_argument(
        "--alpha", type=_rational, nargs="+", metavar="P/Q",
        help="alpha grid values (default: 1 2 3 -1 -2)")
    verify.add_argument(
        "--delta", type=_rational, nargs="+", metavar="P/Q",
        help="delta grid values (default: 1 2 3 4 5 -1 -4)")
    verify.add_argument(
        "--dims", type=_dims, default=(7, 11, 15), metavar="7,11,15",
        help="spin module dimensions to exercise")
    verify.add_argument(
        "--format", choices=("text", "json"), default="text",
        help="report format (default: text)")
    verify.add_argument(
        "--out", metavar="PATH",
        help="write the report to PATH instead of stdout")

    sub.add_parser("list-checks", help="describe every registered check")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "list-checks":
        print(render_check_table(), end="")
        return 0

    alphas = tuple(args.alpha) if args.alpha else DEFAULT_ALPHAS
    deltas = tuple(args.delta) if args.delta else DEFAULT_DELTAS
    grid = tuple((a, d) for a in alphas for d in deltas)
    try:
        entries = run_suite(args.filter, grid=grid, dims=args.dims)
    except ValueError as exc:
        parser.error(str(exc))  # exits with status 2

    report = render_json(entries) if args.format == "json" \
        else render_text(entries)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(report)
        counts = {"pass": 0, "fail": 0, "skip": 0}
        for entry in entries:
            counts[entry.status] += 1
        print(f"wrote {len(entries)} entries to {args.out}: "
              f"{counts['pass']} passed, {counts['skip']} skipped, "
              f"{counts['fail']} failed")
    else:
        print(report, end="")
    return 1 if has_failures(entries) else 0
