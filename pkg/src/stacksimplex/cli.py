"""Command line interface: analyze, sweep, verify.

Exit codes: 0 success, 1 a verified claim failed, 2 bad input, 3 a
candidate budget was exceeded (the JSON still carries the partial
report).  Output is deterministic: fixed key order, exact rationals as
num/den pairs, no timestamps, so identical invocations are
byte-identical and a parallel sweep matches a serial one.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .analysis import (
    CSV_COLUMNS,
    DEFAULT_BUDGET,
    DEFAULT_SEARCH_BUDGET,
    AnalysisOptions,
    AnalysisReport,
    SweepSummary,
    analyze_permutation,
    report_csv_row,
    sqrt_display,
    sweep,
)
from .claims import claim_names, run_claim
from .errors import EmptyPermutation, MalformedToken, NotABijection
from .permutations import parse_permutation

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3


def _meta(command: str) -> dict:
    return {"tool": "stacksimplex", "version": __version__, "command": command}


def _fraction_json(value: Fraction) -> dict:
    return {"num": value.numerator, "den": value.denominator}


def _report_json(report: AnalysisReport) -> dict:
    tri = None
    if report.triangulation is not None:
        tri = {
            "cells": report.triangulation.cells,
            "placing_unimodular": report.triangulation.placing_unimodular,
            "search_status": report.triangulation.search_status,
        }
    return {
        "meta": _meta("analyze"),
        "permutation": report.permutation,
        "n": report.n,
        "orbit": list(report.orbit),
        "index": report.index,
        "is_ln1": report.is_ln1,
        "is_2ln1": report.is_2ln1,
        "dimension": report.dimension,
        "euclidean_volume_squared": _fraction_json(report.euclidean_volume_squared),
        "euclidean_volume_display": sqrt_display(report.euclidean_volume_squared),
        "relative_volume": _fraction_json(report.relative_volume),
        "lattice_points_t1": report.lattice_points_t1,
        "interior_points_t1": report.interior_points_t1,
        "hollow": report.hollow,
        "h_star": None if report.h_star is None else list(report.h_star),
        "bound_ok": report.bound_ok,
        "triangulation": tri,
        "budget_exceeded": list(report.budget_exceeded),
    }


def _summary_json(summary: SweepSummary) -> dict:
    relvol = summary.max_relative_volume
    return {
        "meta": _meta("sweep"),
        "n": summary.n,
        "filter": summary.filter,
        "total": summary.total,
        "index_histogram": {str(k): v for k, v in summary.index_histogram},
        "max_lattice_points": {
            "value": summary.max_lattice_points,
            "argmax": list(summary.max_lattice_points_argmax),
        },
        "max_relative_volume": {
            "value": None if relvol is None else _fraction_json(relvol),
            "argmax": list(summary.max_relative_volume_argmax),
        },
        "hollow_count": summary.hollow_count,
        "relvol_gt_1_count": summary.relvol_gt_1_count,
        "rows_budget_exceeded": summary.rows_budget_exceeded,
    }


def _print_json(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _resolve_budget(args: argparse.Namespace) -> int | None:
    if args.budget is not None:
        return args.budget
    raw = os.environ.get("STACKSORT_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        print(
            f"error: STACKSORT_BUDGET must be an integer, got {raw!r}",
            file=sys.stderr,
        )
        raise SystemExit(EXIT_PARSE) from None


def _cmd_analyze(args: argparse.Namespace) -> int:
    try:
        p = parse_permutation(args.permutation)
    except (EmptyPermutation, MalformedToken, NotABijection) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    options = AnalysisOptions(
        hstar=not args.no_hstar,
        triangulation=not args.no_triangulation,
        budget=_resolve_budget(args),
        search_budget=args.search_budget,
    )
    report = analyze_permutation(p, options)
    _print_json(_report_json(report))
    return EXIT_BUDGET if report.budget_exceeded else EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    options = AnalysisOptions(
        hstar=not args.no_hstar,
        triangulation=False,
        budget=_resolve_budget(args),
        search_budget=args.search_budget,
    )
    summary, reports = sweep(args.n, args.filter, options, jobs=args.jobs)
    if args.csv is not None:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            for report in reports:
                writer.writerow(report_csv_row(report))
    _print_json(_summary_json(summary))
    return EXIT_BUDGET if summary.rows_budget_exceeded else EXIT_OK


def _parse_n_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo < 1 or hi < lo:
        raise ValueError(f"bad n range {text!r}")
    return lo, hi


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        lo, hi = _parse_n_range(args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.claims == "all":
        names = list(claim_names())
    else:
        names = [c.strip() for c in args.claims.split(",") if c.strip()]
        unknown = [c for c in names if c not in claim_names()]
        if unknown:
            print(f"error: unknown claims {unknown}", file=sys.stderr)
            return EXIT_PARSE
    rows = []
    all_passed = True
    for name in names:
        first_failure = None
        for n in range(lo, hi + 1):
            result = run_claim(name, n)
            if not result.passed:
                first_failure = {"n": n, "counterexample": result.counterexample}
                all_passed = False
                break
        rows.append({
            "name": name,
            "passed": first_failure is None,
            "first_failure": first_failure,
        })
    payload = {
        "meta": _meta("verify"),
        "n_from": lo,
        "n_to": hi,
        "claims": rows,
        "passed": all_passed,
    }
    _print_json(payload)
    return EXIT_OK if all_passed else EXIT_VERIFY_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stacksimplex",
        description="Exact geometry of stack-sorting orbit simplices.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_budget_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--budget", type=int, default=None,
            help="candidate ceiling for point enumeration "
                 "(default: STACKSORT_BUDGET or 10^9)",
        )
        p.add_argument(
            "--search-budget", type=int, default=DEFAULT_SEARCH_BUDGET,
            help="node ceiling for the unimodular triangulation search",
        )

    analyze = sub.add_parser("analyze", help="full report for one permutation")
    analyze.add_argument("permutation", help="one-line notation, e.g. '2 3 1' or 231")
    analyze.add_argument("--no-hstar", action="store_true",
                         help="skip h* computation")
    analyze.add_argument("--no-triangulation", action="store_true",
                         help="skip triangulation summary")
    add_budget_flags(analyze)
    analyze.set_defaults(func=_cmd_analyze)

    sweep_parser = sub.add_parser("sweep", help="analyze every permutation of S_n")
    sweep_parser.add_argument("n", type=int)
    sweep_parser.add_argument("--filter", choices=["all", "Ln1", "2Ln1"],
                              default="all")
    sweep_parser.add_argument("--jobs", type=int, default=1,
                              help="worker processes (results identical to serial)")
    sweep_parser.add_argument("--csv", default=None,
                              help="write per-permutation rows to this CSV file")
    sweep_parser.add_argument("--no-hstar", action="store_true",
                              help="skip h* (the most expensive sweep column)")
    add_budget_flags(sweep_parser)
    sweep_parser.set_defaults(func=_cmd_sweep)

    verify = sub.add_parser("verify", help="run registered claims exhaustively")
    verify.add_argument("--claims", default="all",
                        help="'all' or comma-separated claim names "
                             f"({', '.join(claim_names())})")
    verify.add_argument("--n", default="2..6",
                        help="size or range, e.g. 5 or 2..6")
    verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
