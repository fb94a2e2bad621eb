"""One-permutation reports and whole-S_n sweeps.

analyze_permutation bundles everything the package can say about one
permutation: orbit, volumes, lattice point counts, h*, hollowness, and
an optional triangulation summary.  Budget overruns never abort a
report; the affected fields are left unset and the stage is recorded in
``budget_exceeded`` so callers can flag the row and set the exit code.

Sweeps apply the same report to all of S_n (or the ends-n,1 /
begins-2-ends-n,1 slices), optionally across worker processes; results
are deterministic and independent of the worker count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BudgetExceeded, TooShort
from .ehrhart import (
    count_interior_points,
    count_lattice_points,
    enumerate_lattice_points,
    h_star_box_points,
)
from .lattice import build_simplex, euclidean_volume_squared, relative_volume
from .permutations import (
    Permutation,
    all_permutations,
    is_2ln1,
    is_ln1,
    ln1_permutations,
    sort_orbit,
    two_ln1_permutations,
)
from .triangulation import (
    is_unimodular,
    max_lattice_point_bound,
    placing_triangulation,
    unimodular_triangulation_search,
)

__all__ = [
    "DEFAULT_BUDGET",
    "DEFAULT_SEARCH_BUDGET",
    "AnalysisOptions",
    "AnalysisReport",
    "TriangulationSummary",
    "SweepSummary",
    "analyze_permutation",
    "sweep",
    "CSV_COLUMNS",
    "report_csv_row",
    "sqrt_display",
]

DEFAULT_BUDGET = 10**9
DEFAULT_SEARCH_BUDGET = 2 * 10**6


@dataclass(frozen=True)
class AnalysisOptions:
    hstar: bool = True
    triangulation: bool = True
    budget: int | None = DEFAULT_BUDGET
    search_budget: int | None = DEFAULT_SEARCH_BUDGET


@dataclass(frozen=True)
class TriangulationSummary:
    cells: int
    placing_unimodular: bool
    search_status: str


@dataclass(frozen=True)
class AnalysisReport:
    permutation: str
    n: int
    orbit: tuple[str, ...]
    index: int
    is_ln1: bool
    is_2ln1: bool
    dimension: int
    euclidean_volume_squared: Fraction
    relative_volume: Fraction
    lattice_points_t1: int | None
    interior_points_t1: int | None
    hollow: bool | None
    h_star: tuple[int, ...] | None
    bound_ok: bool | None
    triangulation: TriangulationSummary | None
    budget_exceeded: tuple[str, ...]


def _safe_flag(checker, p: Permutation) -> bool:
    try:
        return checker(p)
    except TooShort:
        return False


def analyze_permutation(p: Permutation,
                        options: AnalysisOptions | None = None) -> AnalysisReport:
    opts = options or AnalysisOptions()
    orbit = sort_orbit(p)
    s = build_simplex(orbit)
    ln1 = _safe_flag(is_ln1, p)
    two_ln1 = _safe_flag(is_2ln1, p)
    exceeded: list[str] = []

    points_t1 = interior_t1 = None
    try:
        points_t1 = count_lattice_points(s, 1, opts.budget)
        interior_t1 = count_interior_points(s, 1, opts.budget)
    except BudgetExceeded:
        exceeded.append("points")
    hollow = None if interior_t1 is None else interior_t1 == 0
    bound_ok = None
    if ln1 and points_t1 is not None:
        bound_ok = points_t1 <= max_lattice_point_bound(p.n)

    h_star = None
    if opts.hstar:
        try:
            h_star = h_star_box_points(s, opts.budget)
        except BudgetExceeded:
            exceeded.append("hstar")

    tri_summary = None
    if opts.triangulation:
        try:
            classified = enumerate_lattice_points(s, 1, opts.budget)
            placing = placing_triangulation(s, [c.point for c in classified])
            outcome = unimodular_triangulation_search(s, opts.search_budget)
            tri_summary = TriangulationSummary(
                cells=len(placing.cells),
                placing_unimodular=is_unimodular(placing),
                search_status=outcome.status,
            )
        except BudgetExceeded:
            exceeded.append("triangulation")

    return AnalysisReport(
        permutation=str(p),
        n=p.n,
        orbit=tuple(str(q) for q in orbit.chain),
        index=orbit.index,
        is_ln1=ln1,
        is_2ln1=two_ln1,
        dimension=s.dimension,
        euclidean_volume_squared=euclidean_volume_squared(s),
        relative_volume=relative_volume(s),
        lattice_points_t1=points_t1,
        interior_points_t1=interior_t1,
        hollow=hollow,
        h_star=h_star,
        bound_ok=bound_ok,
        triangulation=tri_summary,
        budget_exceeded=tuple(exceeded),
    )


CSV_COLUMNS = (
    "permutation",
    "n",
    "index",
    "is_ln1",
    "is_2ln1",
    "dim",
    "evol_sq_num",
    "evol_sq_den",
    "relvol_num",
    "relvol_den",
    "points_t1",
    "interior_t1",
    "hollow",
    "hstar",
    "bound_ok",
)


def _csv_bool(value: bool | None) -> str:
    if value is None:
        return ""
    return "true" if value else "false"


def report_csv_row(report: AnalysisReport) -> list[str]:
    """One CSV row; unavailable fields are left empty (budget or disabled stage)."""
    return [
        report.permutation,
        str(report.n),
        str(report.index),
        _csv_bool(report.is_ln1),
        _csv_bool(report.is_2ln1),
        str(report.dimension),
        str(report.euclidean_volume_squared.numerator),
        str(report.euclidean_volume_squared.denominator),
        str(report.relative_volume.numerator),
        str(report.relative_volume.denominator),
        "" if report.lattice_points_t1 is None else str(report.lattice_points_t1),
        "" if report.interior_points_t1 is None else str(report.interior_points_t1),
        _csv_bool(report.hollow),
        "" if report.h_star is None else ";".join(str(h) for h in report.h_star),
        _csv_bool(report.bound_ok),
    ]


def sqrt_display(value: Fraction) -> str:
    """Symbolic square root: exact when the radicand is a perfect square."""
    num, den = value.numerator, value.denominator
    sn, sd = math.isqrt(num), math.isqrt(den)
    if sn * sn == num and sd * sd == den:
        return str(Fraction(sn, sd))
    if den == 1:
        return f"sqrt({num})"
    return f"sqrt({num}/{den})"


@dataclass(frozen=True)
class SweepSummary:
    n: int
    filter: str
    total: int
    index_histogram: tuple[tuple[int, int], ...]
    max_lattice_points: int | None
    max_lattice_points_argmax: tuple[str, ...]
    max_relative_volume: Fraction | None
    max_relative_volume_argmax: tuple[str, ...]
    hollow_count: int
    relvol_gt_1_count: int
    rows_budget_exceeded: int


def _permutation_source(n: int, selection: str) -> Iterable[Permutation]:
    if selection == "all":
        return all_permutations(n)
    if selection == "Ln1":
        return ln1_permutations(n) if n >= 2 else iter(())
    if selection == "2Ln1":
        return two_ln1_permutations(n) if n >= 3 else iter(())
    raise ValueError(f"unknown filter {selection!r}")


def _analyze_chunk(args: tuple[tuple[tuple[int, ...], ...], AnalysisOptions]
                   ) -> list[AnalysisReport]:
    entries_chunk, opts = args
    return [analyze_permutation(Permutation(e), opts) for e in entries_chunk]


def summarize(n: int, selection: str,
              reports: Sequence[AnalysisReport]) -> SweepSummary:
    histogram: dict[int, int] = {}
    for r in reports:
        histogram[r.index] = histogram.get(r.index, 0) + 1
    counted = [r for r in reports if r.lattice_points_t1 is not None]
    max_points = max((r.lattice_points_t1 for r in counted), default=None)
    max_points_arg = tuple(
        r.permutation for r in counted if r.lattice_points_t1 == max_points
    ) if max_points is not None else ()
    max_relvol = max((r.relative_volume for r in reports), default=None)
    max_relvol_arg = tuple(
        r.permutation for r in reports if r.relative_volume == max_relvol
    ) if max_relvol is not None else ()
    return SweepSummary(
        n=n,
        filter=selection,
        total=len(reports),
        index_histogram=tuple(sorted(histogram.items())),
        max_lattice_points=max_points,
        max_lattice_points_argmax=max_points_arg,
        max_relative_volume=max_relvol,
        max_relative_volume_argmax=max_relvol_arg,
        hollow_count=sum(1 for r in reports if r.hollow),
        relvol_gt_1_count=sum(1 for r in reports if r.relative_volume > 1),
        rows_budget_exceeded=sum(1 for r in reports if r.budget_exceeded),
    )


def sweep(n: int, selection: str = "all",
          options: AnalysisOptions | None = None,
          jobs: int = 1) -> tuple[SweepSummary, list[AnalysisReport]]:
    """Analyze every permutation in the selection, in lexicographic order.

    Sweeps never triangulate (the CSV schema carries no triangulation
    columns).  With jobs > 1 the permutation list is split into
    contiguous chunks handled by worker processes; chunk results are
    concatenated in order, so the rows match a serial run exactly.
    """
    opts = replace(options or AnalysisOptions(), triangulation=False)
    entries = [p.entries for p in _permutation_source(n, selection)]
    if jobs <= 1 or len(entries) <= 1:
        reports = _analyze_chunk((tuple(entries), opts))
    else:
        import multiprocessing

        chunk_count = min(len(entries), jobs * 4)
        size = -(-len(entries) // chunk_count)
        chunks = [
            (tuple(entries[i:i + size]), opts)
            for i in range(0, len(entries), size)
        ]
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(_analyze_chunk, chunks)
        reports = [r for part in parts for r in part]
    return summarize(n, selection, reports), reports
