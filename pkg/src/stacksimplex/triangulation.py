"""Triangulations of orbit simplices by lattice-point cells.

A triangulation is stored as a shared point list plus cells given as
sorted index tuples.  Cells are full-dimensional lattice simplices with
pairwise disjoint interiors whose volumes add up to the polytope's
relative volume (overlaps of lower dimension are allowed, so this is
the partition sense of triangulation).

Two constructions live here: the placing triangulation, which inserts
points one at a time and stellarly splits every cell containing the
newcomer, and an exhaustive backtracking search for a triangulation all
of whose cells are unimodular (edge determinant +-1).  Interior
disjointness of two cells is decided exactly, by maximizing the minimum
barycentric coordinate of a common point with a rational simplex-method
linear program.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import BudgetExceeded, PointOutside
from .exact import adjugate, det, lp_maximize
from .lattice import LatticeSimplex, edge_determinant
from .ehrhart import enumerate_lattice_points

__all__ = [
    "Triangulation",
    "UnimodularSearchResult",
    "cell_edge_det",
    "triangulation_volume",
    "is_unimodular",
    "max_lattice_point_bound",
    "placing_triangulation",
    "simplices_interiors_intersect",
    "unimodular_triangulation_search",
]

Point = tuple[int, ...]


@dataclass(frozen=True)
class Triangulation:
    """Shared point list plus cells as sorted tuples of point indices."""

    points: tuple[Point, ...]
    cells: tuple[tuple[int, ...], ...]
    dimension: int


@dataclass(frozen=True)
class UnimodularSearchResult:
    """Outcome of the unimodular triangulation search.

    ``status`` is "found" (with the triangulation), "none_exists"
    (search space exhausted), or "budget_exceeded" (with the number of
    candidates visited in ``nodes``).
    """

    status: str
    triangulation: Triangulation | None
    nodes: int


def cell_edge_det(points: Sequence[Point], cell: Sequence[int]) -> int:
    """Signed edge determinant of a cell (last cell vertex as base)."""
    base = points[cell[-1]]
    rows = [[a - b for a, b in zip(points[i], base)] for i in cell[:-1]]
    return det(rows)


def triangulation_volume(tri: Triangulation) -> Fraction:
    """Sum of cell volumes in relative (lattice) normalization."""
    d = tri.dimension
    total = sum(abs(cell_edge_det(tri.points, cell)) for cell in tri.cells)
    return Fraction(total, math.factorial(d))


def is_unimodular(tri: Triangulation) -> bool:
    """Whether every cell has edge determinant +-1."""
    return all(abs(cell_edge_det(tri.points, cell)) == 1 for cell in tri.cells)


def max_lattice_point_bound(n: int) -> int:
    """(n-1)! + (n-1): cap on lattice points of an orbit simplex ending n, 1."""
    if n < 2:
        raise ValueError("the bound needs n >= 2")
    return math.factorial(n - 1) + (n - 1)


class _Cell:
    """A cell with cached barycentric machinery and bounding box."""

    __slots__ = ("indices", "nmat", "absdet", "lower", "upper")

    def __init__(self, indices: tuple[int, ...], points: Sequence[Point]):
        self.indices = indices
        verts = [points[i] for i in indices]
        d = len(verts) - 1
        m = [[1] * (d + 1)]
        for r in range(d):
            m.append([v[r] for v in verts])
        adj, dt = adjugate(m)
        if dt < 0:
            adj = [[-v for v in row] for row in adj]
            dt = -dt
        self.nmat = adj
        self.absdet = dt
        self.lower = tuple(min(v[r] for v in verts) for r in range(d))
        self.upper = tuple(max(v[r] for v in verts) for r in range(d))

    def values(self, point: Point, t: int = 1) -> list[int]:
        """Integer values f_i with lambda_i = f_i / absdet for the t-dilate."""
        y = (t, *point)
        return [sum(c * v for c, v in zip(row, y)) for row in self.nmat]

    def scaled_barycentric(self, point: Point) -> list[int] | None:
        """The values when the point lies in the cell, else None."""
        for r, x in enumerate(point):
            if x < self.lower[r] or x > self.upper[r]:
                return None
        values = self.values(point)
        if any(v < 0 for v in values):
            return None
        return values


def _ordered_points(s: LatticeSimplex, points: Sequence[Point]) -> list[Point]:
    supplied = set(tuple(p) for p in points)
    vertices = list(s.lattice_vertices)
    for v in vertices:
        if v not in supplied:
            raise ValueError(f"vertex {v} missing from the point list")
    rest = sorted(supplied - set(vertices))
    return vertices + rest


def placing_triangulation(s: LatticeSimplex,
                          points: Sequence[Point]) -> Triangulation:
    """Triangulate by inserting points one at a time.

    The vertices of s seed the triangulation as a single cell; the
    remaining points are inserted in lexicographic order, and each cell
    containing the newcomer is split into one child per vertex with
    positive barycentric coordinate (degenerate children vanish, so
    volume is conserved at every step).
    """
    d = s.dimension
    if d == 0:
        return Triangulation((s.lattice_vertices[0],), ((0,),), 0)
    ordered = _ordered_points(s, points)
    cells = {tuple(range(d + 1)): _Cell(tuple(range(d + 1)), ordered)}
    for k in range(d + 1, len(ordered)):
        p = ordered[k]
        containing = [
            (indices, cell, values)
            for indices, cell in cells.items()
            if (values := cell.scaled_barycentric(p)) is not None
        ]
        if not containing:
            raise PointOutside(f"point {p} lies outside the simplex")
        for indices, cell, values in containing:
            del cells[indices]
            for pos, f in enumerate(values):
                if f > 0:
                    child = tuple(sorted(indices[:pos] + (k,) + indices[pos + 1:]))
                    cells[child] = _Cell(child, ordered)
    return Triangulation(tuple(ordered), tuple(sorted(cells)), d)


def simplices_interiors_intersect(verts_a: Sequence[Point],
                                  verts_b: Sequence[Point]) -> bool:
    """Exact test: do the open simplices share a point?

    Maximizes delta subject to a common point having every barycentric
    coordinate >= delta in both simplices (substituting lambda = a + delta
    keeps all variables nonnegative).  The interiors meet exactly when
    the optimum is strictly positive; infeasibility means even the
    closed simplices are disjoint.
    """
    d = len(verts_a[0])
    ka, kb = len(verts_a), len(verts_b)
    nvars = ka + kb + 1
    rows = []
    rhs = []
    row = [1] * ka + [0] * kb + [ka]
    rows.append(row)
    rhs.append(1)
    row = [0] * ka + [1] * kb + [kb]
    rows.append(row)
    rhs.append(1)
    for r in range(d):
        row = [v[r] for v in verts_a] + [-v[r] for v in verts_b]
        row.append(sum(v[r] for v in verts_a) - sum(v[r] for v in verts_b))
        rows.append(row)
        rhs.append(0)
    objective = [0] * (ka + kb) + [1]
    best = lp_maximize(rows, rhs, objective)
    return best is not None and best > 0


def _orientation(points: Sequence[Point], facet: Sequence[int], apex: int) -> int:
    base = points[facet[0]]
    rows = [[a - b for a, b in zip(points[i], base)] for i in facet[1:]]
    rows.append([a - b for a, b in zip(points[apex], base)])
    d = det(rows)
    return (d > 0) - (d < 0)


def _cells_compatible(points: Sequence[Point], cell_a: tuple[int, ...],
                      cell_b: tuple[int, ...],
                      solvers: dict[tuple[int, ...], _Cell]) -> bool:
    """True when the two cells have disjoint interiors.

    Decided by integer tests where possible: disjoint bounding boxes,
    apex orientation across a shared facet, separation by a facet
    hyperplane of either cell, or a vertex strictly inside the other;
    the exact LP is only the last resort.
    """
    d = len(cell_a) - 1
    for r in range(d):
        amin = min(points[i][r] for i in cell_a)
        amax = max(points[i][r] for i in cell_a)
        bmin = min(points[i][r] for i in cell_b)
        bmax = max(points[i][r] for i in cell_b)
        if amax <= bmin or bmax <= amin:
            return True
    shared = sorted(set(cell_a) & set(cell_b))
    if len(shared) == d:
        # cells glued along a full facet: disjoint iff apexes lie on
        # opposite sides of the facet's hyperplane
        apex_a = next(i for i in cell_a if i not in shared)
        apex_b = next(i for i in cell_b if i not in shared)
        return _orientation(points, shared, apex_a) != _orientation(
            points, shared, apex_b)
    for own, other in ((cell_a, cell_b), (cell_b, cell_a)):
        solver = solvers.get(own)
        if solver is None:
            solver = solvers[own] = _Cell(own, points)
        values = [solver.values(points[i]) for i in other]
        for i in range(d + 1):
            if all(v[i] <= 0 for v in values):
                return True  # facet hyperplane i separates the interiors
        if any(all(f > 0 for f in v) for v in values):
            return False  # a vertex of one lies strictly inside the other
    return not simplices_interiors_intersect(
        [points[i] for i in cell_a], [points[i] for i in cell_b])


class _SearchBudget:
    __slots__ = ("limit", "visited")

    def __init__(self, limit: int | None):
        self.limit = limit
        self.visited = 0

    def spend(self, amount: int = 1) -> None:
        self.visited += amount
        if self.limit is not None and self.visited > self.limit:
            raise BudgetExceeded(self.limit, self.visited)


def _generic_direction(d: int, normals: set[tuple[int, ...]]) -> tuple[int, ...]:
    """Smallest (M**(d-1), ..., M, 1) not orthogonal to any given normal.

    Each normal is a nonzero integer vector, so its dot product with
    the direction is a nonzero polynomial in M of degree < d and has
    fewer than d roots; the loop always terminates.
    """
    m = 2
    while True:
        xi = tuple(m ** (d - 1 - r) for r in range(d))
        if all(
            sum(a * b for a, b in zip(n, xi)) != 0 for n in normals
        ):
            return xi
        m += 1


def unimodular_triangulation_search(s: LatticeSimplex,
                                    budget: int | None = None
                                    ) -> UnimodularSearchResult:
    """Exhaustive search for a triangulation with all cells unimodular.

    Candidate cells are the (d+1)-subsets of the simplex's lattice
    points with edge determinant +-1; a triangulation is exactly a
    pairwise interior-disjoint set of target = d! * relvol of them
    (their volumes then force them to fill the simplex).

    The search is organized as an exact cover.  Fix a direction xi not
    parallel to any candidate facet; make each cell half-open by
    dropping the facets xi exits through.  The half-open cells of any
    interior-disjoint filling partition the half-open simplex, so after
    dilating by d (where every half-open unimodular cell retains at
    least one lattice point) the surviving lattice points -- the
    witnesses -- are covered exactly once each.  Branching always picks
    the uncovered witness with the fewest usable cells, which keeps the
    search complete while pruning hard; candidate order makes the
    outcome deterministic.  All outcomes are values: exceeding the
    deterministic work budget reports "budget_exceeded" rather than
    raising.
    """
    d = s.dimension
    budget_state = _SearchBudget(budget)
    if d == 0:
        tri = Triangulation((s.lattice_vertices[0],), ((0,),), 0)
        return UnimodularSearchResult("found", tri, budget_state.visited)
    try:
        classified = enumerate_lattice_points(s, 1, budget)
    except BudgetExceeded as exc:
        return UnimodularSearchResult("budget_exceeded", None, exc.visited)
    enumerated = [c.point for c in classified]
    points = _ordered_points(s, enumerated)
    target = abs(edge_determinant(s))

    candidates: list[tuple[int, ...]] = []
    solvers: dict[tuple[int, ...], _Cell] = {}
    try:
        for cell in combinations(range(len(points)), d + 1):
            budget_state.spend()
            if abs(cell_edge_det(points, cell)) == 1:
                candidates.append(cell)
                solvers[cell] = _Cell(cell, points)
    except BudgetExceeded:
        return UnimodularSearchResult("budget_exceeded", None, budget_state.visited)

    simplex_solver = _Cell(tuple(range(d + 1)), points)
    normals = {tuple(row[1:]) for row in simplex_solver.nmat}
    for cell in candidates:
        normals.update(tuple(row[1:]) for row in solvers[cell].nmat)
    xi = _generic_direction(d, normals)

    remaining = None if budget is None else max(budget - budget_state.visited, 1)
    try:
        dilated = enumerate_lattice_points(s, d, remaining)
    except BudgetExceeded as exc:
        return UnimodularSearchResult(
            "budget_exceeded", None, budget_state.visited + exc.visited)

    def half_open(solver: _Cell, z: Point, dots: list[int]) -> bool:
        values = solver.values(z, d)
        return all(f > 0 or (f == 0 and g > 0) for f, g in zip(values, dots))

    simplex_dots = [sum(a * b for a, b in zip(row[1:], xi))
                    for row in simplex_solver.nmat]
    witnesses = [c.point for c in dilated
                 if half_open(simplex_solver, c.point, simplex_dots)]
    full = (1 << len(witnesses)) - 1

    masks: list[int] = []
    covering: list[list[int]] = [[] for _ in witnesses]
    try:
        for idx, cell in enumerate(candidates):
            solver = solvers[cell]
            dots = [sum(a * b for a, b in zip(row[1:], xi))
                    for row in solver.nmat]
            mask = 0
            for w, z in enumerate(witnesses):
                budget_state.spend()
                if any(z[r] < solver.lower[r] * d or z[r] > solver.upper[r] * d
                       for r in range(d)):
                    continue
                if half_open(solver, z, dots):
                    mask |= 1 << w
                    covering[w].append(idx)
            masks.append(mask)
    except BudgetExceeded:
        return UnimodularSearchResult("budget_exceeded", None, budget_state.visited)

    compat_cache: dict[tuple[int, int], bool] = {}

    def compatible(i: int, j: int) -> bool:
        key = (i, j) if i < j else (j, i)
        hit = compat_cache.get(key)
        if hit is None:
            budget_state.spend()
            hit = _cells_compatible(points, candidates[i], candidates[j], solvers)
            compat_cache[key] = hit
        return hit

    def search(chosen: list[int], covered: int) -> list[int] | None:
        if covered == full:
            return chosen if len(chosen) == target else None
        if len(chosen) >= target:
            return None
        budget_state.spend()
        best: list[int] | None = None
        for w in range(len(witnesses)):
            if covered >> w & 1:
                continue
            usable = [i for i in covering[w] if masks[i] & covered == 0]
            if not usable:
                return None
            if best is None or len(usable) < len(best):
                best = usable
                if len(best) == 1:
                    break
        assert best is not None
        for idx in best:
            if all(compatible(i, idx) for i in chosen):
                found = search(chosen + [idx], covered | masks[idx])
                if found is not None:
                    return found
        return None

    try:
        solution = search([], 0)
    except BudgetExceeded:
        return UnimodularSearchResult("budget_exceeded", None, budget_state.visited)
    if solution is None:
        return UnimodularSearchResult("none_exists", None, budget_state.visited)
    cells = tuple(sorted(candidates[i] for i in solution))
    tri = Triangulation(tuple(points), cells, d)
    return UnimodularSearchResult("found", tri, budget_state.visited)
