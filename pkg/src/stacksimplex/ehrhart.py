"""Lattice point enumeration, Ehrhart polynomials, and h* data.

All computations happen in the lattice coordinates of a LatticeSimplex,
where "lattice point" means a point of Z^d.  Membership in the t-th
dilate is decided by exact scaled barycentric values: integer linear
forms f_i with f_i >= 0 exactly when barycentric coordinate i is
nonnegative and sum f_i = t * |det|.  Counting walks the integer
bounding box depth-first, narrowing each coordinate to an interval via
optimistic bounds on the remaining coordinates, so the final coordinate
is counted in one step instead of point by point.

Two independent routes to h* are provided: the binomial transform of
the dilate counts, and direct grading of the lattice points in the
half-open parallelepiped spanned by the cone generators (v_i, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .errors import BudgetExceeded, NegativeHStar, ZeroDimensional
from .exact import adjugate, hermite_normal_form, lagrange_coefficients, polyval
from .lattice import LatticeSimplex, simplex_from_points

__all__ = [
    "PointClassification",
    "EhrhartData",
    "PyramidComparison",
    "barycentric",
    "enumerate_lattice_points",
    "count_lattice_points",
    "count_interior_points",
    "ehrhart_polynomial",
    "h_star_from_counts",
    "h_star_box_points",
    "facet_opposite_identity",
    "compare_h_star_pyramid",
    "ehrhart_reciprocity_holds",
]


@dataclass(frozen=True)
class PointClassification:
    """A lattice point of a dilated simplex with its barycentric profile.

    ``barycentric`` is normalized to sum to 1 (coordinates relative to
    the dilate's vertices), in the simplex's vertex order.
    """

    point: tuple[int, ...]
    location: str  # "vertex" | "boundary" | "interior"
    barycentric: tuple[Fraction, ...]


@dataclass(frozen=True)
class EhrhartData:
    """Counts for t = 0..d, interpolated polynomial, and h* coefficients."""

    dimension: int
    counts: tuple[int, ...]
    polynomial: tuple[Fraction, ...]
    h_star: tuple[int, ...]


class _Budget:
    __slots__ = ("limit", "visited")

    def __init__(self, limit: int | None):
        self.limit = limit
        self.visited = 0

    def spend(self, amount: int) -> None:
        self.visited += amount
        if self.limit is not None and self.visited > self.limit:
            raise BudgetExceeded(self.limit, self.visited)


class _Solver:
    """Scaled barycentric forms of a simplex, cached per simplex.

    nmat @ (t, x) gives integers f_i with lambda_i = f_i / absdet; the
    f_i are nonnegative exactly on the t-th dilate and sum to t * absdet.
    """

    __slots__ = ("dimension", "vertices", "nmat", "absdet")

    def __init__(self, s: LatticeSimplex):
        d = s.dimension
        verts = s.lattice_vertices
        m = [[1] * (d + 1)]
        for r in range(d):
            m.append([verts[i][r] for i in range(d + 1)])
        adj, dt = adjugate(m)
        if dt < 0:
            adj = [[-v for v in row] for row in adj]
            dt = -dt
        self.dimension = d
        self.vertices = verts
        self.nmat = adj
        self.absdet = dt

    def values(self, point: Sequence[int], t: int) -> list[int]:
        y = (t, *point)
        return [sum(c * v for c, v in zip(row, y)) for row in self.nmat]


@lru_cache(maxsize=64)
def _solver(s: LatticeSimplex) -> _Solver:
    return _Solver(s)


def barycentric(
    s: LatticeSimplex, point: Sequence[int], t: int = 1
) -> tuple[Fraction, ...] | None:
    """Barycentric coordinates of a lattice point of the t-th dilate.

    Returns the unique (lambda_0, ..., lambda_d) with sum t and
    sum lambda_i * v_i = point, or None when the point lies outside the
    dilate (some coordinate would be negative).
    """
    if t < 1:
        raise ValueError("dilation factor must be a positive integer")
    solver = _solver(s)
    values = solver.values(tuple(point), t)
    if any(v < 0 for v in values):
        return None
    return tuple(Fraction(v, solver.absdet) for v in values)


def _scan_setup(solver: _Solver, t: int, threshold: int):
    d = solver.dimension
    n = solver.nmat
    verts = solver.vertices
    lo = [min(t * verts[i][j] for i in range(d + 1)) for j in range(d)]
    hi = [max(t * verts[i][j] for i in range(d + 1)) for j in range(d)]
    # optimistic contribution of coordinates after j, per constraint
    smax = [[0] * d for _ in range(d + 1)]
    for i in range(d + 1):
        acc = 0
        for j in range(d - 1, -1, -1):
            smax[i][j] = acc
            c = n[i][1 + j]
            acc += max(c * lo[j], c * hi[j])
    start = [n[i][0] * t for i in range(d + 1)]
    return lo, hi, smax, start


def _interval(solver: _Solver, partial: list[int], smax_row, j: int,
              lo_j: int, hi_j: int, threshold: int) -> tuple[int, int]:
    a, b = lo_j, hi_j
    n = solver.nmat
    for i in range(solver.dimension + 1):
        c = n[i][1 + j]
        slack = partial[i] + smax_row[i]
        if c == 0:
            if slack < threshold:
                return 1, 0
        elif c > 0:
            # c * x >= threshold - slack, so x >= ceil((threshold - slack) / c)
            need = threshold - slack
            bound = -((-need) // c)
            if bound > a:
                a = bound
        else:
            # c * x >= threshold - slack, so x <= floor((slack - threshold) / -c)
            bound = (slack - threshold) // (-c)
            if bound < b:
                b = bound
    return a, b


def _count(s: LatticeSimplex, t: int, threshold: int, budget: _Budget) -> int:
    solver = _solver(s)
    d = solver.dimension
    if d == 0:
        budget.spend(1)
        return 1 if t >= threshold else 0
    lo, hi, smax, start = _scan_setup(solver, t, threshold)
    n = solver.nmat

    def descend(j: int, partial: list[int]) -> int:
        budget.spend(1)
        smax_row = [smax[i][j] for i in range(d + 1)]
        a, b = _interval(solver, partial, smax_row, j, lo[j], hi[j], threshold)
        if a > b:
            return 0
        if j == d - 1:
            budget.spend(b - a + 1)
            return b - a + 1
        total = 0
        coef = [n[i][1 + j] for i in range(d + 1)]
        current = [p + c * a for p, c in zip(partial, coef)]
        for _ in range(a, b + 1):
            total += descend(j + 1, current)
            current = [p + c for p, c in zip(current, coef)]
        return total

    return descend(0, start)


def _leaves(s: LatticeSimplex, t: int, budget: _Budget) -> Iterator[
        tuple[tuple[int, ...], list[int]]]:
    solver = _solver(s)
    d = solver.dimension
    if d == 0:
        budget.spend(1)
        yield (), solver.values((), t)
        return
    lo, hi, smax, start = _scan_setup(solver, t, 0)
    n = solver.nmat

    def descend(j: int, prefix: tuple[int, ...], partial: list[int]):
        budget.spend(1)
        smax_row = [smax[i][j] for i in range(d + 1)]
        a, b = _interval(solver, partial, smax_row, j, lo[j], hi[j], 0)
        if a > b:
            return
        coef = [n[i][1 + j] for i in range(d + 1)]
        current = [p + c * a for p, c in zip(partial, coef)]
        for x in range(a, b + 1):
            if j == d - 1:
                budget.spend(1)
                yield prefix + (x,), current
            else:
                yield from descend(j + 1, prefix + (x,), current)
            current = [p + c for p, c in zip(current, coef)]

    yield from descend(0, (), start)


def count_lattice_points(s: LatticeSimplex, t: int = 1,
                         budget: int | None = None) -> int:
    """Number of lattice points in the t-th dilate."""
    if t < 1:
        raise ValueError("dilation factor must be a positive integer")
    return _count(s, t, 0, _Budget(budget))


def count_interior_points(s: LatticeSimplex, t: int = 1,
                          budget: int | None = None) -> int:
    """Lattice points of the t-th dilate with all barycentric coordinates > 0.

    This counts the relative interior, so it satisfies Ehrhart
    reciprocity against the polynomial evaluated at -t; in particular a
    0-simplex counts its single point.
    """
    if t < 1:
        raise ValueError("dilation factor must be a positive integer")
    return _count(s, t, 1, _Budget(budget))


def enumerate_lattice_points(s: LatticeSimplex, t: int = 1,
                             budget: int | None = None
                             ) -> list[PointClassification]:
    """Classified lattice points of the t-th dilate, in lexicographic order."""
    if t < 1:
        raise ValueError("dilation factor must be a positive integer")
    solver = _solver(s)
    scale = solver.absdet * t
    out = []
    for point, values in _leaves(s, t, _Budget(budget)):
        if any(v == scale for v in values):
            location = "vertex"
        elif all(v > 0 for v in values):
            location = "interior"
        else:
            location = "boundary"
        bary = tuple(Fraction(v, scale) for v in values)
        out.append(PointClassification(point, location, bary))
    return out


def _h_star_transform(counts: Sequence[int]) -> tuple[int, ...]:
    d = len(counts) - 1
    h = []
    for j in range(d + 1):
        value = sum(
            (-1) ** i * math.comb(d + 1, i) * counts[j - i] for i in range(j + 1)
        )
        if value < 0:
            raise NegativeHStar(f"h*_{j} = {value} is negative")
        h.append(value)
    return tuple(h)


def ehrhart_polynomial(s: LatticeSimplex, budget: int | None = None) -> EhrhartData:
    """Counts for t = 0..d, the interpolated polynomial, and h*.

    L(0) = 1 is the Euler characteristic normalization; the counts at
    t = 1..d pin the degree-d polynomial uniquely.
    """
    d = s.dimension
    counts = [1]
    for t in range(1, d + 1):
        counts.append(count_lattice_points(s, t, budget))
    coefficients = tuple(lagrange_coefficients(counts))
    return EhrhartData(d, tuple(counts), coefficients, _h_star_transform(counts))


def h_star_from_counts(data: EhrhartData) -> tuple[int, ...]:
    """h* coefficients via the binomial transform of the dilate counts."""
    if len(data.counts) != data.dimension + 1:
        raise ValueError("need counts for every t in 0..d")
    return _h_star_transform(data.counts)


def h_star_box_points(s: LatticeSimplex, budget: int | None = None
                      ) -> tuple[int, ...]:
    """h* by grading lattice points of the half-open cone parallelepiped.

    The cone over the simplex is generated by the rays r_i = (v_i, 1);
    the lattice points of {sum c_i r_i : 0 <= c_i < 1} graded by last
    coordinate are exactly the h* coefficients.  There is one such point
    per coset of the ray lattice, so the reps of Z^(d+1) modulo the rays
    (read off a Hermite normal form) are reduced into the box.
    """
    d = s.dimension
    if d == 0:
        return (1,)
    rays = [list(v) + [1] for v in s.lattice_vertices]
    hnf = hermite_normal_form(rays)
    diag = [hnf[i][i] for i in range(d + 1)]
    total = math.prod(diag)
    if budget is not None and total > budget:
        raise BudgetExceeded(budget, total)
    columns = [[rays[i][r] for i in range(d + 1)] for r in range(d + 1)]
    adj, dt = adjugate(columns)
    h = [0] * (d + 1)
    for rep in product(*(range(m) for m in diag)):
        floors = 0
        for i in range(d + 1):
            num = sum(adj[i][k] * rep[k] for k in range(d + 1))
            floors += Fraction(num, dt).__floor__()
        grade = rep[d] - floors
        h[grade] += 1
    assert h[0] == 1 and sum(h) == abs(dt)
    return tuple(h)


def facet_opposite_identity(s: LatticeSimplex) -> LatticeSimplex:
    """The facet spanned by all vertices except the last (the identity).

    The facet is re-coordinatized in its own span lattice, so its
    volume and h* data are intrinsic.
    """
    if s.dimension == 0:
        raise ZeroDimensional("a point has no facets")
    return simplex_from_points(s.ambient_vertices[:-1])


@dataclass(frozen=True)
class PyramidComparison:
    """h* of a simplex against the h* of its facet opposite the identity."""

    h_star: tuple[int, ...]
    facet_h_star: tuple[int, ...]
    equal: bool


def compare_h_star_pyramid(s: LatticeSimplex, budget: int | None = None
                           ) -> PyramidComparison:
    """Compare h*(s) with h*(facet) padded by one trailing zero.

    Equality is the signature of a pyramid of lattice height 1: the
    apex adds nothing to any graded slice of the cone's box.
    """
    own = h_star_box_points(s, budget)
    facet = h_star_box_points(facet_opposite_identity(s), budget) + (0,)
    return PyramidComparison(own, facet, own == facet)


def ehrhart_reciprocity_holds(s: LatticeSimplex, t: int,
                              budget: int | None = None) -> bool:
    """Check L_interior(t) == (-1)^d L(-t) for one dilation factor."""
    data = ehrhart_polynomial(s, budget)
    predicted = (-1) ** s.dimension * polyval(data.polynomial, -t)
    return predicted == count_interior_points(s, t, budget)
