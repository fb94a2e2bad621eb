"""Hyperplane lattice coordinates and exact simplex volumes.

Every permutation of {1, ..., n} lies on the hyperplane
x_1 + ... + x_n = 1 + 2 + ... + n.  The difference vectors
(1,-1,0,...,0), (0,1,-1,...,0), ... form a basis of that hyperplane's
integer point lattice: writing a point as identity + sum of multiples
of these, the coefficients are the prefix sums of (point - identity).
Orbit simplices are re-expressed in integer coordinates with respect to
the lattice of their affine span, so relative volumes, point counts and
h* data are exact integer computations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, NotOnHyperplane
from .exact import (
    coords_in_rowbasis,
    det,
    gram_det,
    rational_rank,
    saturation,
)
from .permutations import SortOrbit

__all__ = [
    "HyperplaneLattice",
    "LatticeSimplex",
    "to_lattice_coords",
    "from_lattice_coords",
    "affine_dimension",
    "span_lattice_basis",
    "parallelepiped_gram_det",
    "build_simplex",
    "simplex_from_points",
    "euclidean_volume_squared",
    "relative_volume",
    "edge_determinant",
    "span_covolume_squared",
]

Point = tuple[int, ...]


@dataclass(frozen=True)
class HyperplaneLattice:
    """Integer points of the hyperplane x_1 + ... + x_n = n(n+1)/2."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("hyperplane needs n >= 1")

    @property
    def level(self) -> int:
        return self.n * (self.n + 1) // 2

    def basis_vectors(self) -> tuple[Point, ...]:
        """The n-1 difference vectors spanning the hyperplane's lattice."""
        n = self.n
        out = []
        for j in range(n - 1):
            vec = [0] * n
            vec[j] = 1
            vec[j + 1] = -1
            out.append(tuple(vec))
        return tuple(out)


def to_lattice_coords(point: Sequence[int], lattice: HyperplaneLattice) -> Point:
    """Coordinates of point - identity in the difference-vector basis.

    These are the prefix sums of (point - identity); the last prefix sum
    is the coordinate-sum defect and must vanish, otherwise the point is
    off the hyperplane.
    """
    n = lattice.n
    if len(point) != n:
        raise NotOnHyperplane(f"point has {len(point)} coordinates, expected {n}")
    coords = []
    acc = 0
    for i, v in enumerate(point, start=1):
        acc += v - i
        coords.append(acc)
    if coords[-1] != 0:
        raise NotOnHyperplane(
            f"coordinate sum {sum(point)} differs from {lattice.level}"
        )
    return tuple(coords[:-1])


def from_lattice_coords(coords: Sequence[int], lattice: HyperplaneLattice) -> Point:
    """Inverse of to_lattice_coords: identity + sum of basis multiples."""
    n = lattice.n
    if len(coords) != n - 1:
        raise ValueError(f"expected {n - 1} coordinates, got {len(coords)}")
    point = list(range(1, n + 1))
    for j, c in enumerate(coords):
        point[j] += c
        point[j + 1] -= c
    return tuple(point)


def affine_dimension(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull: rank of differences from the first point."""
    if not points:
        raise ValueError("need at least one point")
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    if not diffs:
        return 0
    return rational_rank(diffs)


def span_lattice_basis(points: Sequence[Sequence[int]]) -> tuple[Point, ...]:
    """HNF basis of the saturated lattice of the affine span's directions.

    Saturation matters: difference vectors may generate a finite-index
    sublattice of all integer vectors in their rational span, and
    relative volume is defined against the full one.
    """
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    width = len(base)
    return tuple(tuple(row) for row in saturation(diffs, width))


def parallelepiped_gram_det(n: int) -> int:
    """Gram determinant of the difference-vector basis (equals n).

    This is the squared covolume of the hyperplane's point lattice
    inside the ambient Euclidean space.
    """
    if n < 2:
        raise ValueError("parallelepiped needs n >= 2")
    return gram_det(HyperplaneLattice(n).basis_vectors())


@dataclass(frozen=True)
class LatticeSimplex:
    """A simplex with vertices on a lattice, in two coordinate systems.

    ``ambient_vertices`` live in Z^n; ``lattice_vertices`` are the same
    points written in an integer basis of the saturated lattice of the
    affine span, with the last vertex as origin.  For simplices built
    from sorting orbits the last vertex is the identity permutation.
    ``span_basis`` holds the basis rows, so ambient = base + coords @ span_basis.
    """

    ambient_vertices: tuple[Point, ...]
    lattice_vertices: tuple[Point, ...]
    span_basis: tuple[Point, ...]

    @property
    def dimension(self) -> int:
        return len(self.ambient_vertices) - 1

    @property
    def base_point(self) -> Point:
        return self.ambient_vertices[-1]

    def to_ambient(self, coords: Sequence[int], t: int = 1) -> Point:
        """Ambient location of a lattice point of the t-th dilate."""
        out = [t * v for v in self.base_point]
        for c, row in zip(coords, self.span_basis):
            for i, v in enumerate(row):
                out[i] += c * v
        return tuple(out)


def build_simplex(orbit: SortOrbit) -> LatticeSimplex:
    """Simplex spanned by an orbit chain; vertices stay in chain order.

    The chain of a permutation with sortability index d is affinely
    independent, so the convex hull is a d-simplex; a disagreement
    between the chain's affine dimension and d would mean the hull
    degenerates, which never happens and is guarded here.
    """
    points = [p.entries for p in orbit.chain]
    n = orbit.chain[0].n
    d = orbit.index
    if affine_dimension(points) != d:
        raise DimensionMismatch(
            f"orbit of index {d} spans affine dimension {affine_dimension(points)}"
        )
    if d == n - 1:
        lattice = HyperplaneLattice(n)
        span = lattice.basis_vectors()
        lattice_vertices = tuple(to_lattice_coords(p, lattice) for p in points)
    else:
        span = span_lattice_basis(points)
        base = points[-1]
        lattice_vertices = []
        for p in points:
            diff = [a - b for a, b in zip(p, base)]
            coords = coords_in_rowbasis(span, diff)
            assert coords is not None and all(c.denominator == 1 for c in coords)
            lattice_vertices.append(tuple(c.numerator for c in coords))
        lattice_vertices = tuple(lattice_vertices)
    return LatticeSimplex(tuple(tuple(p) for p in points), lattice_vertices, span)


def simplex_from_points(points: Sequence[Sequence[int]]) -> LatticeSimplex:
    """Simplex on explicit integer points (last point becomes the origin).

    The points must be affinely independent.  Used for facets and for
    hand-built examples; orbit simplices should go through build_simplex.
    """
    d = affine_dimension(points)
    if len(points) != d + 1:
        raise DimensionMismatch(
            f"{len(points)} points span dimension {d}, not a simplex"
        )
    if d == 0:
        return LatticeSimplex((tuple(points[0]),), ((),), ())
    span = span_lattice_basis(points)
    base = points[-1]
    lattice_vertices = []
    for p in points:
        diff = [a - b for a, b in zip(p, base)]
        coords = coords_in_rowbasis(span, diff)
        assert coords is not None and all(c.denominator == 1 for c in coords)
        lattice_vertices.append(tuple(c.numerator for c in coords))
    return LatticeSimplex(
        tuple(tuple(p) for p in points), tuple(lattice_vertices), span
    )


def edge_determinant(s: LatticeSimplex) -> int:
    """Signed determinant of the lattice edge matrix (rows v_i - origin)."""
    d = s.dimension
    if d == 0:
        return 1
    return det([list(v) for v in s.lattice_vertices[:-1]])


def relative_volume(s: LatticeSimplex) -> Fraction:
    """Volume normalized so a fundamental lattice cell has volume 1."""
    d = s.dimension
    return Fraction(abs(edge_determinant(s)), math.factorial(d))


def euclidean_volume_squared(s: LatticeSimplex) -> Fraction:
    """Square of the Euclidean d-volume, via the Gram determinant of the edges."""
    d = s.dimension
    if d == 0:
        return Fraction(1)
    base = s.base_point
    edges = [[a - b for a, b in zip(v, base)] for v in s.ambient_vertices[:-1]]
    return Fraction(gram_det(edges), math.factorial(d) ** 2)


def span_covolume_squared(s: LatticeSimplex) -> int:
    """Gram determinant of the span basis (squared covolume of the span lattice)."""
    if s.dimension == 0:
        return 1
    return gram_det(s.span_basis)
