"""Triangulating orbit simplices with their own lattice points.

A lattice simplex can be subdivided into smaller lattice simplices using
only the lattice points it already contains.  The placing triangulation
inserts points one at a time; an exhaustive search decides whether a
triangulation into unimodular cells (relative volume 1/d! each) exists at
all.  Both computations are exact.
"""

from stacksimplex import (
    build_simplex,
    enumerate_lattice_points,
    is_unimodular,
    parse_permutation,
    placing_triangulation,
    relative_volume,
    sort_orbit,
    triangulation_volume,
    unimodular_triangulation_search,
)


def simplex_of(text):
    return build_simplex(sort_orbit(parse_permutation(text)))


# The triangle of 2 3 1 has one non-vertex point, so placing splits it
# into two cells.  Volume is conserved exactly.
s = simplex_of("231")
points = [pc.point for pc in enumerate_lattice_points(s, 1)]
tri = placing_triangulation(s, points)
print(f"orbit of 231: points {tri.points}")
print(f"  cells {tri.cells}")
print(f"  volume {triangulation_volume(tri)} == relative volume {relative_volume(s)}")
print(f"  unimodular: {is_unimodular(tri)}")

# The search finds a unimodular triangulation of the orbit simplex of
# 2 3 4 5 1 -- a 4-simplex of relative volume 24 that splits into 24
# unimodular cells.
s = simplex_of("23451")
result = unimodular_triangulation_search(s)
print(f"orbit of 23451: search status {result.status!r}, "
      f"{len(result.triangulation.cells)} cells, {result.nodes} nodes explored")
assert is_unimodular(result.triangulation)
assert triangulation_volume(result.triangulation) == relative_volume(s)

# For the orbit of 3 4 2 5 1 the same search exhausts every combination of
# candidate cells and proves that no unimodular triangulation exists.
s = simplex_of("34251")
result = unimodular_triangulation_search(s, budget=200_000_000)
print(f"orbit of 34251: search status {result.status!r} after {result.nodes} nodes")

# A tight budget is reported rather than silently ignored.
result = unimodular_triangulation_search(simplex_of("23451"), budget=50)
print(f"budget 50: status {result.status!r}")
