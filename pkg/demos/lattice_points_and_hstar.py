"""Counting lattice points in orbit simplices, exactly.

An orbit simplex is a lattice polytope, so the number of integer points in
its t-th dilate is a polynomial in t.  This script enumerates and
classifies the points of small examples, interpolates the counting
polynomial, and computes the h* coefficients two independent ways.
"""

from stacksimplex import (
    build_simplex,
    compare_h_star_pyramid,
    count_interior_points,
    count_lattice_points,
    ehrhart_polynomial,
    enumerate_lattice_points,
    h_star_box_points,
    h_star_from_counts,
    max_lattice_point_bound,
    parse_permutation,
    sort_orbit,
    two_ln1_permutations,
)


def simplex_of(text):
    return build_simplex(sort_orbit(parse_permutation(text)))


# The orbit simplex of 2 3 1 is a triangle with one extra boundary point.
s = simplex_of("231")
for pc in enumerate_lattice_points(s, 1):
    print(f"point {pc.point}: {pc.location}, barycentric {pc.barycentric}")
print(f"total {count_lattice_points(s)}, interior {count_interior_points(s)}")

# Interpolating counts at t = 0, 1, 2 gives the counting polynomial; the
# binomial transform of those counts gives the h* coefficients.
data = ehrhart_polynomial(s)
print(f"counts {data.counts} -> polynomial {data.polynomial} -> h* {data.h_star}")

# The same h* vector also falls out of a completely different computation:
# counting lattice points in the half-open parallelepiped over the simplex,
# graded by height.  The two agree.
assert h_star_from_counts(data) == h_star_box_points(s) == (1, 1, 0)
print("h* cross-validated by box-point counting")

# Orbit simplices of permutations starting 2 and ending (n, 1) are hollow:
# every non-vertex lattice point sits on the facet opposite the identity.
for p in two_ln1_permutations(5):
    t = build_simplex(sort_orbit(p))
    points = enumerate_lattice_points(t, 1)
    assert all(pc.location != "interior" for pc in points)
    off_facet = [pc for pc in points if pc.location != "vertex" and pc.barycentric[-1] != 0]
    assert not off_facet
    comparison = compare_h_star_pyramid(t)
    print(f"{p}: {len(points)} points, hollow, pyramid h* equal = {comparison.equal}")

# The point count of an (n,1)-orbit never exceeds (n-1)! + (n-1).  The
# 9-element example below lands on 267 -- above 2^8, but well under the
# bound of 8! + 8.
flagship = simplex_of("234586791")
count = count_lattice_points(flagship)
print(f"orbit of 234586791: {count} lattice points (bound {max_lattice_point_bound(9)})")
