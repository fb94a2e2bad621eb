"""Orbit simplices and their exact volumes.

The points of a sorting orbit all lie on the hyperplane where coordinates
sum to n(n+1)/2, and they are always affinely independent: the orbit of a
permutation with sortability index k spans a k-simplex.  This script
builds a few orbit simplices and computes their Euclidean and relative
volumes exactly, as rational numbers.
"""

from stacksimplex import (
    affine_dimension,
    all_permutations,
    build_simplex,
    edge_determinant,
    euclidean_volume_squared,
    ln1_permutations,
    parallelepiped_gram_det,
    parse_permutation,
    relative_volume,
    sort_orbit,
)

# The orbit chain is the vertex set; its affine dimension always matches
# the sortability index.
for n in range(1, 6):
    for p in all_permutations(n):
        orbit = sort_orbit(p)
        assert affine_dimension([q.entries for q in orbit.chain]) == orbit.index
print("affine dimension == sortability index for every orbit up to n = 5")

# Euclidean volume lives in the ambient hyperplane; relative volume is
# normalized by the covolume of the hyperplane's integer lattice, whose
# fundamental parallelepiped has squared covolume n.
for n in range(2, 8):
    assert parallelepiped_gram_det(n) == n
print("hyperplane parallelepiped determinant equals n for n = 2..7")

orbit = sort_orbit(parse_permutation("231"))
s = build_simplex(orbit)
print(f"orbit of 231: dimension {s.dimension}")
print(f"  squared Euclidean volume = {euclidean_volume_squared(s)}  (area sqrt(3))")
print(f"  relative volume          = {relative_volume(s)}")
print(f"  edge determinant         = {edge_determinant(s)}")

# Permutations ending in (n, 1) give unimodular simplices: relative volume
# exactly 1, squared Euclidean volume exactly n.
for n in range(2, 7):
    for p in ln1_permutations(n):
        t = build_simplex(sort_orbit(p))
        assert relative_volume(t) == 1
        assert euclidean_volume_squared(t) == n
print("every (n,1)-orbit simplex is unimodular with squared volume n, n = 2..6")

# Not every orbit simplex is unimodular: the orbit of 1 2 5 4 3 has
# relative volume 2.
s2 = build_simplex(sort_orbit(parse_permutation("12543")))
print(f"orbit of 12543: dimension {s2.dimension}, relative volume {relative_volume(s2)}")
