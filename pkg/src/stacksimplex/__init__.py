"""Exact discrete geometry of stack-sorting orbits.

Iterating the classic stack-sorting pass on a permutation yields a
chain of permutations ending at the identity.  Viewed as points of
R^n, the chain spans a simplex whose dimension equals the number of
passes needed.  This package computes those orbits and simplices in
exact arithmetic: Euclidean and lattice-relative volumes, lattice point
counts and classifications, Ehrhart polynomials and h* vectors,
hollowness, and (unimodular) triangulations, plus a CLI for reports,
S_n sweeps, and exhaustive claim verification.
"""

__version__ = "0.1.0"

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    EmptyPermutation,
    MalformedToken,
    NegativeHStar,
    NotABijection,
    NotOnHyperplane,
    PointOutside,
    TooShort,
    ZeroDimensional,
)
from .permutations import (
    Permutation,
    SortOrbit,
    SortabilityBound,
    SuffixDecomposition,
    all_permutations,
    fixed_suffix_length,
    identity,
    is_2ln1,
    is_ln1,
    ln1_permutations,
    parse_permutation,
    predicted_sortability_bound,
    sort_orbit,
    sortability_index,
    stack_sort_pass,
    suffix_decompose,
    two_ln1_permutations,
)
from .lattice import (
    HyperplaneLattice,
    LatticeSimplex,
    affine_dimension,
    build_simplex,
    edge_determinant,
    euclidean_volume_squared,
    from_lattice_coords,
    parallelepiped_gram_det,
    relative_volume,
    simplex_from_points,
    span_covolume_squared,
    span_lattice_basis,
    to_lattice_coords,
)
from .ehrhart import (
    EhrhartData,
    PointClassification,
    PyramidComparison,
    barycentric,
    compare_h_star_pyramid,
    count_interior_points,
    count_lattice_points,
    ehrhart_polynomial,
    ehrhart_reciprocity_holds,
    enumerate_lattice_points,
    facet_opposite_identity,
    h_star_box_points,
    h_star_from_counts,
)
from .triangulation import (
    Triangulation,
    UnimodularSearchResult,
    is_unimodular,
    max_lattice_point_bound,
    placing_triangulation,
    simplices_interiors_intersect,
    triangulation_volume,
    unimodular_triangulation_search,
)
from .analysis import (
    AnalysisOptions,
    AnalysisReport,
    SweepSummary,
    analyze_permutation,
    sweep,
)
from .claims import ClaimResult, claim_names, run_claim
