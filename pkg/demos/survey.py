"""Surveying every permutation of a symmetric group at once.

The analysis layer bundles the whole pipeline -- orbit, simplex, volumes,
lattice points, h*, triangulation -- into one report per permutation, and
the sweep runs it across all of S_n with aggregate statistics.
"""

from stacksimplex import AnalysisOptions, analyze_permutation, parse_permutation, sweep

# A single report collects everything about one permutation.
report = analyze_permutation(parse_permutation("3241"))
print(f"permutation {report.permutation}")
print(f"  index {report.index}, dimension {report.dimension}")
print(f"  relative volume {report.relative_volume}")
print(f"  squared Euclidean volume {report.euclidean_volume_squared}")
print(f"  lattice points {report.lattice_points_t1}, hollow {report.hollow}")
print(f"  h* {report.h_star}")
print(f"  point bound satisfied: {report.bound_ok}")

# Sweeping S_4: the index histogram counts how many permutations need each
# number of passes, and the extremal records show which orbits are largest.
summary, reports = sweep(4)
print(f"\nS_4 sweep: {summary.total} permutations")
print(f"  index histogram {summary.index_histogram}")
print(f"  max lattice points {summary.max_lattice_points} "
      f"attained by {summary.max_lattice_points_argmax}")
print(f"  max relative volume {summary.max_relative_volume} "
      f"attained by {summary.max_relative_volume_argmax}")

# Restricting to the permutations ending in (n, 1) -- the maximal-index
# family -- or further to those also starting with 2.
for selection in ["Ln1", "2Ln1"]:
    summary, reports = sweep(5, selection=selection)
    rows = [r.permutation for r in reports]
    print(f"\nselection {selection!r} in S_5: {rows}")

# Stages can be disabled and budgets set when only part of the pipeline is
# needed; a sweep with triangulation off is much faster at larger n.
options = AnalysisOptions(hstar=False, triangulation=False)
summary, _ = sweep(6, options=options)
print(f"\nS_6 orbit statistics only: histogram {summary.index_histogram}")
