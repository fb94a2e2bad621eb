"""Stack-sorting orbits and how far a permutation is from sorted.

One stack-sorting pass pushes entries onto a stack that is kept strictly
decreasing, popping to the output whenever the next entry is larger than
the top.  Repeating the pass eventually reaches the identity; the number
of passes needed is the permutation's sortability index.  This script
walks a few orbits, then checks the suffix-decomposition bound that
predicts the index without running any passes.
"""

from stacksimplex import (
    all_permutations,
    parse_permutation,
    predicted_sortability_bound,
    sort_orbit,
    stack_sort_pass,
    suffix_decompose,
)

# A single pass: 2 3 1 becomes 2 1 3.  The 2 waits on the stack while the
# larger 3 flushes it; the 1 rides on top and pops first.
p = parse_permutation("231")
print(f"one pass: {p} -> {stack_sort_pass(p)}")

# The full orbit of 3 2 4 1 takes three passes.
for text in ["3241", "31452", "7541632"]:
    orbit = sort_orbit(parse_permutation(text))
    chain = "  ->  ".join(str(q) for q in orbit.chain)
    print(f"index {orbit.index}: {chain}")

# Peeling maximal ascending or descending suffixes off a permutation gives
# an upper bound on its index, and the decomposition reports when the bound
# is guaranteed to be tight.
p = parse_permutation("7541632")
for direction in ["ascending", "descending"]:
    d = suffix_decompose(p, direction)
    print(f"{direction} split of {p}: head={d.head} tail={d.tail} exact={d.exact}")
bound = predicted_sortability_bound(p)
print(f"predicted index of {p}: <= {bound.bound} (exact={bound.exact})")

# The bound is never violated, and whenever it is flagged exact it agrees
# with the true index.  Checking every permutation of 6 elements:
violations = 0
for q in all_permutations(6):
    b = predicted_sortability_bound(q)
    index = sort_orbit(q).index
    assert index <= b.bound
    if b.exact:
        assert index == b.bound
print("suffix bound verified across all 720 permutations of S_6")

# Permutations ending in (n, 1) are the slowest sorters: their index is
# exactly n - 1, and nothing else reaches it.
slowest = [str(q) for q in all_permutations(4) if sort_orbit(q).index == 3]
print(f"S_4 permutations needing 3 passes: {slowest}")
