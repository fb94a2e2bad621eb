"""Registry of exhaustively checkable claims about orbit simplices.

Each claim takes a single n and checks every relevant permutation,
returning the first counterexample (in lexicographic order) or None.
Sizes below a claim's minimum n pass vacuously, so ranges like 2..6 can
be applied uniformly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ehrhart import (
    compare_h_star_pyramid,
    count_interior_points,
    enumerate_lattice_points,
)
from .lattice import (
    affine_dimension,
    build_simplex,
    euclidean_volume_squared,
    parallelepiped_gram_det,
    relative_volume,
)
from .permutations import (
    all_permutations,
    fixed_suffix_length,
    ln1_permutations,
    sort_orbit,
    stack_sort_pass,
    two_ln1_permutations,
)
from .triangulation import max_lattice_point_bound

__all__ = ["ClaimResult", "claim_names", "run_claim"]


@dataclass(frozen=True)
class ClaimResult:
    name: str
    n: int
    passed: bool
    counterexample: str | None


def _claim_simplex_theorem(n: int) -> str | None:
    # the orbit chain spans a simplex whose dimension is the sortability index
    for p in all_permutations(n):
        orbit = sort_orbit(p)
        points = [q.entries for q in orbit.chain]
        if affine_dimension(points) != orbit.index:
            return str(p)
    return None


def _claim_ln1_volume(n: int) -> str | None:
    # simplices of permutations ending n, 1 have EVol = sqrt(n), relvol = 1
    if n < 2:
        return None
    for p in ln1_permutations(n):
        s = build_simplex(sort_orbit(p))
        if euclidean_volume_squared(s) != Fraction(n):
            return str(p)
        if relative_volume(s) != 1:
            return str(p)
    return None


def _claim_parallelepiped_det(n: int) -> str | None:
    if n < 2:
        return None
    if parallelepiped_gram_det(n) != n:
        return f"n={n}"
    return None


def _claim_2ln1_hollow(n: int) -> str | None:
    # begins-2, ends-n,1 simplices are hollow: no interior points, and
    # every non-vertex lattice point lies on the facet opposite the
    # identity, with ambient first coordinate 1 or 2
    if n < 3:
        return None
    for p in two_ln1_permutations(n):
        s = build_simplex(sort_orbit(p))
        if count_interior_points(s, 1) != 0:
            return str(p)
        for c in enumerate_lattice_points(s, 1):
            first = s.to_ambient(c.point)[0]
            if first not in (1, 2):
                return f"{p} point {c.point}"
            if c.location != "vertex" and c.barycentric[-1] != 0:
                return f"{p} point {c.point}"
    return None


def _claim_2ln1_hstar(n: int) -> str | None:
    # h* of a begins-2, ends-n,1 simplex equals its facet's, zero-padded
    if n < 3:
        return None
    for p in two_ln1_permutations(n):
        if not compare_h_star_pyramid(build_simplex(sort_orbit(p))).equal:
            return str(p)
    return None


def _claim_point_bound(n: int) -> str | None:
    # ends-n,1 simplices hold at most (n-1)! + (n-1) lattice points
    if n < 2:
        return None
    bound = max_lattice_point_bound(n)
    for p in ln1_permutations(n):
        s = build_simplex(sort_orbit(p))
        if len(enumerate_lattice_points(s, 1)) > bound:
            return str(p)
    return None


def _claim_fixed_suffix(n: int) -> str | None:
    # a sorting pass strictly grows the fixed suffix of any non-identity
    for p in all_permutations(n):
        if p.is_identity():
            continue
        if fixed_suffix_length(stack_sort_pass(p)) < fixed_suffix_length(p) + 1:
            return str(p)
    return None


def _claim_trailing_zeros(n: int) -> str | None:
    # for p ending n, 1: s^k(p) - identity ends with -n+k+1 followed by
    # exactly k zeros, for 0 <= k <= n-2
    if n < 2:
        return None
    for p in ln1_permutations(n):
        chain = sort_orbit(p).chain
        for k in range(n - 1):
            diff = [v - i for i, v in enumerate(chain[k].entries, start=1)]
            if any(diff[n - k:]) or diff[n - 1 - k] != -n + k + 1:
                return f"{p} k={k}"
    return None


_CLAIMS = {
    "simplex-theorem": _claim_simplex_theorem,
    "ln1-volume": _claim_ln1_volume,
    "parallelepiped-det": _claim_parallelepiped_det,
    "2ln1-hollow": _claim_2ln1_hollow,
    "2ln1-hstar": _claim_2ln1_hstar,
    "point-bound": _claim_point_bound,
    "fixed-suffix": _claim_fixed_suffix,
    "trailing-zeros": _claim_trailing_zeros,
}


def claim_names() -> tuple[str, ...]:
    return tuple(_CLAIMS)


def run_claim(name: str, n: int) -> ClaimResult:
    if name not in _CLAIMS:
        raise KeyError(f"unknown claim {name!r}")
    counterexample = _CLAIMS[name](n)
    return ClaimResult(name, n, counterexample is None, counterexample)
