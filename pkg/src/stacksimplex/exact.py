"""Exact integer and rational linear algebra on small dense matrices.

Everything runs on Python's arbitrary-precision integers and
`fractions.Fraction`; nothing is ever rounded.  Matrices are lists of
row lists.  Row lattices are handled with unimodular row operations
built from the extended Euclidean algorithm, so integer spans are
preserved exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = [
    "det",
    "gram_det",
    "echelon_rows",
    "hermite_normal_form",
    "rational_rank",
    "orthogonal_lattice",
    "saturation",
    "coords_in_rowbasis",
    "adjugate",
    "lagrange_coefficients",
    "polyval",
    "lp_maximize",
]

Matrix = Sequence[Sequence[int]]


def det(matrix: Matrix) -> int:
    """Determinant of a square integer matrix, by fraction-free elimination.

    Intermediate divisions in the Bareiss recurrence are exact, so the
    result is an honest integer with no rounding anywhere.
    """
    m = [list(row) for row in matrix]
    k = len(m)
    if k == 0:
        return 1
    if any(len(row) != k for row in m):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for i in range(k - 1):
        if m[i][i] == 0:
            for r in range(i + 1, k):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
            m[r][i] = 0
        prev = m[i][i]
    return sign * m[k - 1][k - 1]


def gram_det(rows: Matrix) -> int:
    """det(G) for the Gram matrix G[i][j] = rows[i] . rows[j]."""
    gram = [[sum(a * b for a, b in zip(u, v)) for v in rows] for u in rows]
    return det(gram)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    # returns (g, x, y) with x*a + y*b == g == gcd(a, b), g >= 0
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _first_nonzero(vec: list[int]) -> int:
    for j, v in enumerate(vec):
        if v:
            return j
    return -1


def echelon_rows(rows: Matrix) -> list[list[int]]:
    """Echelon basis of the integer row lattice, via unimodular operations.

    Rows come back ordered by pivot column; the integer span is exactly
    that of the input rows.
    """
    basis: list[list[int]] = []
    pivots: list[int] = []
    for row in rows:
        vec = list(row)
        while True:
            j = _first_nonzero(vec)
            if j < 0:
                break
            # find the basis row owning pivot column j, if any
            pos = None
            for i, p in enumerate(pivots):
                if p == j:
                    pos = i
                    break
            if pos is None:
                insert_at = sum(1 for p in pivots if p < j)
                basis.insert(insert_at, vec)
                pivots.insert(insert_at, j)
                break
            a, b = basis[pos][j], vec[j]
            if b % a == 0:
                q = b // a
                vec = [v - q * u for u, v in zip(basis[pos], vec)]
            else:
                g, x, y = _xgcd(a, b)
                u, v = basis[pos], vec
                combined = [x * ui + y * vi for ui, vi in zip(u, v)]
                reduced = [(a // g) * vi - (b // g) * ui for ui, vi in zip(u, v)]
                basis[pos] = combined
                vec = reduced
    return basis


def hermite_normal_form(rows: Matrix) -> list[list[int]]:
    """Canonical row basis: echelon, positive pivots, entries above reduced mod pivot."""
    basis = [list(r) for r in echelon_rows(rows)]
    pivots = [_first_nonzero(r) for r in basis]
    for i, (row, p) in enumerate(zip(basis, pivots)):
        if row[p] < 0:
            basis[i] = [-v for v in row]
    for i in range(len(basis)):
        p = pivots[i]
        piv = basis[i][p]
        for k in range(i):
            q = basis[k][p] // piv
            if q:
                basis[k] = [a - q * b for a, b in zip(basis[k], basis[i])]
    return basis


def rational_rank(rows: Matrix) -> int:
    """Rank over the rationals (= number of echelon rows)."""
    return len(echelon_rows(rows))


def orthogonal_lattice(rows: Matrix, width: int) -> list[list[int]]:
    """Basis of {z in Z^width : z . r = 0 for every input row r}.

    Found by reducing the block [M^T | I]: basis rows whose left block
    vanished record the integer combinations that kill every dot
    product.
    """
    m = len(rows)
    augmented = []
    for i in range(width):
        left = [rows[j][i] for j in range(m)]
        right = [1 if k == i else 0 for k in range(width)]
        augmented.append(left + right)
    reduced = echelon_rows(augmented)
    return [r[m:] for r in reduced if all(v == 0 for v in r[:m])]


def saturation(rows: Matrix, width: int) -> list[list[int]]:
    """HNF basis of (rational span of rows) intersected with Z^width.

    Computed as the orthogonal lattice of the orthogonal lattice, which
    is automatically saturated.
    """
    perp = orthogonal_lattice(rows, width)
    return hermite_normal_form(orthogonal_lattice(perp, width))


def coords_in_rowbasis(basis: Matrix, vector: Sequence[int]) -> list[Fraction] | None:
    """Coordinates of vector in an echelon row basis, or None if outside the span."""
    residual = [Fraction(v) for v in vector]
    coords = []
    for row in basis:
        p = _first_nonzero(list(row))
        c = residual[p] / row[p]
        coords.append(c)
        residual = [r - c * v for r, v in zip(residual, row)]
    if any(residual):
        return None
    return coords


def adjugate(matrix: Matrix) -> tuple[list[list[int]], int]:
    """(adj, det) with adj @ matrix = det * identity; matrix must be nonsingular."""
    d = det(matrix)
    if d == 0:
        raise ValueError("adjugate of a singular matrix")
    k = len(matrix)
    work = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(k)]
            for i, row in enumerate(matrix)]
    for col in range(k):
        pivot_row = next(r for r in range(col, k) if work[r][col] != 0)
        work[col], work[pivot_row] = work[pivot_row], work[col]
        piv = work[col][col]
        work[col] = [v / piv for v in work[col]]
        for r in range(k):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
    adj = []
    for i in range(k):
        row = []
        for j in range(k):
            v = d * work[i][k + j]
            if v.denominator != 1:
                raise AssertionError("adjugate entries must be integers")
            row.append(v.numerator)
        adj.append(row)
    return adj, d


def lagrange_coefficients(values: Sequence[Fraction | int]) -> list[Fraction]:
    """Coefficients (constant first) of the polynomial with p(i) = values[i]."""
    k = len(values) - 1
    coeffs = [Fraction(0)] * (k + 1)
    for i in range(k + 1):
        basis = [Fraction(1)]
        denom = 1
        for j in range(k + 1):
            if j == i:
                continue
            # multiply basis polynomial by (x - j)
            shifted = [Fraction(0)] + basis
            basis = [s - j * b for s, b in zip(shifted, basis + [Fraction(0)])]
            denom *= i - j
        scale = Fraction(values[i], denom)
        for t, b in enumerate(basis):
            coeffs[t] += scale * b
    return coeffs


def polyval(coeffs: Sequence[Fraction | int], x: int | Fraction) -> Fraction:
    """Evaluate a constant-first coefficient list exactly."""
    acc = Fraction(0)
    for c in reversed(list(coeffs)):
        acc = acc * x + c
    return acc


def _pivot(tableau: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tableau[row][col]
    tableau[row] = [v / piv for v in tableau[row]]
    for r in range(len(tableau)):
        if r != row and tableau[r][col]:
            f = tableau[r][col]
            tableau[r] = [a - f * b for a, b in zip(tableau[r], tableau[row])]
    basis[row] = col


def _simplex_phase(tableau: list[list[Fraction]], basis: list[int],
                   cost: list[Fraction]) -> Fraction:
    # maximize cost . x over the tableau's feasible region, Bland's rule
    m = len(tableau)
    while True:
        # reduced costs
        reduced = list(cost)
        offset = Fraction(0)
        for r in range(m):
            cb = cost[basis[r]]
            if cb:
                offset += cb * tableau[r][-1]
                for j in range(len(reduced)):
                    reduced[j] -= cb * tableau[r][j]
        entering = -1
        for j in range(len(reduced)):
            if reduced[j] > 0:
                entering = j
                break
        if entering < 0:
            return offset
        leaving = -1
        best = None
        for r in range(m):
            a = tableau[r][entering]
            if a > 0:
                ratio = tableau[r][-1] / a
                if best is None or ratio < best or (
                        ratio == best and basis[r] < basis[leaving]):
                    best = ratio
                    leaving = r
        if leaving < 0:
            raise ValueError("linear program is unbounded")
        _pivot(tableau, basis, leaving, entering)


def lp_maximize(a_rows: Sequence[Sequence[int | Fraction]],
                b: Sequence[int | Fraction],
                c: Sequence[int | Fraction]) -> Fraction | None:
    """Maximize c.x subject to a_rows @ x == b, x >= 0, exactly.

    Returns the optimum as a Fraction, or None when infeasible.  The
    two phases both use Bland's rule, so termination is guaranteed.
    """
    m = len(a_rows)
    n = len(c)
    rows = []
    rhs = []
    for row, bv in zip(a_rows, b):
        r = [Fraction(v) for v in row]
        bv = Fraction(bv)
        if bv < 0:
            r = [-v for v in r]
            bv = -bv
        rows.append(r)
        rhs.append(bv)
    # phase 1: artificial variables form the starting basis
    tableau = []
    for i in range(m):
        art = [Fraction(int(j == i)) for j in range(m)]
        tableau.append(rows[i] + art + [rhs[i]])
    basis = [n + i for i in range(m)]
    phase1_cost = [Fraction(0)] * n + [Fraction(-1)] * m
    value = _simplex_phase(tableau, basis, phase1_cost)
    if value < 0:
        return None
    # drive leftover artificials out of the basis, or drop their rows
    for r in range(m - 1, -1, -1):
        if basis[r] >= n:
            col = next((j for j in range(n) if tableau[r][j] != 0), None)
            if col is None:
                del tableau[r]
                del basis[r]
            else:
                _pivot(tableau, basis, r, col)
    tableau = [row[:n] + [row[-1]] for row in tableau]
    phase2_cost = [Fraction(v) for v in c]
    return _simplex_phase(tableau, basis, phase2_cost)
