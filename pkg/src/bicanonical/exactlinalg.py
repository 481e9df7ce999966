"""Exact linear algebra over the integers and rationals.

Everything downstream (interpolation ranks, definiteness tests, function-field
lattice membership) reduces to three primitives: rank over Q by fraction-free
elimination, integer determinants, and membership of a vector in the Z-span of
a set of integer rows.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _clear_denominators(rows):
    """Scale each row to integers (row scaling does not change the rank)."""
    out = []
    for row in rows:
        denom = 1
        for x in row:
            if isinstance(x, Fraction):
                denom = denom * x.denominator // gcd(denom, x.denominator)
        out.append([int(x * denom) for x in row])
    return out


def exact_rank(rows) -> int:
    """Rank over Q of a matrix with integer or Fraction entries.

    Uses one-step fraction-free (Bareiss) elimination with column pivoting,
    so all intermediate values stay integral.
    """
    mat = _clear_denominators(rows)
    mat = [row for row in mat if row]
    if not mat:
        return 0
    n_rows, n_cols = len(mat), len(mat[0])
    prev = 1
    row = 0
    for col in range(n_cols):
        piv = next((r for r in range(row, n_rows) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        for r in range(row + 1, n_rows):
            for c in range(col + 1, n_cols):
                mat[r][c] = (mat[r][c] * mat[row][col] - mat[r][col] * mat[row][c]) // prev
            mat[r][col] = 0
        prev = mat[row][col]
        row += 1
        if row == n_rows:
            break
    return row


def integer_det(matrix) -> int:
    """Determinant of a square integer matrix, by Bareiss elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    mat = [list(map(int, row)) for row in matrix]
    if any(len(row) != n for row in mat):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            sign = -sign
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                mat[r][c] = (mat[r][c] * mat[col][col] - mat[r][col] * mat[col][c]) // prev
            mat[r][col] = 0
        prev = mat[col][col]
    return sign * prev


def leading_principal_minors(matrix) -> list[int]:
    """The determinants of the top-left k-by-k blocks, k = 1..n."""
    n = len(matrix)
    return [integer_det([row[: k + 1] for row in matrix[: k + 1]]) for k in range(n)]


def _xgcd(a: int, b: int):
    """Return (g, x, y) with g = gcd(a, b) = x*a + y*b and g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def integer_row_echelon(rows) -> list[list[int]]:
    """Echelon basis of the Z-row-lattice spanned by the given integer rows.

    Only unimodular row operations (extended-gcd combinations of row pairs)
    are used, so the returned rows span exactly the same integer lattice.
    Pivot columns are strictly increasing and pivots are positive.
    """
    work = [list(map(int, r)) for r in rows if any(r)]
    if not work:
        return []
    n_cols = len(work[0])
    echelon: list[list[int]] = []
    col = 0
    while work and col < n_cols:
        nz = [r for r in work if r[col] != 0]
        rest = [r for r in work if r[col] == 0]
        if not nz:
            col += 1
            continue
        pivot_row = nz[0]
        for other in nz[1:]:
            a, b = pivot_row[col], other[col]
            g, x, y = _xgcd(a, b)
            # the 2x2 matrix [[x, y], [-b//g, a//g]] has determinant 1
            combined = [x * u + y * v for u, v in zip(pivot_row, other)]
            cleared = [(-b // g) * u + (a // g) * v for u, v in zip(pivot_row, other)]
            pivot_row = combined
            if any(cleared):
                rest.append(cleared)
        if pivot_row[col] < 0:
            pivot_row = [-u for u in pivot_row]
        echelon.append(pivot_row)
        work = rest
        col += 1
    return echelon


def in_row_lattice(target, rows) -> bool:
    """Is `target` an integer combination of the given integer rows?"""
    echelon = integer_row_echelon(rows)
    t = list(map(int, target))
    if echelon and len(t) != len(echelon[0]):
        raise ValueError("target length does not match the generators")
    for row in echelon:
        col = next(i for i, v in enumerate(row) if v != 0)
        if t[col] % row[col] != 0:
            return False
        q = t[col] // row[col]
        t = [u - q * v for u, v in zip(t, row)]
    return not any(t)
