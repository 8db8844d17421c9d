"""Small exact-arithmetic helpers for dense rational matrices.

Matrices are tuples of tuples of Fractions; everything here is pure.  The
determinant clears denominators row by row and runs fraction-free Bareiss
elimination over the integers (with row swaps), which keeps intermediate
entries as single minors instead of products of pivots.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

Matrix = tuple[tuple[Fraction, ...], ...]


def identity(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
    )


def shift_matrix(n: int) -> Matrix:
    """The matrix with ones on the supradiagonal and zeros elsewhere."""
    return tuple(
        tuple(Fraction(1 if j == i + 1 else 0) for j in range(n)) for i in range(n)
    )


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_pow(m: Matrix, n: int) -> Matrix:
    out = identity(len(m))
    for _ in range(n):
        out = mat_mul(out, m)
    return out


def unit_lower_inverse(a: Matrix) -> Matrix:
    """Inverse of a unit-lower-triangular matrix by forward substitution."""
    n = len(a)
    inv = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        inv[j][j] = Fraction(1)
        for i in range(j + 1, n):
            inv[i][j] = -sum(a[i][k] * inv[k][j] for k in range(j, i))
    return tuple(tuple(row) for row in inv)


def upper_inverse(b: Matrix) -> Matrix:
    """Inverse of an upper-triangular matrix with nonzero diagonal."""
    n = len(b)
    inv = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        inv[j][j] = 1 / b[j][j]
        for i in range(j - 1, -1, -1):
            inv[i][j] = -sum(b[i][k] * inv[k][j] for k in range(i + 1, j + 1)) / b[i][i]
    return tuple(tuple(row) for row in inv)


def det(m) -> Fraction:
    """Exact determinant of a square rational matrix."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    rows = []
    for row in m:
        mult = lcm(*(c.denominator for c in row)) if row else 1
        scale *= mult
        rows.append([int(c * mult) for c in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = pivot
    return Fraction(sign * rows[n - 1][n - 1], 1) / scale


def leading_minor(m, size: int) -> Fraction:
    """Determinant of the leading principal block; size 0 gives 1."""
    return det([row[:size] for row in m[:size]])


def deleted_minor(m, size: int, del_row: int, del_col: int) -> Fraction:
    """Determinant of the size-by-size leading block with one row and one
    column removed (1-based labels, matching the usual minor notation)."""
    sub = [
        [m[i][j] for j in range(size) if j != del_col - 1]
        for i in range(size)
        if i != del_row - 1
    ]
    return det(sub)
