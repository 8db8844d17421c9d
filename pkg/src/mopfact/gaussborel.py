"""Truncated LU factorisation of shifted moment matrices and the two
determinant-free / determinant-based coefficient extractions.

Because pivot-free LU respects leading principal blocks, the factors of an
N x N truncation agree entrywise with the factors of the infinite matrix, so
every value read below stays within a proven-valid window:

  alpha_{(r+1)n}   = b^[r]_{n,n}   / b^[0]_{n,n} = a^[0]_{n+1,n} - a^[r]_{n,n-1}
  alpha_{(r+1)n+i} = b^[i-1]_{n+1,n+1} / b^[i]_{n,n} = a^[i]_{n+1,n} - a^[i-1]_{n+1,n}

with a^[r]_{0,-1} = 0.  Both forms are always computed and compared exactly.

A vanishing b^[j]_{n,n} is equivalent to a vanishing leading minor of the
shifted system j, and it always surfaces first as a zero *numerator* when the
coefficients are scanned in index order; the scan therefore reports the exact
index at which the bidiagonal factorisation fails, matching the series-based
method.  Eliminations run "as far as valid" for that purpose; a complete
factorisation with a zero pivot is an error only where one is required.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .alphas import AlphaSequence
from .errors import InternalInconsistency, NoBidiagonalFactorisation, SingularLeadingMinor
from .matrices import (
    Matrix,
    deleted_minor,
    leading_minor,
    mat_mul,
    mat_pow,
    shift_matrix,
    transpose,
    unit_lower_inverse,
    upper_inverse,
)
from .parallel import parallel_map
from .systems import ShiftedSystem, StripedMomentMatrix, SystemSpec, build_moment_matrix


@dataclass(frozen=True)
class LUPair:
    """Exact Doolittle factors: A unit-lower, B upper with nonzero diagonal."""

    a: Matrix
    b: Matrix

    @property
    def size(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class _PartialLU:
    """Elimination state carried as far as the pivots stay nonzero.

    b rows 0..rows_known-1 are exact; a columns 0..cols_known-1 are exact
    (for every row).  When complete is False the last known pivot is zero.
    """

    a: Matrix
    b: Matrix
    rows_known: int
    cols_known: int
    complete: bool

    def pivot(self, n: int) -> Fraction:
        if n >= self.rows_known:
            raise InternalInconsistency(
                f"pivot {n} requested but elimination stopped after {self.rows_known} rows"
            )
        return self.b[n][n]

    def lower(self, row: int, col: int) -> Fraction:
        if col >= self.cols_known:
            raise InternalInconsistency(
                f"a[{row},{col}] requested but only {self.cols_known} columns are valid"
            )
        return self.a[row][col]


def _eliminate(entries) -> _PartialLU:
    n = len(entries)
    a = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    b = [[Fraction(0)] * n for _ in range(n)]
    for s in range(n):
        for k in range(s, n):
            b[s][k] = entries[s][k] - sum(a[s][t] * b[t][k] for t in range(s))
        if b[s][s] == 0:
            return _PartialLU(
                tuple(tuple(row) for row in a),
                tuple(tuple(row) for row in b),
                rows_known=s + 1,
                cols_known=s,
                complete=False,
            )
        for i in range(s + 1, n):
            a[i][s] = (entries[i][s] - sum(a[i][t] * b[t][s] for t in range(s))) / b[s][s]
    return _PartialLU(
        tuple(tuple(row) for row in a),
        tuple(tuple(row) for row in b),
        rows_known=n,
        cols_known=n,
        complete=True,
    )


def lu_factorise(matrix: StripedMomentMatrix | Matrix) -> LUPair:
    """Complete Gauss-Borel factorisation; fails on the first zero minor."""
    entries = matrix.entries if isinstance(matrix, StripedMomentMatrix) else matrix
    shift = matrix.source.j if isinstance(matrix, StripedMomentMatrix) else None
    partial = _eliminate(entries)
    if not partial.complete:
        raise SingularLeadingMinor(partial.rows_known, shift)
    return LUPair(partial.a, partial.b)


def window_size(count: int, r: int) -> int:
    """Truncation size N guaranteeing alpha_0 .. alpha_count are in-window."""
    if count < 0:
        raise ValueError("coefficient count must be a natural number")
    return max(2, -((count - r) // -(r + 1)) + 2)


def valid_alpha_count(size: int, r: int) -> int:
    """Largest K for which an N-truncation proves alpha_0 .. alpha_K."""
    return (r + 1) * (size - 2) + r


@dataclass(frozen=True)
class MomentMatrixSet:
    """The r+1 shifted moment matrices of one system, with their eliminations."""

    base: SystemSpec
    size: int
    matrices: tuple[StripedMomentMatrix, ...]
    partials: tuple[_PartialLU, ...]

    @classmethod
    def build(cls, spec: SystemSpec, size: int) -> "MomentMatrixSet":
        def one(j: int):
            matrix = build_moment_matrix(ShiftedSystem(spec, j), size)
            return matrix, _eliminate(matrix.entries)

        pairs = parallel_map(one, range(spec.r + 1))
        return cls(
            base=spec,
            size=size,
            matrices=tuple(p[0] for p in pairs),
            partials=tuple(p[1] for p in pairs),
        )

    @classmethod
    def for_count(cls, spec: SystemSpec, count: int) -> "MomentMatrixSet":
        return cls.build(spec, window_size(count, spec.r))

    @property
    def r(self) -> int:
        return self.base.r

    @property
    def lus(self) -> tuple[LUPair, ...]:
        """All r+1 complete factorisations; fails if any system degenerates."""
        out = []
        for j, partial in enumerate(self.partials):
            if not partial.complete:
                raise SingularLeadingMinor(partial.rows_known, j)
            out.append(LUPair(partial.a, partial.b))
        return tuple(out)

    def max_count(self) -> int:
        return valid_alpha_count(self.size, self.r)


def _resolve_count(mset: MomentMatrixSet, count: int | None) -> int:
    top = mset.max_count()
    if count is None:
        return top
    if count > top:
        raise ValueError(f"count {count} exceeds the valid window {top} for size {mset.size}")
    return count


def lu_alpha_forms(
    mset: MomentMatrixSet, count: int | None = None
) -> tuple[list[Fraction], list[Fraction]]:
    """The b-ratio and a-difference forms, scanned in index order."""
    r = mset.r
    top = _resolve_count(mset, count)
    ratios: list[Fraction] = []
    diffs: list[Fraction] = []
    for idx in range(top + 1):
        n, i = divmod(idx, r + 1)
        if i == 0:
            num = mset.partials[r].pivot(n)
            if num == 0:
                raise NoBidiagonalFactorisation(idx)
            ratio = num / mset.partials[0].pivot(n)
            diff = mset.partials[0].lower(n + 1, n)
            if n >= 1:
                diff -= mset.partials[r].lower(n, n - 1)
        else:
            num = mset.partials[i - 1].pivot(n + 1)
            if num == 0:
                raise NoBidiagonalFactorisation(idx)
            ratio = num / mset.partials[i].pivot(n)
            diff = mset.partials[i].lower(n + 1, n) - mset.partials[i - 1].lower(n + 1, n)
        if ratio != diff:
            raise InternalInconsistency(
                f"b-ratio {ratio} and a-difference {diff} disagree at index {idx}"
            )
        ratios.append(ratio)
        diffs.append(diff)
    return ratios, diffs


def alphas_from_lu(mset: MomentMatrixSet, count: int | None = None) -> AlphaSequence:
    ratios, _ = lu_alpha_forms(mset, count)
    return AlphaSequence(tuple(ratios), "gauss-borel", len(ratios) - 1)


def minor_alpha_forms(
    mset: MomentMatrixSet, count: int | None = None
) -> tuple[list[Fraction], list[Fraction]]:
    """The determinant-ratio and deleted-minor-difference forms."""
    r = mset.r
    top = _resolve_count(mset, count)
    grids = [m.entries for m in mset.matrices]
    minors: dict[tuple[int, int], Fraction] = {}

    def delta(j: int, n: int) -> Fraction:
        if (j, n) not in minors:
            minors[(j, n)] = leading_minor(grids[j], n)
        return minors[(j, n)]

    def subdiag(j: int, m: int) -> Fraction:
        # a^[j]_{m,m-1} as a ratio of minors, m >= 1.
        den = delta(j, m)
        if den == 0:
            raise InternalInconsistency(f"denominator minor Delta^[{j}]_{m} is zero")
        return deleted_minor(grids[j], m + 1, m, m + 1) / den

    ratios: list[Fraction] = []
    diffs: list[Fraction] = []
    for idx in range(top + 1):
        n, i = divmod(idx, r + 1)
        if i == 0:
            num = delta(r, n + 1) * delta(0, n)
            if num == 0:
                raise NoBidiagonalFactorisation(idx)
            den = delta(r, n) * delta(0, n + 1)
            if den == 0:
                raise InternalInconsistency(f"denominator minors vanish at index {idx}")
            ratio = num / den
            diff = subdiag(0, n + 1)
            if n >= 1:
                diff -= subdiag(r, n)
        else:
            num = delta(i - 1, n + 2) * delta(i, n)
            if num == 0:
                raise NoBidiagonalFactorisation(idx)
            den = delta(i - 1, n + 1) * delta(i, n + 1)
            if den == 0:
                raise InternalInconsistency(f"denominator minors vanish at index {idx}")
            ratio = num / den
            diff = subdiag(i, n + 1) - subdiag(i - 1, n + 1)
        if ratio != diff:
            raise InternalInconsistency(
                f"minor ratio {ratio} and minor difference {diff} disagree at index {idx}"
            )
        ratios.append(ratio)
        diffs.append(diff)
    return ratios, diffs


def alphas_from_minors(mset: MomentMatrixSet, count: int | None = None) -> AlphaSequence:
    ratios, _ = minor_alpha_forms(mset, count)
    return AlphaSequence(tuple(ratios), "minors", len(ratios) - 1)


def hessenberg_from_lu(lu: LUPair, r: int) -> Matrix:
    """The (N-1)x(N-1) truncation of the recurrence matrix A^{-1} Lambda A.

    The alternative form B (Lambda^T)^r B^{-1} is evaluated as well and the
    two are required to agree entrywise on the window where the truncated
    products are provably exact.
    """
    size = lu.size
    if size < 2:
        raise ValueError("need at least a 2x2 factorisation")
    lam = shift_matrix(size)
    via_a = mat_mul(mat_mul(unit_lower_inverse(lu.a), lam), lu.a)
    h = tuple(tuple(row[: size - 1]) for row in via_a[: size - 1])
    for i in range(size - 1):
        for j in range(size - 1):
            if j == i + 1 and h[i][j] != 1:
                raise InternalInconsistency(f"supradiagonal entry ({i},{j}) is {h[i][j]}")
            if (j > i + 1 or i - j > r) and h[i][j] != 0:
                raise InternalInconsistency(f"entry ({i},{j}) outside the band is {h[i][j]}")
    via_b = mat_mul(mat_mul(lu.b, mat_pow(transpose(lam), r)), upper_inverse(lu.b))
    for i in range(size - 1 - r):
        for j in range(size - 1 - r):
            if h[i][j] != via_b[i][j]:
                raise InternalInconsistency(
                    f"A- and B-route recurrence matrices disagree at ({i},{j})"
                )
    return h
