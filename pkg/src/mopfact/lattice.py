"""Brute-force lattice-path oracle and the production-matrix check.

Paths live in the upper half-plane and use rise steps (1,1) of weight one and
fall steps (1,-r); a fall landing at height i carries weight alpha_i.  The
generating polynomials of closed, partial, and tail-elevated path families
are computed by exhaustive depth-first enumeration with memoisation on
(steps remaining, height); nothing here shares code with the series or LU
routes, which is the point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .alphas import AlphaSequence
from .hessenberg import assemble, factor_product
from .matrices import mat_mul


@dataclass(frozen=True)
class PathWeightOracle:
    r: int
    alphas: AlphaSequence

    def weight_sum(self, steps: int, start: int, end: int) -> Fraction:
        """Total weight of paths with the given step count and endpoints."""
        memo: dict[tuple[int, int], Fraction] = {}

        def walk(left: int, h: int) -> Fraction:
            if left == 0:
                return Fraction(1 if h == end else 0)
            key = (left, h)
            if key not in memo:
                total = walk(left - 1, h + 1)
                if h - self.r >= 0:
                    total += self.alphas[h - self.r] * walk(left - 1, h - self.r)
                memo[key] = total
            return memo[key]

        return walk(steps, start)


def sr_polynomial(oracle: PathWeightOracle, n: int) -> Fraction:
    """Weight sum over closed paths of length (r+1)n."""
    return oracle.weight_sum((oracle.r + 1) * n, 0, 0)


def generalised_sr(oracle: PathWeightOracle, n: int, k: int) -> Fraction:
    """Weight sum over partial paths from (0,0) to ((r+1)n, (r+1)k)."""
    return oracle.weight_sum((oracle.r + 1) * n, 0, (oracle.r + 1) * k)


def modified_sr(oracle: PathWeightOracle, n: int, j: int) -> Fraction:
    """Weight sum over partial paths from (0,0) to ((r+1)n + j, j)."""
    return oracle.weight_sum((oracle.r + 1) * n + j, 0, j)


@dataclass(frozen=True)
class ProductionCell:
    n: int
    k: int
    matrix_power: Fraction
    path_sum: Fraction

    @property
    def ok(self) -> bool:
        return self.matrix_power == self.path_sum


@dataclass(frozen=True)
class ProductionReport:
    cells: tuple[ProductionCell, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cells)


def production_check(
    alphas: AlphaSequence, r: int, n_max: int, k_max: int
) -> ProductionReport:
    """Compare (H^n)_{0,k} against the path enumeration, cell by cell.

    H is rebuilt from the coefficients; the truncation is sized so that no
    matrix power ever touches a row or column polluted by truncation.
    """
    size = max((r + 1) * n_max + 1, k_max + 1)
    h = factor_product(assemble(alphas, r, size))
    oracle = PathWeightOracle(r=r, alphas=alphas)
    cells = []
    power = tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(size)) for i in range(size)
    )
    for n in range(n_max + 1):
        for k in range(k_max + 1):
            cells.append(
                ProductionCell(
                    n=n,
                    k=k,
                    matrix_power=power[0][k],
                    path_sum=generalised_sr(oracle, n, k),
                )
            )
        power = mat_mul(power, h)
    return ProductionReport(tuple(cells))
