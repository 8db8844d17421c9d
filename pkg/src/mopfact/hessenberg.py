"""Bidiagonal factors, recurrence bands, and the generated polynomials.

The upper factor U carries alpha_0, alpha_{r+1}, alpha_{2(r+1)}, ... on its
diagonal with a unit supradiagonal; the lower factor L_k carries
alpha_k, alpha_{r+1+k}, ... on its subdiagonal with a unit diagonal.  Their
product L_1 ... L_r U is the unit-lower-Hessenberg recurrence matrix, whose
band entries expand as

    gamma_n^[k] = sum over r >= l_0 > ... > l_k >= 0 of
                  prod_{i=0..k} alpha_{(r+1)(n+i)+l_i-r}

with alpha_m = 0 for m < 0; the sum has binom(r+1, k+1) summands before the
zero-index truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .alphas import AlphaSequence
from .errors import AlphaIndexOutOfRange, InternalInconsistency
from .matrices import Matrix, mat_mul
from .systems import SystemSpec, moment

Poly = tuple[Fraction, ...]


@dataclass(frozen=True)
class BidiagonalFactors:
    r: int
    size: int
    lowers: tuple[Matrix, ...]
    upper: Matrix


def factor_window(valid_through: int, r: int) -> int:
    """Largest factor size m whose entries all lie within the alpha window."""
    return (valid_through - r) // (r + 1) + 1


def gamma_coverage(n_max: int, r: int) -> int:
    """Largest alpha index the band expansion can touch for n <= n_max."""
    return (r + 1) * (n_max + r) - r


def assemble(alphas: AlphaSequence, r: int, size: int) -> BidiagonalFactors:
    """Build U and L_1 .. L_r at the given truncation size."""
    need = (r + 1) * (size - 1) + r
    if need > alphas.valid_through:
        raise AlphaIndexOutOfRange(need, alphas.valid_through)
    upper = tuple(
        tuple(
            alphas[(r + 1) * i] if j == i else Fraction(1) if j == i + 1 else Fraction(0)
            for j in range(size)
        )
        for i in range(size)
    )
    lowers = []
    for k in range(1, r + 1):
        lowers.append(
            tuple(
                tuple(
                    Fraction(1)
                    if j == i
                    else alphas[(r + 1) * j + k]
                    if j == i - 1
                    else Fraction(0)
                    for j in range(size)
                )
                for i in range(size)
            )
        )
    return BidiagonalFactors(r=r, size=size, lowers=tuple(lowers), upper=upper)


def factor_product(factors: BidiagonalFactors) -> Matrix:
    """The recurrence matrix L_1 ... L_r U."""
    out = factors.lowers[0] if factors.lowers else factors.upper
    for m in factors.lowers[1:]:
        out = mat_mul(out, m)
    if factors.lowers:
        out = mat_mul(out, factors.upper)
    return out


def cyclic_product(factors: BidiagonalFactors, j: int) -> Matrix:
    """The shifted-system recurrence matrix L_{j+1} ... L_r U L_1 ... L_j."""
    if not 0 <= j <= factors.r:
        raise ValueError(f"shift {j} outside [0, {factors.r}]")
    order = list(factors.lowers[j:]) + [factors.upper] + list(factors.lowers[:j])
    out = order[0]
    for m in order[1:]:
        out = mat_mul(out, m)
    return out


@dataclass(frozen=True)
class HessenbergBands:
    """The band entries gamma_n^[k], 0 <= k <= r, 0 <= n <= n_max."""

    r: int
    n_max: int
    gammas: tuple[tuple[Fraction, ...], ...]  # gammas[k][n]

    def gamma(self, n: int, k: int) -> Fraction:
        return self.gammas[k][n]


def gamma_expand(alphas: AlphaSequence, r: int, n_max: int) -> HessenbergBands:
    rows = []
    for k in range(r + 1):
        row = []
        for n in range(n_max + 1):
            total = Fraction(0)
            for combo in combinations(range(r + 1), k + 1):
                ells = tuple(reversed(combo))  # l_0 > l_1 > ... > l_k
                term = Fraction(1)
                for i, ell in enumerate(ells):
                    idx = (r + 1) * (n + i) + ell - r
                    if idx < 0:
                        term = Fraction(0)
                        break
                    term *= alphas[idx]
                total += term
            row.append(total)
        rows.append(tuple(row))
    bands = HessenbergBands(r=r, n_max=n_max, gammas=tuple(rows))
    for n in range(n_max + 1):
        if bands.gamma(n, r) == 0:
            raise InternalInconsistency(
                f"gamma_{n}^[{r}] = 0 although every alpha factor is nonzero"
            )
    return bands


def bands_matrix(bands: HessenbergBands, size: int) -> Matrix:
    """Dense truncation of the recurrence matrix rebuilt from the bands."""
    if size - 1 > bands.n_max + 0:
        raise ValueError(f"bands cover n <= {bands.n_max}, need {size - 1}")
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            if j == i + 1:
                row.append(Fraction(1))
            elif 0 <= i - j <= bands.r:
                row.append(bands.gamma(j, i - j))
            else:
                row.append(Fraction(0))
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class PolynomialTable:
    """Monic polynomials P_0 .. P_m as ascending coefficient tuples."""

    polys: tuple[Poly, ...]

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, n: int) -> Poly:
        return self.polys[n]


def polynomials(bands: HessenbergBands, m: int) -> PolynomialTable:
    """Run P_{n+1} = x P_n - sum_k gamma_{n-k}^[k] P_{n-k} up to degree m."""
    table: list[Poly] = [(Fraction(1),)]
    for n in range(m):
        nxt = [Fraction(0)] + list(table[n])
        for k in range(min(bands.r, n) + 1):
            coeff = bands.gamma(n - k, k)
            prev = table[n - k]
            for t, c in enumerate(prev):
                nxt[t] -= coeff * c
        table.append(tuple(nxt))
    return PolynomialTable(tuple(table))


def _apply(spec: SystemSpec, j: int, power: int, poly: Poly) -> Fraction:
    """<v_j, x^power * P> evaluated through the moment table."""
    return sum(c * moment(spec, j, power + t) for t, c in enumerate(poly))


@dataclass(frozen=True)
class OrthogonalityReport:
    checked: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_orthogonality(polys: PolynomialTable, spec: SystemSpec) -> OrthogonalityReport:
    """Check the step-line conditions: <v_j, x^k P_n> = 0 for n >= rk+j and
    <v_j, x^k P_n> != 0 for n = rk+j-1."""
    r = spec.r
    checked = 0
    failures: list[str] = []
    for n in range(len(polys)):
        poly = polys[n]
        for j in range(1, r + 1):
            k = 0
            while r * k + j <= n:
                checked += 1
                val = _apply(spec, j, k, poly)
                if val != 0:
                    failures.append(f"<v_{j}, x^{k} P_{n}> = {val}, expected 0")
                k += 1
            if r * k + j == n + 1:
                checked += 1
                val = _apply(spec, j, k, poly)
                if val == 0:
                    failures.append(f"<v_{j}, x^{k} P_{n}> = 0, expected nonzero")
    return OrthogonalityReport(checked=checked, failures=tuple(failures))


def char_poly(h: Matrix, n: int) -> Poly:
    """det(x I_n - H_n) by expansion along the last column.

    The unit supradiagonal makes the expansion a band recurrence: each last
    column holds only the diagonal entry and a -1 above it, so the minors
    reduce to lower-order characteristic polynomials, costing O(n r) overall.
    """
    dets: list[Poly] = [(Fraction(1),)]
    for s in range(n):
        cur = [Fraction(0)] + list(dets[s])  # x * D_s
        for t, c in enumerate(dets[s]):
            cur[t] -= h[s][s] * c
        for k in range(1, s + 1):
            if h[s][s - k] == 0:
                continue
            for t, c in enumerate(dets[s - k]):
                cur[t] -= h[s][s - k] * c
        dets.append(tuple(cur))
    return dets[n]


def char_poly_check(factors: BidiagonalFactors, polys: PolynomialTable, n: int) -> bool:
    """Does P_n equal the characteristic polynomial of the n x n truncation
    of L_1 ... L_r U?"""
    if n > factors.size:
        raise ValueError(f"factors truncated at {factors.size}, need {n}")
    h = factor_product(factors)
    return char_poly(h, n) == polys[n]
