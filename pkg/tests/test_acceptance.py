"""Acceptance suite: every criterion at its stated tolerance.

Each test prints one PASS/FAIL line (run with -s to see them on success).
All comparisons are exact rational equality unless a numeric tolerance is
part of the criterion itself.
"""

import time
import warnings
from fractions import Fraction as F
from math import comb

import pytest

from mopfact import (
    CustomMoments,
    JacobiPineiro,
    LaguerreFirstKind,
    MomentMatrixSet,
    NoBidiagonalFactorisation,
    PathWeightOracle,
    alphas_from_lu,
    assemble,
    closed_form_alphas,
    cyclic_product,
    euler_gauss,
    generalised_sr,
    hessenberg_from_lu,
    jp_alpha_bcf,
    jp_alpha_type1,
    laguerre_alpha,
    modified_sr,
    moment,
    production_check,
    sr_polynomial,
)
from mopfact.gaussborel import lu_alpha_forms, minor_alpha_forms
from mopfact.hessenberg import (
    char_poly_check,
    factor_window,
    gamma_coverage,
    gamma_expand,
    polynomials,
    verify_orthogonality,
)

warnings.filterwarnings("ignore", category=UserWarning)

PARAMETER_SETS = {
    1: [
        JacobiPineiro(a=(F(0),), b=F(0)),
        JacobiPineiro(a=(F(1, 2),), b=F(1, 3)),
        JacobiPineiro(a=(F(-1, 4),), b=F(3, 2)),
        LaguerreFirstKind(a=(F(0),)),
        LaguerreFirstKind(a=(F(2, 3),)),
    ],
    2: [
        JacobiPineiro(a=(F(1, 3), F(1, 2)), b=F(1, 4)),
        JacobiPineiro(a=(F(-1, 3), F(1, 5)), b=F(1)),
        JacobiPineiro(a=(F(1, 7), F(5, 7)), b=F(-1, 2)),
        LaguerreFirstKind(a=(F(1, 2), F(1, 3))),
        LaguerreFirstKind(a=(F(1, 5), F(3, 4))),
    ],
    3: [
        JacobiPineiro(a=(F(1, 5), F(1, 3), F(1, 2)), b=F(1, 7)),
        JacobiPineiro(a=(F(-1, 2), F(-1, 5), F(1, 5)), b=F(2)),
        JacobiPineiro(a=(F(1, 11), F(2, 11), F(8, 11)), b=F(5, 3)),
        LaguerreFirstKind(a=(F(1, 5), F(2, 7), F(3, 11))),
        LaguerreFirstKind(a=(F(-1, 2), F(1, 4), F(1, 3))),
    ],
}


def _report(number: int, ok: bool, detail: str):
    print(f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {number} failed: {detail}"


def test_criterion_1_cross_method_exactness():
    started = time.time()
    count = 30
    checked = 0
    for r, specs in PARAMETER_SETS.items():
        for spec in specs:
            mset = MomentMatrixSet.for_count(spec, count)
            b_ratios, a_diffs = lu_alpha_forms(mset, count)
            m_ratios, m_diffs = minor_alpha_forms(mset, count)
            ladder = list(euler_gauss(spec, count).values)
            closed = list(closed_form_alphas(spec, count).values)
            for other in (a_diffs, m_ratios, m_diffs, ladder, closed):
                assert other == b_ratios, (r, spec)
            checked += 1
    elapsed = time.time() - started
    _report(
        1,
        checked == 15 and elapsed < 120,
        f"6 methods identical on alpha_0..alpha_30 for {checked} systems "
        f"(r in {{1,2,3}}, 5 sets each) in {elapsed:.1f}s",
    )


def test_criterion_2_formula_family_equivalence():
    points = 0
    for r, specs in PARAMETER_SETS.items():
        for spec in specs:
            if not isinstance(spec, JacobiPineiro):
                continue
            for m in range(5):
                for k in range(r):
                    for i in range(r + 1):
                        n = (r + 1) * (r * m + k) + i
                        assert jp_alpha_bcf(spec, n) == jp_alpha_type1(spec, n), (spec, n)
                        points += 1
    _report(2, points >= 200, f"both printed families equal at {points} grid points")


def test_criterion_3_production_matrix_identity():
    cells = 0
    for r in (1, 2, 3):
        spec = PARAMETER_SETS[r][0]
        size = (r + 1) * 4 + 1
        alphas = closed_form_alphas(spec, (r + 1) * (size - 1) + r)
        report = production_check(alphas, r, 4, 4)
        assert report.ok, r
        cells += len(report.cells)
    # the figure value: the three closed 2-paths of length 6
    probe = closed_form_alphas(PARAMETER_SETS[2][0], 8)
    a0, a1, a2 = probe[0], probe[1], probe[2]
    oracle = PathWeightOracle(r=2, alphas=probe)
    fig = sr_polynomial(oracle, 2) == a0 * a0 + a0 * a1 + a0 * a2
    _report(
        3,
        cells == 75 and fig,
        f"(H^n)[0,k] = path sums on {cells} cells (n,k <= 4, r <= 3), "
        "incl. the three-path value for r=2, n=2",
    )


def test_criterion_4_moment_reconstruction():
    checked = 0
    for r, specs in PARAMETER_SETS.items():
        for spec in specs:
            alphas = euler_gauss(spec, (r + 1) * 6)
            oracle = PathWeightOracle(r=r, alphas=alphas)
            for j in range(1, r + 1):
                for n in range(5):
                    assert moment(spec, j, n) == modified_sr(oracle, n, j - 1), (spec, j, n)
                    checked += 1
    _report(4, checked == 150, f"<v_j, x^n> equals the tail-path sum at {checked} points")


def test_criterion_5_orthogonality_and_characteristic_polynomials():
    systems = 0
    for r, specs in PARAMETER_SETS.items():
        for spec in (specs[0], specs[3]):  # one beta-weight, one exponential
            size = 6 + r + 1  # keeps the product exact through column 6
            count = max(gamma_coverage(5, r), (r + 1) * (size - 1) + r)
            alphas = euler_gauss(spec, count)
            table = polynomials(gamma_expand(alphas, r, 5), 6)
            report = verify_orthogonality(table, spec)
            assert report.ok, (spec, report.failures[:3])
            factors = assemble(alphas, r, size)
            for n in range(7):
                assert char_poly_check(factors, table, n), (spec, n)
            systems += 1
    _report(
        5,
        systems == 6,
        "P_0..P_6 satisfy all step-line orthogonality conditions and "
        f"P_n = det(xI - H_n) on {systems} systems",
    )


def test_criterion_6_counterexample_detection(symmetric):
    indices = []
    with pytest.raises(NoBidiagonalFactorisation) as lu_info:
        alphas_from_lu(MomentMatrixSet.for_count(symmetric, 4), 4)
    indices.append(lu_info.value.index)
    with pytest.raises(NoBidiagonalFactorisation) as eg_info:
        euler_gauss(symmetric, 4)
    indices.append(eg_info.value.index)
    _report(
        6,
        indices == [0, 0],
        "symmetric moments abort with a vanishing alpha_0 on the LU and "
        "series routes alike",
    )


def test_criterion_7_cyclic_darboux_factorisations():
    checked = 0
    for r in (1, 2):
        for spec in (PARAMETER_SETS[r][0], PARAMETER_SETS[r][3]):
            count = 24
            mset = MomentMatrixSet.for_count(spec, count)
            alphas = alphas_from_lu(mset, count)
            size = factor_window(count, r)
            factors = assemble(alphas, r, size)
            for j in range(r + 1):
                h_lu = hessenberg_from_lu(mset.lus[j], r)
                h_prod = cyclic_product(factors, j)
                window = min(len(h_lu), size - r)
                assert window >= 4
                for i in range(window):
                    for jj in range(window):
                        assert h_lu[i][jj] == h_prod[i][jj], (spec, j, i, jj)
                checked += 1
    _report(
        7,
        checked == 10,
        f"H^[j] from the shifted LU equals the cyclic product for {checked} (system, j) pairs",
    )


def test_criterion_8_known_recurrences():
    legendre = JacobiPineiro(a=(F(0),), b=F(0))
    bands = gamma_expand(euler_gauss(legendre, 13), 1, 5)
    leg_ok = (
        all(bands.gamma(n, 0) == F(1, 2) for n in range(6))
        and bands.gamma(0, 1) == F(1, 12)
        and bands.gamma(1, 1) == F(1, 15)
    )
    laguerre = LaguerreFirstKind(a=(F(0),))
    lbands = gamma_expand(closed_form_alphas(laguerre, 13), 1, 5)
    lag_ok = all(
        lbands.gamma(n, 0) == 2 * n + 1 and lbands.gamma(n, 1) == (n + 1) ** 2
        for n in range(6)
    )
    _report(
        8,
        leg_ok and lag_ok,
        "unit-weight bands are the monic shifted-Legendre recurrence and "
        "a=0 exponential bands are the monic Laguerre recurrence",
    )


def test_criterion_9_asymptotics():
    started = time.time()
    ok = True
    details = []
    for r in (1, 2):
        spec = PARAMETER_SETS[r][0]
        scaled = float(jp_alpha_bcf(spec, 50) * (r + 1) ** (r + 1) / F(r**r))
        details.append(f"r={r}: |alpha_50 scaled - 1| = {abs(scaled - 1):.4f}")
        ok = ok and abs(scaled - 1) < 0.05
    for r, a in ((1, (F(0),)), (2, (F(1, 2), F(1, 3)))):
        spec = LaguerreFirstKind(a=a)
        scaled = float(laguerre_alpha(spec, 100) * r * (r + 1) / 100)
        details.append(f"laguerre r={r}: alpha_100 scaled = {scaled:.3f}")
        ok = ok and 0.9 <= scaled <= 1.1
    elapsed = time.time() - started
    _report(9, ok and elapsed < 30, "; ".join(details) + f" ({elapsed:.1f}s)")


def test_criterion_10_laguerre_as_limit():
    big = F(10**6)
    worst = F(0)
    for a in ((F(0),), (F(1, 2), F(1, 3))):
        laguerre = LaguerreFirstKind(a=a)
        jacobi = JacobiPineiro(a=a, b=big)
        for n in range(13):
            approx = big * jp_alpha_bcf(jacobi, n)
            exact = laguerre_alpha(laguerre, n)
            worst = max(worst, abs(approx / exact - 1))
    _report(
        10,
        worst < F(1, 10_000),
        f"b*alpha_n at b=10^6 matches the exponential-family value to "
        f"relative {float(worst):.2e} for n <= 12, r in {{1,2}}",
    )
