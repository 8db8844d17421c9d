from fractions import Fraction as F
from math import comb

import pytest

from mopfact.alphas import AlphaSequence
from mopfact.closedforms import closed_form_alphas
from mopfact.errors import AlphaIndexOutOfRange
from mopfact.eulergauss import euler_gauss
from mopfact.gaussborel import MomentMatrixSet, alphas_from_lu, hessenberg_from_lu
from mopfact.hessenberg import (
    assemble,
    bands_matrix,
    char_poly,
    char_poly_check,
    cyclic_product,
    factor_product,
    factor_window,
    gamma_coverage,
    gamma_expand,
    polynomials,
    verify_orthogonality,
)


def test_assemble_placement_r1():
    alphas = AlphaSequence.from_values([F(1, 2), F(1, 6), F(1, 3), F(1, 5)])
    factors = assemble(alphas, 1, 2)
    assert factors.lowers[0][1][0] == F(1, 6)
    assert factors.upper[0][0] == F(1, 2)
    assert factors.upper[1][1] == F(1, 3)
    assert factors.upper[0][1] == 1


def test_assemble_requires_coverage():
    alphas = AlphaSequence.from_values([F(1), F(2)])
    with pytest.raises(AlphaIndexOutOfRange):
        assemble(alphas, 1, 2)


def test_product_is_unit_hessenberg(jp2):
    alphas = euler_gauss(jp2, 17)
    h = factor_product(assemble(alphas, 2, factor_window(17, 2)))
    size = len(h)
    for i in range(size):
        for j in range(size):
            if j == i + 1:
                assert h[i][j] == 1
            elif j > i + 1:
                assert h[i][j] == 0


def test_product_entry_matches_gamma_r2(jp2):
    alphas = euler_gauss(jp2, 20)
    h = factor_product(assemble(alphas, 2, 5))
    bands = gamma_expand(alphas, 2, 2)
    assert h[2][0] == bands.gamma(0, 2)
    assert h[2][0] == alphas[0] * alphas[2] * alphas[4]


def test_gamma_first_entry_is_alpha0(jp2):
    alphas = euler_gauss(jp2, 10)
    bands = gamma_expand(alphas, 2, 0)
    assert bands.gamma(0, 0) == alphas[0]


def test_gamma_legendre_bands(legendre):
    alphas = euler_gauss(legendre, 9)
    bands = gamma_expand(alphas, 1, 3)
    assert bands.gamma(1, 0) == alphas[1] + alphas[2] == F(1, 2)
    assert bands.gamma(0, 1) == F(1, 12)
    assert bands.gamma(1, 1) == F(1, 15)


def test_gamma_laguerre_classical_recurrence(laguerre1):
    alphas = closed_form_alphas(laguerre1, 13)
    bands = gamma_expand(alphas, 1, 5)
    for n in range(6):
        assert bands.gamma(n, 0) == 2 * n + 1
        assert bands.gamma(n, 1) == (n + 1) ** 2


def test_gamma_summand_count():
    # Generic positive weights: every summand survives for n >= r, so the
    # count of contributing monomials is binom(r+1, k+1).
    for r in (1, 2, 3):
        alphas = AlphaSequence.from_values([F(p) for p in range(2, 2 + 9 * (r + 1))])
        bands = gamma_expand(alphas, r, r + 1)
        for k in range(r + 1):
            assert len(list(_summands(alphas, r, r, k))) == comb(r + 1, k + 1)
            total = sum(_summands(alphas, r, r, k))
            assert bands.gamma(r, k) == total


def _summands(alphas, r, n, k):
    from itertools import combinations

    for combo in combinations(range(r + 1), k + 1):
        ells = tuple(reversed(combo))
        term = F(1)
        for i, ell in enumerate(ells):
            idx = (r + 1) * (n + i) + ell - r
            term *= alphas[idx] if idx >= 0 else 0
        yield term


def test_bands_match_factor_product(jp2, laguerre2):
    size = 8
    count = max(gamma_coverage(size - 1, 2), (3 * (size - 1)) + 2)
    for spec in (jp2, laguerre2):
        alphas = euler_gauss(spec, count)
        h = factor_product(assemble(alphas, 2, size))
        dense = bands_matrix(gamma_expand(alphas, 2, size - 1), size)
        # the truncated product is exact away from the last r columns
        for i in range(size):
            for j in range(size - 2):
                assert h[i][j] == dense[i][j]


def test_polynomials_legendre(legendre):
    alphas = euler_gauss(legendre, 9)
    table = polynomials(gamma_expand(alphas, 1, 3), 4)
    assert table[0] == (F(1),)
    assert table[1] == (F(-1, 2), F(1))
    assert table[2] == (F(1, 6), F(-1), F(1))
    for n in range(5):
        poly = table[n] if n < len(table) else None
        if poly:
            assert poly[-1] == 1
            assert len(poly) == n + 1


def test_orthogonality_reports(legendre, jp2):
    for spec, count in ((legendre, 13), (jp2, 20)):
        alphas = euler_gauss(spec, count)
        table = polynomials(gamma_expand(alphas, spec.r, 5), 5)
        report = verify_orthogonality(table, spec)
        assert report.ok
        assert report.checked > 0


def test_orthogonality_catches_wrong_bands(legendre):
    bad = AlphaSequence.from_values([F(1, 3), F(1, 6), F(1, 3), F(1, 5), F(1, 7), F(2, 7)])
    table = polynomials(gamma_expand(bad, 1, 2), 2)
    report = verify_orthogonality(table, legendre)
    assert not report.ok


def test_char_poly_first_step(legendre):
    alphas = euler_gauss(legendre, 9)
    factors = assemble(alphas, 1, 5)
    table = polynomials(gamma_expand(alphas, 1, 4), 5)
    assert char_poly(factor_product(factors), 1) == (F(-1, 2), F(1))
    assert char_poly_check(factors, table, 1)


def test_char_poly_deeper(legendre, jp2):
    for spec, n_top in ((legendre, 3), (jp2, 4)):
        r = spec.r
        size = n_top + r + 1
        count = max(gamma_coverage(n_top - 1, r), (r + 1) * (size - 1) + r)
        alphas = euler_gauss(spec, count)
        factors = assemble(alphas, r, size)
        table = polynomials(gamma_expand(alphas, r, n_top - 1), n_top)
        for n in range(n_top + 1):
            assert char_poly_check(factors, table, n), (spec, n)


def test_cyclic_products_match_shifted_lu(legendre, jp2):
    for spec in (legendre, jp2):
        r = spec.r
        count = 24
        mset = MomentMatrixSet.for_count(spec, count)
        alphas = alphas_from_lu(mset, count)
        size = factor_window(count, r)
        factors = assemble(alphas, r, size)
        for j in range(r + 1):
            h_lu = hessenberg_from_lu(mset.lus[j], r)
            h_prod = cyclic_product(factors, j)
            window = min(len(h_lu), size - r)
            for i in range(window):
                for jj in range(window):
                    assert h_lu[i][jj] == h_prod[i][jj], (j, i, jj)
