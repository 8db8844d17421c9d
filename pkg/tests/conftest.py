from fractions import Fraction as F

import pytest

from mopfact import CustomMoments, JacobiPineiro, LaguerreFirstKind


@pytest.fixture
def legendre():
    # Weight 1 on (0,1): moments 1/(n+1), the 4x4 truncation is the Hilbert matrix.
    return JacobiPineiro(a=(F(0),), b=F(0))


@pytest.fixture
def hilbert_custom():
    return CustomMoments(tables=(tuple(F(1, n + 1) for n in range(40)),))


@pytest.fixture
def jp2():
    return JacobiPineiro(a=(F(1, 2), F(1, 3)), b=F(1, 4))


@pytest.fixture
def laguerre1():
    return LaguerreFirstKind(a=(F(0),))


@pytest.fixture
def laguerre2():
    return LaguerreFirstKind(a=(F(1, 2), F(1, 3)))


@pytest.fixture
def symmetric():
    # Arcsine-type even moments; every odd moment vanishes, so alpha_0 = 0.
    table = []
    for n in range(16):
        if n % 2:
            table.append(F(0))
        else:
            k = n // 2
            from math import comb

            table.append(F(comb(2 * k, k), 4**k))
    return CustomMoments(tables=(tuple(table),))
