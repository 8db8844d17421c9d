"""Explicit coefficient formulas for the two built-in families.

Indices decompose uniquely as n = (r+1)(rm+k) + i with m >= 0, 0 <= k <= r-1,
0 <= i <= r.  Two parameter ladders drive the formulas:

    a'_{(r+1)t+j} = a_j + t  for 0 <= j <= r, with a_0 = -1,
    a*_{rt+j}     = a_j + t  for 1 <= j <= r, and a*_0 = -1.

For the beta-weight family two printed coefficient families exist, one from
the series-ladder route and one from the leading coefficients of the type I
linear forms; they are provably equal and both are implemented verbatim so
the equality can be tested.  For the exponential-weight family the single
closed form a*_{k+i+1} - a*_i + m applies.
"""

from __future__ import annotations

from fractions import Fraction

from .alphas import AlphaSequence
from .errors import DegenerateParameters
from .rationals import decimal_str
from .systems import JacobiPineiro, LaguerreFirstKind, SystemSpec


def decompose_index(n: int, r: int) -> tuple[int, int, int]:
    """Write n = (r+1)(rm+k)+i; returns (m, k, i)."""
    if n < 0:
        raise ValueError("index must be a natural number")
    rest, i = divmod(n, r + 1)
    m, k = divmod(rest, r)
    return m, k, i


def _a_prime(params: JacobiPineiro, t: int) -> Fraction:
    nn, j = divmod(t, params.r + 1)
    if j == 0:
        return Fraction(-1) + nn
    return params.a[j - 1] + nn


def _a_star(a: tuple[Fraction, ...], t: int) -> Fraction:
    if t == 0:
        return Fraction(-1)
    nn, rem = divmod(t - 1, len(a))
    return a[rem] + nn


def _checked_ratio(num_factors, den_factors) -> Fraction:
    den = Fraction(1)
    for f in den_factors:
        if f == 0:
            raise DegenerateParameters("closed-form denominator factor is zero")
        den *= f
    num = Fraction(1)
    for f in num_factors:
        num *= f
    return num / den


def jp_alpha_bcf(params: JacobiPineiro, n: int) -> Fraction:
    """Series-ladder closed form, split on k+i <= r-1 versus k+i >= r."""
    r, a, b = params.r, (Fraction(-1),) + params.a, params.b
    m, k, i = decompose_index(n, r)
    shared = [a[j] + b + r * m + k + 2 for j in range(0, i)]
    shared += [a[j] + b + r * m + k + 1 for j in range(i + 1, r + 1)]
    if k + i <= r - 1:
        num = [a[k + i + 1] - a[i] + m] + shared
        den = [a[j] + b + (r + 1) * m + k + 2 for j in range(1, k + i + 2)]
        den += [a[j] + b + (r + 1) * m + k + 1 for j in range(k + i + 1, r + 1)]
    else:
        num = [a[k + i - r + 1] - a[i] + m + 1] + shared
        den = [a[j] + b + (r + 1) * m + k + 3 for j in range(1, k + i + 2 - r)]
        den += [a[j] + b + (r + 1) * m + k + 2 for j in range(k + i + 1 - r, r + 1)]
    return _checked_ratio(num, den)


def jp_alpha_type1(params: JacobiPineiro, n: int) -> Fraction:
    """Type-I-leading-coefficient closed form; equal to jp_alpha_bcf."""
    r, b = params.r, params.b
    star = lambda t: _a_star(params.a, t)
    m, k, i = decompose_index(n, r)
    if i == 0:
        num = [star(k + 1) + m + 1]
        num += [star(j) + b + r * m + k + 1 for j in range(1, r + 1)]
        den = [star(k + j) + b + (r + 1) * m + k + 1 for j in range(1, r + 2)]
    else:
        num = [star(k + i + 1) - star(i) + m, b + r * m + k + 1]
        num += [star(i + j) + b + r * m + k + 1 for j in range(1, r)]
        den = [star(k + i + j) + b + (r + 1) * m + k + 1 for j in range(1, r + 2)]
    return _checked_ratio(num, den)


def laguerre_alpha(params: LaguerreFirstKind, n: int) -> Fraction:
    m, k, i = decompose_index(n, params.r)
    return _a_star(params.a, k + i + 1) - _a_star(params.a, i) + m


def closed_form_alphas(spec: SystemSpec, count: int) -> AlphaSequence:
    """The closed-form coefficient sequence for a built-in system."""
    if isinstance(spec, JacobiPineiro):
        values = tuple(jp_alpha_bcf(spec, n) for n in range(count + 1))
    elif isinstance(spec, LaguerreFirstKind):
        values = tuple(laguerre_alpha(spec, n) for n in range(count + 1))
    else:
        raise TypeError("closed forms exist only for the built-in systems")
    return AlphaSequence(values, "closed-form", count)


def jp_limit(r: int) -> Fraction:
    """The limit of the coefficients for the beta-weight family: r^r/(r+1)^(r+1)."""
    return Fraction(r**r, (r + 1) ** (r + 1))


def asymptotic_rows(spec: SystemSpec, n_max: int) -> list[tuple[int, Fraction, Fraction, str]]:
    """Tabulated approach to the known asymptotics, exact plus decimal.

    For the beta-weight family each row is (n, alpha_n, |alpha_n - limit|);
    for the exponential-weight family it is (n, alpha_n, alpha_n * r(r+1)/n).
    The approach is reported, never asserted.
    """
    rows = []
    if isinstance(spec, JacobiPineiro):
        limit = jp_limit(spec.r)
        for n in range(n_max + 1):
            val = jp_alpha_bcf(spec, n)
            gap = abs(val - limit)
            rows.append((n, val, gap, decimal_str(gap)))
    elif isinstance(spec, LaguerreFirstKind):
        rr = spec.r * (spec.r + 1)
        for n in range(1, n_max + 1):
            val = laguerre_alpha(spec, n)
            scaled = val * rr / n
            rows.append((n, val, scaled, decimal_str(scaled)))
    else:
        raise TypeError("asymptotics are known only for the built-in systems")
    return rows
