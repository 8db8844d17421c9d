"""Truncated formal power series with explicit order tracking.

A series stores the coefficients of t^0 .. t^order and nothing else.  The
order says how far the coefficients can be trusted; every operation computes
the correct order of its result instead of assuming one.  ``order == -1``
means nothing is known; operations propagate it silently and only an actual
coefficient read fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InsufficientOrder, NonzeroConstantTerm, ZeroDivisor


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        if self.order < -1:
            raise ValueError("order must be >= -1")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient count must equal order + 1")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Fraction | int]) -> "TruncatedSeries":
        cs = tuple(Fraction(c) for c in coeffs)
        return cls(cs, len(cs) - 1)

    @classmethod
    def constant_one(cls, order: int) -> "TruncatedSeries":
        return cls((Fraction(1),) + (Fraction(0),) * order, order)

    def coefficient(self, n: int) -> Fraction:
        """Coefficient of t^n; fails if n is beyond the trusted order."""
        if n < 0:
            raise ValueError("coefficient index must be a natural number")
        if n > self.order:
            raise InsufficientOrder(n, self.order)
        return self.coeffs[n]

    def sub(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Coefficientwise difference; the result order is the minimum."""
        order = min(self.order, other.order)
        cs = tuple(self.coeffs[n] - other.coeffs[n] for n in range(order + 1))
        return TruncatedSeries(cs, order)

    def div_ct(self, c: Fraction) -> "TruncatedSeries":
        """Divide by c*t.  Requires a zero constant term; drops one order."""
        if c == 0:
            raise ZeroDivisor("division of a series by 0*t")
        if self.order >= 0 and self.coeffs[0] != 0:
            raise NonzeroConstantTerm(
                f"cannot divide by t: constant term is {self.coeffs[0]}"
            )
        if self.order <= 0:
            return TruncatedSeries((), -1)
        cs = tuple(coeff / c for coeff in self.coeffs[1:])
        return TruncatedSeries(cs, self.order - 1)


def series_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a.sub(b)


def series_divide_by_ct(a: TruncatedSeries, c: Fraction) -> TruncatedSeries:
    return a.div_ct(c)
