"""The coefficient sequence of a bidiagonal factorisation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import AlphaIndexOutOfRange, NoBidiagonalFactorisation


@dataclass(frozen=True)
class AlphaSequence:
    """Coefficients alpha_0 .. alpha_K with provenance.

    All stored values are nonzero: a vanishing coefficient means no
    bidiagonal factorisation exists and is rejected at construction.
    """

    values: tuple[Fraction, ...]
    method: str
    valid_through: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if len(self.values) != self.valid_through + 1:
            raise ValueError("value count must equal valid_through + 1")
        for idx, v in enumerate(self.values):
            if v == 0:
                raise NoBidiagonalFactorisation(idx)

    @classmethod
    def from_values(
        cls, values: Iterable[Fraction], method: str = "given"
    ) -> "AlphaSequence":
        vals = tuple(Fraction(v) for v in values)
        return cls(vals, method, len(vals) - 1)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.valid_through:
            raise AlphaIndexOutOfRange(n, self.valid_through)
        return self.values[n]

    def truncated(self, k: int) -> "AlphaSequence":
        """Restriction to alpha_0 .. alpha_k."""
        if k > self.valid_through:
            raise AlphaIndexOutOfRange(k, self.valid_through)
        return AlphaSequence(self.values[: k + 1], self.method, k)
