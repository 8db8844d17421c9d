"""Systems of moment functionals, their shifts, and striped moment matrices.

A system is r functionals (v_1, ..., v_r) given by exact rational moments,
always normalised so that every zeroth moment equals one.  Rescaling the
functionals leaves the recurrence and its bidiagonal factorisation unchanged,
so the normalisation is safe and it is what both extraction methods assume.

The shift of a system by j replaces it with (v_{j+1}, ..., v_r, x v_1, ...,
x v_j); on moment matrices this is right-multiplication by the transposed
shift matrix, which is how the bidiagonal factors arise.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import DegenerateParameters, MomentTableExhausted
from .rationals import parse_rational, pochhammer


def _is_negative_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x < 0


def _warn_integer_differences(a: tuple[Fraction, ...]) -> None:
    # The explicit formulas assume a_i - a_j is never an integer for i != j.
    # Violations are not necessarily fatal (pivot checks catch actual
    # degeneracies downstream), so warn instead of raising.
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if (a[i] - a[j]).denominator == 1:
                warnings.warn(
                    f"a_{i + 1} - a_{j + 1} = {a[i] - a[j]} is an integer; "
                    "the system may be degenerate",
                    stacklevel=3,
                )


class SystemSpec:
    """Base class for the three system kinds."""

    r: int

    def moment(self, j: int, n: int) -> Fraction:
        raise NotImplementedError


@dataclass(frozen=True)
class JacobiPineiro(SystemSpec):
    """Weights x^{a_j} (1-x)^b on (0,1); normalised moments are ratios of
    Pochhammer symbols."""

    a: tuple[Fraction, ...]
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(Fraction(x) for x in self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if not self.a:
            raise DegenerateParameters("need at least one parameter a_j")
        for x in self.a:
            if _is_negative_integer(x):
                raise DegenerateParameters(f"a = {x} is a negative integer")
            if _is_negative_integer(x + self.b + 1):
                raise DegenerateParameters(f"a + b + 1 = {x + self.b + 1} is a negative integer")
        _warn_integer_differences(self.a)

    @property
    def r(self) -> int:
        return len(self.a)

    def moment(self, j: int, n: int) -> Fraction:
        aj = self.a[j - 1]
        return pochhammer(aj + 1, n) / pochhammer(aj + self.b + 2, n)


@dataclass(frozen=True)
class LaguerreFirstKind(SystemSpec):
    """Weights x^{a_j} e^{-x} on (0,inf); normalised moments are Pochhammer
    symbols (a_j+1)_n."""

    a: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(Fraction(x) for x in self.a))
        if not self.a:
            raise DegenerateParameters("need at least one parameter a_j")
        for x in self.a:
            if _is_negative_integer(x):
                raise DegenerateParameters(f"a = {x} is a negative integer")
        _warn_integer_differences(self.a)

    @property
    def r(self) -> int:
        return len(self.a)

    def moment(self, j: int, n: int) -> Fraction:
        return pochhammer(self.a[j - 1] + 1, n)


@dataclass(frozen=True)
class CustomMoments(SystemSpec):
    """User-supplied moment tables, one per functional, normalised on entry."""

    tables: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if not self.tables:
            raise DegenerateParameters("need at least one moment table")
        normalised = []
        for idx, table in enumerate(self.tables):
            row = tuple(Fraction(x) for x in table)
            if not row:
                raise DegenerateParameters(f"moment table {idx + 1} is empty")
            if row[0] == 0:
                raise DegenerateParameters(
                    f"functional {idx + 1} has zeroth moment 0 and cannot be normalised"
                )
            normalised.append(tuple(x / row[0] for x in row))
        object.__setattr__(self, "tables", tuple(normalised))

    @property
    def r(self) -> int:
        return len(self.tables)

    def moment(self, j: int, n: int) -> Fraction:
        table = self.tables[j - 1]
        if n >= len(table):
            raise MomentTableExhausted(j, n)
        return table[n]


def moment(spec: SystemSpec, j: int, n: int) -> Fraction:
    """Moment <v_j, x^n> of the normalised system, 1 <= j <= r."""
    if not 1 <= j <= spec.r:
        raise ValueError(f"functional index {j} outside [1, {spec.r}]")
    if n < 0:
        raise ValueError("moment order must be a natural number")
    return spec.moment(j, n)


@dataclass(frozen=True)
class ShiftedSystem:
    """The system (v_{j+1}, ..., v_r, x v_1, ..., x v_j); j = 0 is the base."""

    base: SystemSpec
    j: int

    def __post_init__(self):
        if not 0 <= self.j <= self.base.r:
            raise ValueError(f"shift {self.j} outside [0, {self.base.r}]")

    @property
    def r(self) -> int:
        return self.base.r


def shifted_moment(sys: ShiftedSystem, i: int, n: int) -> Fraction:
    """Moment of the i-th functional of the shifted system."""
    r, j = sys.r, sys.j
    if not 1 <= i <= r:
        raise ValueError(f"functional index {i} outside [1, {r}]")
    if i <= r - j:
        return moment(sys.base, i + j, n)
    return moment(sys.base, i + j - r, n + 1)


@dataclass(frozen=True)
class StripedMomentMatrix:
    """N x N truncation with entry (n, r*k+q) = <v_{q+1}, x^{k+n}>."""

    entries: tuple[tuple[Fraction, ...], ...]
    source: ShiftedSystem

    @property
    def size(self) -> int:
        return len(self.entries)


def build_moment_matrix(sys: ShiftedSystem, size: int) -> StripedMomentMatrix:
    if size < 1:
        raise ValueError("matrix size must be positive")
    r = sys.r
    rows = []
    for n in range(size):
        row = []
        for col in range(size):
            k, q = divmod(col, r)
            row.append(shifted_moment(sys, q + 1, k + n))
        rows.append(tuple(row))
    return StripedMomentMatrix(tuple(rows), sys)


def load_custom_system(source: str | Path | dict) -> CustomMoments:
    """Load the JSON moment-file format {"r": int, "moments": [[p/q, ...]]}."""
    if isinstance(source, (str, Path)):
        data = json.loads(Path(source).read_text())
    else:
        data = source
    try:
        r = int(data["r"])
        raw = data["moments"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed moment file: {exc}") from exc
    if len(raw) != r:
        raise ValueError(f"moment file declares r={r} but has {len(raw)} tables")
    tables = tuple(tuple(parse_rational(tok) for tok in table) for table in raw)
    return CustomMoments(tables)
