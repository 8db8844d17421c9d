"""Exact rational scalars and Pochhammer helpers.

Every numeric value in the engine is a ``fractions.Fraction``; the stdlib type
already guarantees the canonical form (positive denominator, gcd one) and
exact field arithmetic, so it is used directly rather than wrapped.
"""

from __future__ import annotations

import re
from fractions import Fraction

Scalar = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")


def parse_rational(token: str) -> Fraction:
    """Parse the "p/q" (or plain "p") text form, no whitespace allowed."""
    if not _RATIONAL_RE.match(token):
        raise ValueError(f"not a rational token: {token!r}")
    return Fraction(token)


def format_rational(x: Fraction) -> str:
    """Render as "p" for integers, "p/q" otherwise."""
    return str(Fraction(x))


def decimal_str(x: Fraction, digits: int = 17) -> str:
    """Display-only decimal rendering with the given significant digits."""
    return format(float(x), f".{digits}g")


def pochhammer(z: Fraction | int, n: int) -> Fraction:
    """Rising factorial (z)_n = z (z+1) ... (z+n-1), with (z)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer order must be a natural number")
    z = Fraction(z)
    out = Fraction(1)
    for k in range(n):
        out *= z + k
    return out
