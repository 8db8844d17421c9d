"""Exception types shared across the package."""

from __future__ import annotations


class MopfactError(Exception):
    """Base class for all package-specific errors."""


class NonzeroConstantTerm(MopfactError):
    """Series division by t requires a vanishing constant term."""


class ZeroDivisor(MopfactError):
    """Division by an exact zero."""


class MomentTableExhausted(MopfactError):
    """A custom moment table does not reach the requested order."""

    def __init__(self, functional: int, order: int):
        self.functional = functional
        self.order = order
        super().__init__(
            f"moment table for functional {functional} has no entry of order {order}"
        )


class InsufficientOrder(MopfactError):
    """A truncated series was read beyond its trusted order."""

    def __init__(self, wanted: int, order: int):
        self.wanted = wanted
        self.order = order
        super().__init__(f"coefficient {wanted} requested, series trusted to order {order}")


class AlphaIndexOutOfRange(MopfactError):
    """An alpha coefficient beyond the proven-valid window was requested."""

    def __init__(self, index: int, valid_through: int):
        self.index = index
        self.valid_through = valid_through
        super().__init__(f"alpha_{index} requested, sequence valid through {valid_through}")


class SingularLeadingMinor(MopfactError):
    """A leading principal minor vanished: the step-line polynomials of the
    affected system do not exist or are not unique."""

    def __init__(self, n: int, shift: int | None = None):
        self.n = n
        self.shift = shift
        where = f" of shifted system j={shift}" if shift is not None else ""
        super().__init__(f"leading principal minor of size {n}{where} is zero")


class NoBidiagonalFactorisation(MopfactError):
    """A coefficient alpha_n vanished: the recurrence matrix exists but admits
    no bidiagonal factorisation with all nontrivial entries nonzero."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"alpha_{index} = 0: no bidiagonal factorisation exists")


class DegenerateParameters(MopfactError):
    """Parameter values make a closed-form denominator vanish or a built-in
    system ill-defined."""


class InternalInconsistency(MopfactError):
    """Two provably-equal computations disagreed; this is a bug, not bad input."""
