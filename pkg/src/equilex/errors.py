"""Exception types shared across the toolkit."""

from __future__ import annotations


class EquilexError(Exception):
    """Base class for all toolkit errors."""


class DimensionMismatchError(EquilexError):
    """A vector's length does not match the ambient dimension."""


class DomainError(EquilexError):
    """A parameter lies outside the domain an operation is defined on."""


class RangeError(EquilexError):
    """A value falls outside its admissible interval.

    Carries the interval endpoints so callers can report or adjust.
    """

    def __init__(self, message: str, lo: float | None = None, hi: float | None = None):
        super().__init__(message)
        self.lo = lo
        self.hi = hi


class SizeError(EquilexError):
    """A requested object exceeds the supported size limit."""


class ValidationError(EquilexError):
    """Input data failed a structural or numerical consistency check."""


class DegenerateSetError(ValidationError):
    """A point set contains (near-)duplicate points."""
