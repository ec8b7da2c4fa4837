"""Exception hierarchy for the taols package.

Every failure mode raises a distinct class so callers (and the CLI exit-code
mapping) can tell data problems from numerical ones without parsing messages.
"""

from __future__ import annotations


class TaolsError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSeriesError(TaolsError, ValueError):
    """A time series violates a structural invariant (too short, non-finite)."""


class AlignmentError(TaolsError, ValueError):
    """Series that must share a start year and length do not."""


class SchemaError(TaolsError, ValueError):
    """A CSV file does not conform to the expected schema."""


class YearGapError(SchemaError):
    """A year is missing from an otherwise contiguous annual file."""


class EmptyOverlapError(TaolsError, ValueError):
    """Two annual files have no years in common."""


class DomainError(TaolsError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class OverResolutionError(TaolsError, ValueError):
    """More basis functions requested than observations available (K > T)."""


class InvalidKError(TaolsError, ValueError):
    """A basis count K is outside the valid estimation range."""


class InsufficientKError(InvalidKError):
    """The transformed system has fewer than one residual degree of freedom."""


class SingularDesignError(TaolsError, ArithmeticError):
    """The regressor matrix is numerically rank deficient."""

    def __init__(self, column: str, detail: str = ""):
        self.column = column
        msg = f"design column {column!r} is numerically collinear"
        if detail:
            msg = f"{msg} ({detail})"
        super().__init__(msg)


class NonPhysicalError(TaolsError, ValueError):
    """A coefficient has a sign or value with no physical interpretation."""


class ConfigError(TaolsError, ValueError):
    """A run configuration or simulation spec is invalid."""
