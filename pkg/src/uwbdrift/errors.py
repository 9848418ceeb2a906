"""Exception hierarchy shared across the package."""

from __future__ import annotations


class UwbDriftError(Exception):
    """Base class for all package-specific errors."""


class DomainError(UwbDriftError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class ConfigError(UwbDriftError, ValueError):
    """A parameter combination violates a structural invariant."""


class DegenerateInputError(DomainError):
    """Inputs collapse an expression (for example a zero denominator)."""


class UnsupportedModeError(UwbDriftError):
    """The requested protocol mode is not applicable to this operation."""


class ScenarioError(UwbDriftError):
    """A scenario document failed to parse or validate."""
