"""Exception types shared across the package.

The CLI maps these onto process exit codes: ValidationError and ParseError
exit 1, CapExceededError exit 2.  Expectation mismatches and usage errors
are handled in the CLI layer itself (exits 3 and 4).
"""

from __future__ import annotations


class GKSpectraError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(GKSpectraError):
    """Malformed or inconsistent input: bad values, bad files, bad records."""


class ParseError(ValidationError):
    """Syntax error in a text input; carries a position when known."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class CapExceededError(GKSpectraError):
    """An enumeration would visit more elements than the configured cap."""

    def __init__(self, message: str, *, cap: int, needed: int):
        super().__init__(message)
        self.cap = cap
        self.needed = needed


class PreconditionError(GKSpectraError):
    """An operation's stated precondition does not hold for the input."""


class SingularError(GKSpectraError):
    """A matrix that must be invertible is singular."""


class UnsupportedTargetError(GKSpectraError):
    """A recognition target outside the range the catalog can serve."""


class UsageError(GKSpectraError):
    """A caller asked for something the interface does not offer."""
