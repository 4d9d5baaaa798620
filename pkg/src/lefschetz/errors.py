"""Exception hierarchy.

``MalformedInput`` maps to CLI exit status 2; everything a verification
suite reports as a violated property maps to exit status 1.
"""


class LefschetzError(Exception):
    pass


class MalformedInput(LefschetzError, ValueError):
    """Input that does not describe a valid object (bad syntax, bad values)."""

    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)


class InvalidSubdivision(MalformedInput):
    """A refined complex that fails the carrier or tiling checks."""


class NotSimplicial(MalformedInput):
    """A vertex map that does not carry simplices to simplices."""


class DomainError(LefschetzError, ValueError):
    """An argument outside the domain of an operation, e.g. a non-subcomplex."""


class PreconditionError(LefschetzError):
    """An operation called on inputs its formula does not apply to."""


class ConsistencyError(LefschetzError, AssertionError):
    """An internal invariant failed; indicates a bug upstream, never coerced."""


class CombinatorialBlowup(LefschetzError):
    """Exhaustive enumeration refused because the input is too large."""
