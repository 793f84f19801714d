"""Exception hierarchy shared by every module."""

from __future__ import annotations


class FlexError(Exception):
    """Base class; the CLI maps any subclass to exit code 2."""


class SchemeSyntaxError(FlexError, ValueError):
    def __init__(self, message: str, position: int | None = None) -> None:
        self.position = position
        if position is not None:
            message = f"{message} (at column {position + 1})"
        super().__init__(message)


class AmbientMismatch(FlexError, ValueError):
    pass


class UnsupportedAmbient(FlexError, ValueError):
    pass


class NotPrime(FlexError, ValueError):
    pass


class OutOfDomain(FlexError, ValueError):
    pass


class ParityError(FlexError, ValueError):
    pass


class NonIntegerSignature(FlexError, ValueError):
    pass


class DimensionMismatch(FlexError, ValueError):
    pass


class DegenerateForm(FlexError, ValueError):
    pass


class ParityViolation(FlexError, ValueError):
    pass


class OddDifference(FlexError, ValueError):
    pass


class InvalidSpec(FlexError, ValueError):
    pass


class MissingChi(InvalidSpec):
    pass


class InvalidForm(FlexError, ValueError):
    pass
