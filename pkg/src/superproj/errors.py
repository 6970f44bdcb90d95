"""Shared exception types."""


class SuperprojError(Exception):
    """Base class for all errors raised by this package."""


class ContextError(SuperprojError):
    """Operands live in different variable contexts, or a variable is unknown."""


class ParityError(SuperprojError):
    """A homogeneous (even or odd) element was required."""


class DomainError(SuperprojError):
    """Input outside the mathematical domain of the operation."""


class InstabilityError(SuperprojError):
    """A truncation window or degree bound did not stabilize."""

    def __init__(self, message, suggested=None):
        super().__init__(message)
        self.suggested = suggested


class ParseError(SuperprojError):
    """Syntax error in the expression grammar, with a byte offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
