"""Exception types raised by the library.

Everything derives from :class:`IncidenceError`.  The CLI maps
:class:`DomainError` subclasses to exit status 1 and :class:`ParseError`
to exit status 2.
"""


class IncidenceError(Exception):
    """Base class for all library errors."""


class DomainError(IncidenceError):
    """A mathematically invalid request (non-invertible input, bad witness...)."""


class ParseError(IncidenceError):
    """Malformed textual input (scalars, poset or series files)."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


# field

class DivisionByZero(DomainError, ZeroDivisionError):
    pass


class MixedFields(DomainError):
    pass


# poset

class CycleDetected(DomainError):
    pass


class UnknownElement(DomainError, KeyError):
    def __str__(self):
        # KeyError would repr() the message otherwise
        return str(self.args[0]) if self.args else ""


class DuplicateElement(DomainError):
    pass


class NotComparable(DomainError):
    pass


class SizeTooLarge(DomainError):
    pass


# series

class PosetMismatch(DomainError):
    pass


class FieldMismatch(DomainError):
    pass


class NotInvertible(DomainError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# structure

class NotIdempotent(DomainError):
    pass


class NotAWitness(DomainError):
    pass


class NotAComponent(DomainError):
    pass


class IdentityCheckFailed(DomainError, AssertionError):
    """An internal algebraic identity did not hold (indicates a bug or bad input)."""


# isomorphism

class InvalidWitness(DomainError):
    pass


class NotPrimitiveImage(DomainError):
    pass


class NotOrderPreserving(DomainError):
    pass
