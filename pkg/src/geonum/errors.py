"""Exception types raised across the package."""


class GeonumError(Exception):
    """Base class for all package errors."""


class SignatureError(GeonumError):
    """Operands live in different algebras, or the signature is invalid."""


class GradeError(GeonumError):
    """Grade out of range or an operand that is not homogeneous."""


class IsoError(GeonumError):
    """A structure-theorem map was requested outside its preconditions."""


class RingError(GeonumError):
    """Ring elements from different building blocks were combined."""


class DimError(GeonumError):
    """Dimension cap exceeded, or matrix dimensions do not match."""


class ValidationError(GeonumError):
    """Syntactically valid input that does not fit the algebra."""

    def __init__(self, message, line=1, col=1):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def __str__(self):
        return f"{self.line}:{self.col}: {self.message}"


class ParseError(ValidationError):
    """Malformed expression text. Carries a 1-based line and column."""
