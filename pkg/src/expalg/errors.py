"""Exception types shared across the package."""


class ExpalgError(Exception):
    """Base class for all package errors."""


class DimensionError(ExpalgError):
    """Operands live in different ambient variable counts."""


class HyperplaneError(ExpalgError):
    """Invalid hyperplane data (zero normal vector)."""


class ParseError(ExpalgError):
    """Syntax error, with 1-based line/column position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class DriverError(ExpalgError):
    """Input handed to the wrong classification driver."""


class HypothesisViolation(ExpalgError):
    """A required precondition of an operation is violated by the input."""


class InternalInvariantError(ExpalgError):
    """A result breaks an invariant the implementation guarantees; never expected."""
