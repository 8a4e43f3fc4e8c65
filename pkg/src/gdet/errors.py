"""Exception hierarchy shared by every module of the package."""


class GdetError(Exception):
    """Base class for all errors raised by :mod:`gdet`."""


class ParseError(GdetError, ValueError):
    """Malformed matrix text. Carries the 1-based ``line`` and ``column`` when known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class DimensionError(GdetError, ValueError):
    """Shapes or indices that do not fit the operation."""


class DomainError(GdetError, ValueError):
    """Input outside the mathematical domain (dependent basis, non-integer entry, ...)."""


class RankError(GdetError, ArithmeticError):
    """Matrix is not of full column rank within tolerance."""


class SingularSystemError(GdetError, ArithmeticError):
    """Gdet(A) = 0: the system has no solution or infinitely many."""


class InconsistentSystemError(GdetError, ArithmeticError):
    """Right-hand side is not in the column space of the coefficient matrix."""

    def __init__(self, message, residual):
        self.residual = residual
        super().__init__(message)


class CapacityError(GdetError, RuntimeError):
    """An enumeration guard of an oracle path was exceeded."""
