"""Exception types shared across the package."""


class IndRootsError(Exception):
    """Base class for all package errors."""


class GraphOrderError(IndRootsError, ValueError):
    """A concrete graph would exceed the vertex cap (use a GraphExpr instead)."""


class Graph6Error(IndRootsError, ValueError):
    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class DegreeGuardError(IndRootsError, ArithmeticError):
    """A polynomial operation would produce more coefficients than allowed."""


class OrderGuardError(IndRootsError, ValueError):
    """Graph too large for the requested independence polynomial routine."""


class NotIndependencePolynomialError(IndRootsError, ValueError):
    """Polynomial cannot be an independence polynomial (constant term != 1)."""


class ConstructionError(IndRootsError, ValueError):
    """Construction precondition failed."""


class ExprSyntaxError(IndRootsError, ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")
