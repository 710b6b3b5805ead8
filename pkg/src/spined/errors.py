"""Exception types shared across the package."""


class SpinedError(Exception):
    pass


class PreconditionViolation(SpinedError, ValueError):
    """An operation was called on inputs outside its domain."""


class MediatingNotFound(SpinedError):
    pass


class UniquenessViolation(SpinedError):
    pass


class ConstructionInconsistent(SpinedError):
    """The two halves of a mediating map disagree on a glued vertex."""


class BoundExceeded(SpinedError):
    pass


class BudgetExhausted(SpinedError):
    pass


class RangeError(SpinedError, ValueError):
    pass


class ParseError(SpinedError, ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
