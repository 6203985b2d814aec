"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class ConsistencyError(ArithmeticError):
    """A quantity that must vanish (e.g. an imaginary residue) did not."""


class ToleranceNotReached(RuntimeError):
    """Raised when an iterative scheme hits its cap; carries the best value."""

    def __init__(self, msg, value=None, est_error=None):
        super().__init__(msg)
        self.value = value
        self.est_error = est_error


class NewtonDidNotConverge(RuntimeError):
    pass
