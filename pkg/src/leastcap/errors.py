"""Exception hierarchy shared by all engines."""


class LeastCapError(Exception):
    """Base class for errors raised by this package."""


class DomainError(LeastCapError, ValueError):
    """Argument outside the domain of an operation."""


class BoundaryError(DomainError):
    """Point on, or too close to, a triangle boundary."""


class PoleError(LeastCapError, ZeroDivisionError):
    """Evaluation too close to a pole."""


class ConvergenceError(LeastCapError, RuntimeError):
    """An iterative method failed to converge."""
