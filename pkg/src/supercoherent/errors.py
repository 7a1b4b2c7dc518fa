"""Exception types raised across the package."""

from __future__ import annotations


class SupercoherentError(Exception):
    """Base class for all errors raised by this package."""


class InvalidDimension(SupercoherentError, ValueError):
    pass


class InvalidIndex(SupercoherentError, ValueError):
    pass


class InvalidAngle(SupercoherentError, ValueError):
    pass


class InvalidConcurrence(SupercoherentError, ValueError):
    pass


class InvalidState(SupercoherentError, ValueError):
    """Raised when a state fails the normalization precondition."""


class TruncationError(SupercoherentError, ValueError):
    """The Fock cutoff is too small for the requested displacement.

    ``required_dim`` is the smallest cutoff that would satisfy the tail
    tolerance, when it can be determined.
    """

    def __init__(self, message: str, required_dim: int | None = None):
        super().__init__(message)
        self.required_dim = required_dim


class UndefinedQuantity(SupercoherentError, ArithmeticError):
    """A ratio whose denominator vanishes, e.g. Mandel Q of the vacuum."""


class NoOrthogonalStates(SupercoherentError, ValueError):
    pass


class FibonacciOverflow(SupercoherentError, OverflowError):
    pass
