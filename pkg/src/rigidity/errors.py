"""Exception hierarchy shared by every module of the package."""


class RigidityError(Exception):
    """Base class for all errors raised by :mod:`rigidity`."""


class DimensionMismatchError(RigidityError, ValueError):
    """An exponent vector, coefficient vector or matrix has the wrong size."""


class SpecMismatchError(RigidityError, ValueError):
    """Two operands live in rings with different truncation exponents."""


class DomainError(RigidityError, ValueError):
    """The input lies outside the domain of the operation."""


class RejectedInputError(RigidityError, ValueError):
    """A documented precondition of the operation does not hold."""


class NotAnAutomorphismError(RigidityError, ValueError):
    """A substitution expected to be a graded automorphism is not one."""


class SearchSpaceTooLargeError(RigidityError):
    """An exhaustive search would exceed the configured candidate ceiling."""

    def __init__(self, size: int, ceiling: int):
        super().__init__(
            f"search space of {size} candidates exceeds the ceiling of {ceiling}"
        )
        self.size = size
        self.ceiling = ceiling


class InternalInconsistencyError(RigidityError):
    """Two independently computed answers disagree.

    Raised only if the implementation itself is broken.
    """


class ParseError(RigidityError, ValueError):
    """Malformed textual input (expressions, matrix files, serialized data)."""
