"""This module defines the errors raised by the Plücker algorithms."""


class PluckerError(ValueError):
    """Base class of every error raised by the app."""


class PluckerValidationError(PluckerError):
    """Malformed input: bad subsets, zero vectors, parse errors, bad options."""


class DimensionError(PluckerValidationError):
    """The k and n of the arguments do not fit together."""


class ZeroCoordinateError(PluckerValidationError):
    """An operation that needs non-zero coordinates was given a zero one."""


class NonDecomposableError(PluckerValidationError):
    """The vector does not satisfy the Grassmann-Plücker relations."""


class NotUnimodularError(PluckerValidationError):
    """An integer matrix that should have determinant ±1 does not."""


class IncompleteTraceError(PluckerValidationError):
    """A trace was used before it reached G(k,k)."""


class DescentViolation(PluckerError):
    """
    An internal invariant of an algorithm run failed.

    ``state`` holds the Plücker vector the run was working on and ``step``
    the number of annulation passes performed so far, so that the offending
    input can be serialized and replayed.
    """

    def __init__(self, message, state=None, step=None):
        super().__init__(message)
        self.state = state
        self.step = step


class GenerationError(PluckerError):
    """No full-rank random instance was found within the allowed draws."""
