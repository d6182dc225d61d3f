"""Exception types shared by every module.

The CLI reports ``type(exc).__name__`` as the machine-readable error kind, so
the class names here are part of the command-line contract.
"""


class SupergeodesicError(ValueError):
    """Base class for all library errors."""


class NotSawtooth(SupergeodesicError):
    pass


class NotNormalizable(SupergeodesicError):
    pass


class LengthMismatch(SupergeodesicError):
    pass


class EmptyInput(SupergeodesicError):
    pass


class PolygonMismatch(SupergeodesicError):
    pass


class Infeasible(SupergeodesicError):
    pass


class OutOfRange(SupergeodesicError):
    pass


class NotApplicable(SupergeodesicError):
    pass
