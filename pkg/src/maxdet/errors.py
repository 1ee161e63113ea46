"""Exception types shared across the package."""


class MaxdetError(Exception):
    """Base class for all errors raised by maxdet."""


class ArithmeticOverflowError(MaxdetError, OverflowError):
    """An exact integer left the configured integer width."""


class SizeGuardError(MaxdetError, ValueError):
    """A problem size exceeds the guard of the requested routine."""


class DimensionMismatchError(MaxdetError, ValueError):
    pass


class MatrixParseError(MaxdetError, ValueError):
    """Text could not be parsed into a 0/1 matrix."""
