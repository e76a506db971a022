"""
Exception hierarchy for padic-kwapien.

The CLI maps each branch of the hierarchy to an exit code, so library code
raises the most specific class available and never swallows these errors.
"""


class PadicKwapienError(Exception):
    """Base class for all errors raised by padic-kwapien."""

    exit_code = 4


class InvalidInputError(PadicKwapienError, ValueError):
    exit_code = 2


class PrimeMismatchError(InvalidInputError):
    pass


class DimensionMismatchError(InvalidInputError):
    pass


class RefinementError(InvalidInputError):
    pass


class SupportError(InvalidInputError):
    pass


class ZeroFamilyError(InvalidInputError):
    pass


class UnsupportedNormError(InvalidInputError):
    pass


class CapExceededError(PadicKwapienError):
    exit_code = 3


class ResolutionError(CapExceededError):
    pass


class InternalAssertionError(PadicKwapienError, AssertionError):
    exit_code = 4
