"""Exception types raised by fibdense."""


class FibDenseError(Exception):
    """Base class for all library errors."""


class PrecisionTooLow(FibDenseError):
    pass


class NonIntegralResult(FibDenseError):
    pass


class InvalidSpec(FibDenseError, ValueError):
    pass


class ImaginaryResidue(FibDenseError):
    pass


class WordTooLong(FibDenseError):
    pass


class DegenerateDenominator(FibDenseError, ZeroDivisionError):
    pass


class WindowTooLarge(FibDenseError, ValueError):
    pass


class InsufficientDepth(FibDenseError, ValueError):
    pass


class ZeroLeadingDenominator(FibDenseError, ZeroDivisionError):
    pass
