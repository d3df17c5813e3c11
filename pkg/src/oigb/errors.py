"""Exception hierarchy shared by every oigb module."""


class OIGBError(Exception):
    """Base class for all engine errors."""


class DivisionByZero(OIGBError, ZeroDivisionError):
    pass


class NonPrimeModulus(OIGBError, ValueError):
    pass


class WidthMismatch(OIGBError, ValueError):
    pass


class SchemeMismatch(OIGBError, ValueError):
    pass


class SignatureMismatch(OIGBError, ValueError):
    pass


class ParameterMismatch(OIGBError, ValueError):
    pass


class EmptySource(OIGBError, ValueError):
    pass


class ZeroInput(OIGBError, ValueError):
    pass


class ZeroElement(OIGBError, ValueError):
    pass


class NonHomogeneous(OIGBError, ValueError):
    pass


class WidthCapExceeded(OIGBError, RuntimeError):
    pass


class UncertifiedWidth(OIGBError, RuntimeError):
    pass


class InsufficientData(OIGBError, ValueError):
    pass


class WidthTooLarge(OIGBError, ValueError):
    pass


class ParseError(OIGBError, ValueError):
    pass
