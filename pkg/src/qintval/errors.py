"""Exception types raised across the package."""


class QIntValError(Exception):
    """Base class for all errors raised by qintval."""


class ZeroDenominator(QIntValError, ZeroDivisionError):
    pass


class PoleError(QIntValError, ZeroDivisionError):
    """A rational function was evaluated at one of its poles."""


class NotPrime(QIntValError, ValueError):
    pass


class BasisMismatch(QIntValError, ValueError):
    pass


class PoleAtOne(PoleError):
    pass


class NotInRectangle(QIntValError, ValueError):
    pass


class PreconditionViolation(QIntValError, ValueError):
    pass


class TooLarge(QIntValError, ValueError):
    """An exhaustive enumeration would exceed the configured budget."""


class InsufficientPrecision(QIntValError, ValueError):
    pass


class InvalidSpec(QIntValError, ValueError):
    pass


class DomainViolation(QIntValError, ValueError):
    pass


class DivisionByZeroInField(QIntValError, ZeroDivisionError):
    pass
