"""Exception types raised by qpart."""


class QpartError(Exception):
    """Base class for all library errors."""


class NonPrime(QpartError, ValueError):
    pass


class ReducibleModulus(QpartError, ValueError):
    pass


class UnsupportedSize(QpartError, ValueError):
    pass


class ShapeMismatch(QpartError, ValueError):
    pass


class BudgetExceeded(QpartError, RuntimeError):
    """An exhaustive enumeration would exceed the configured budget."""


class NonIntegerResult(QpartError, ArithmeticError):
    """A MacWilliams transform produced a non-integral count."""


class EmptyCode(QpartError, ValueError):
    pass


class NonMonotone(QpartError, ValueError):
    pass


class InexactDivision(QpartError, ArithmeticError):
    pass


class BoundViolation(QpartError, AssertionError):
    """An internal consistency bound failed; indicates an arithmetic bug."""
