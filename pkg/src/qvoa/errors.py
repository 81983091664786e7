"""Exception hierarchy.

The CLI maps :class:`InvalidParameterError` to exit code 2 and
:class:`InvariantViolation` (and subclasses) to exit code 3.
"""


class QvoaError(Exception):
    pass


class InvalidParameterError(QvoaError, ValueError):
    pass


class NonInvertibleSeriesError(QvoaError, ZeroDivisionError):
    pass


class NotPositiveDefiniteError(QvoaError, ValueError):
    pass


class NonCanonicalMonomialError(QvoaError, ValueError):
    pass


class InvariantViolation(QvoaError, AssertionError):
    """An internal consistency check failed; always signals a bug."""


class IntegralityError(InvariantViolation, ArithmeticError):
    pass
