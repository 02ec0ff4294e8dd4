"""Exception hierarchy shared by every umbra module."""


class UmbraError(Exception):
    """Base class for all errors raised by umbra."""


class DivisionByZero(UmbraError, ZeroDivisionError):
    pass


class UndefinedGcd(UmbraError, ValueError):
    pass


class PoleAtLambda(UmbraError, ZeroDivisionError):
    """A denominator in lambda vanishes at the requested specialization."""


class NotInvertible(UmbraError, ValueError):
    pass


class CompositionOrderError(UmbraError, ValueError):
    pass


class NotADeltaSeries(UmbraError, ValueError):
    pass


class InsufficientPrecision(UmbraError, ValueError):
    """A truncated series is too short to act on a polynomial of this degree."""


class DegreeOverflow(UmbraError, ValueError):
    pass


class RangeError(UmbraError, ValueError):
    """An index lies outside the range where a statement is claimed to hold."""


class ParseError(UmbraError, ValueError):
    """Syntax error in a polynomial expression.

    ``position`` is the byte offset into the input, ``expected`` the set of
    tokens that would have been accepted there.
    """

    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = frozenset(expected)
        detail = f"{message} at offset {position}"
        if self.expected:
            detail += f" (expected one of: {', '.join(sorted(self.expected))})"
        super().__init__(detail)


class UnknownFamily(ParseError):
    pass


class ExponentError(ParseError):
    pass
