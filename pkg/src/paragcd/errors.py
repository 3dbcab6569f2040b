"""Exception hierarchy shared by all engine modules."""


class ParagcdError(Exception):
    """Base class for every error raised by the engine."""


class InexactDivision(ParagcdError, ArithmeticError):
    """An exact division in Z[a] had a nonzero remainder."""


class DivisionByZero(ParagcdError, ZeroDivisionError):
    pass


class DegreeOrder(ParagcdError, ValueError):
    """Pseudo-division was asked for with deg A < deg B."""


class ZeroDivisor(ParagcdError, ZeroDivisionError):
    """Pseudo-division by the zero polynomial."""


class MissingAssignment(ParagcdError, KeyError):
    pass


class EmptyInput(ParagcdError, ValueError):
    pass


class ZeroPolynomial(ParagcdError, ValueError):
    pass


class NotSquare(ParagcdError, ValueError):
    pass


class TooTall(ParagcdError, ValueError):
    """A determinant polynomial needs rows <= cols."""


class LengthMismatch(ParagcdError, ValueError):
    pass


class BadWeight(ParagcdError, ValueError):
    """A cell index has |delta| > d0."""


class BadIndex(ParagcdError, ValueError):
    pass


class InvalidDegrees(ParagcdError, ValueError):
    pass


class BadRange(ParagcdError, ValueError):
    pass


class AllZero(ParagcdError, ValueError):
    """gcd requested of a list containing only zero polynomials."""
