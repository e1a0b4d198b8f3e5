"""Exception hierarchy shared by the library and the command line front end."""


class SteenrodError(Exception):
    """Base class for domain errors raised by this package."""


class NonPrime(SteenrodError, ValueError):
    pass


class Reducible(SteenrodError, ValueError):
    pass


class FieldMismatch(SteenrodError, ValueError):
    pass


class DivisionByZero(SteenrodError, ZeroDivisionError):
    pass


class ShapeMismatch(SteenrodError, ValueError):
    pass


class IndexOutOfRange(SteenrodError, ValueError):
    pass


class NotInadmissible(SteenrodError, ValueError):
    """Raised when an Adem-Wu expansion is requested for an admissible pair."""

    def __init__(self, a, b, q):
        super().__init__(f"P^{a} P^{b} is already admissible for q={q} (need a < q*b)")
        self.a, self.b, self.q = a, b, q


class NotAdmissible(SteenrodError, ValueError):
    pass


class ExprSyntaxError(SteenrodError, ValueError):
    """Malformed expression text; ``position`` is a 0-based character offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class FieldLiteralError(SteenrodError, ValueError):
    pass


class ExprTypeError(SteenrodError, TypeError):
    """A well-formed expression combining values that cannot be combined."""
