"""Exception types shared across the package."""


class MdPartError(Exception):
    pass


class InvalidArgument(MdPartError, ValueError):
    pass


class NotInvertible(MdPartError, ZeroDivisionError):
    """Raised when a power series with zero constant term is inverted."""


class InvalidConstantTerm(MdPartError, ValueError):
    """exp/log/pexp/plog called on a series with the wrong constant term."""


class NoMatch(MdPartError):
    """No rational function within the degree bounds reproduces the series."""


class InsufficientOrder(MdPartError, ValueError):
    pass


class NonMonotoneProfile(MdPartError, ValueError):
    pass


class DivisibilityFailure(MdPartError, ArithmeticError):
    """A difference that must be divisible by q^n was not. Indicates a bug."""
