"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Invalid or mismatched parameters (orders, moduli, exponents)."""


class NotAUnit(ArithmeticError):
    """The element has no inverse in the requested ring."""


class LiftError(ArithmeticError):
    """No integral representative with augmentation 1 exists."""


class UnsupportedContext(ValueError):
    """The quotient context is not defined for these coefficients."""


class MissingDatum(LookupError):
    """No f-image is known for the requested homotopy equivalence and class."""


class FreenessViolation(RuntimeError):
    """A self-intersection was found at a point where the torus action is free."""


class PrecisionError(ArithmeticError):
    """A floating point root could not be matched to a unique rational."""


class DegeneratePoint(ArithmeticError):
    """The derivative at a self-intersection point is (numerically) singular."""
