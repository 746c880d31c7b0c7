"""Exception types shared across the package."""


class EulersumError(Exception):
    """Base class for all library errors."""


class ModeMismatchError(EulersumError):
    """Exact-rational and floating-point values were mixed in one computation."""


class DomainError(EulersumError):
    """An argument violated a precondition (range, hypothesis, or variant support)."""


class ParseError(EulersumError):
    """A mini-language string or numeric literal could not be parsed."""


class NonConvergenceError(EulersumError):
    """An experiment required a convergent sweep and the detector said no."""
