"""Exception types raised by the finmeas library."""


class FinmeasError(Exception):
    """Base class for all finmeas errors."""


class ParseError(FinmeasError, ValueError):
    """Malformed rational text, point encoding, or JSON payload."""


class DomainError(FinmeasError):
    """A function was applied outside its domain (e.g. a test function
    undefined on a support point, or a non-rational point where a rational
    was required)."""


class NoDensityError(FinmeasError):
    """No density exists: support violation or non-invertible weight."""


class NoPrimitiveError(FinmeasError):
    """No finite-support primitive exists for the given distribution/step."""


class ConditioningError(FinmeasError):
    """Conditioning on a null event (the event has pairing zero).

    Deliberately distinct from DomainError so callers can implement
    fallback policies for null events specifically.
    """


class NormalizationError(FinmeasError):
    """Total is zero (or not invertible): normalize / center of gravity
    are undefined."""


class UnitError(FinmeasError):
    """A quantity unit must be a nonzero scalar."""


class SelectionError(FinmeasError):
    """An unknown law name was passed to the law suite."""
