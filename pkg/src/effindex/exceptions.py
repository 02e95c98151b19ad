"""Exception types raised by the effindex estimators and parsers."""


class EffindexError(Exception):
    """Base class for all package-specific errors."""


class ParseError(EffindexError):
    """Malformed input row (bad date, non-numeric or non-positive price)."""


class OrderingError(EffindexError):
    """Observation dates are not strictly increasing."""


class InsufficientDataError(EffindexError):
    """Series is too short for the requested computation."""


class DegenerateSeriesError(EffindexError):
    """Series carries no variation where variation is required."""


class DegenerateSpectrumError(DegenerateSeriesError):
    """All periodogram ordinates in the estimation band are zero."""


class DegeneratePathError(DegenerateSeriesError):
    """Path has zero scale statistics (constant or lag-degenerate)."""


class InsufficientBandError(EffindexError):
    """Too few usable periodogram ordinates for the log regression."""
