"""Error types shared across the package."""


class GroupestError(Exception):
    """Base class for all package errors."""


class EmptyOperatorError(GroupestError):
    """Raised for zero-dimensional operators."""


class InvalidInputError(GroupestError):
    """Raised for non-finite or otherwise malformed numeric input."""


class ConvergenceError(GroupestError):
    """Raised when an adaptive truncation fails to stabilise."""


class BoundaryHitError(GroupestError):
    """The maximiser of gamma(s) - s*E landed on the search-bracket boundary."""


class InvalidCurveError(GroupestError):
    """A curve assumed concave failed the midpoint spot check."""


class InfeasibleEnergyError(GroupestError):
    """The requested energy budget is below the sector minimum."""


class UnboundedRiskError(GroupestError):
    """No finite risk exists for the requested budget (e.g. E = 0 on the line)."""


class UnsupportedStructureError(GroupestError):
    """An input matrix lacks the structure (entrywise nonnegativity) the method needs."""


class ResolutionError(GroupestError):
    """A state's bandwidth exceeds what the sampling grid can represent."""
