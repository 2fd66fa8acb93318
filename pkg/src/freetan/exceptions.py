"""Shared exception types."""


class ConsistencyError(RuntimeError):
    """Two independent computation routes for the same quantity disagree."""


class ResourceLimitError(ValueError):
    """Requested size exceeds the documented enumeration/size bound."""


class NumericError(RuntimeError):
    """An iterative numeric procedure failed to converge or lost validity."""


class DegenerateFamilyError(ValueError):
    """Parameter combination falls outside the b != 0 matrix family."""


class PoleError(ValueError):
    """Evaluation point is too close to a pole of the transform."""

    def __init__(self, message, nearest_pole=None):
        super().__init__(message)
        self.nearest_pole = nearest_pole
