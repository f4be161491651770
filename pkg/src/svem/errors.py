"""Exception types shared across the toolkit."""


class SvemError(Exception):
    """Base class for toolkit-specific failures."""


class DegenerateWeightsError(SvemError):
    """Raised when a weight vector carries no usable mass (all zeros)."""


class ConvergenceError(SvemError):
    """Coordinate descent failed to converge at one penalty grid point."""

    def __init__(self, message: str, lambda_index: int):
        super().__init__(message)
        self.lambda_index = lambda_index


class CriterionInfeasibleError(SvemError):
    """No path point is admissible under the requested information criterion."""


class CsvFormatError(SvemError):
    """Malformed delimited input; message carries the row/column position."""
