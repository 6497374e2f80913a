"""Exception types shared across the package."""


class RmPowerError(Exception):
    """Base class for every error raised by rmpower."""


class DomainError(RmPowerError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class InvalidDesignError(RmPowerError, ValueError):
    """A study design is structurally impossible for the requested test
    (for example g = 1 for a between-groups test, or zero error df)."""


class UnsatisfiableError(RmPowerError):
    """A solver cannot reach the requested target within its search cap."""


class DatasetError(RmPowerError, ValueError):
    """A repeated-measures dataset violates a structural invariant.

    Messages carry the offending group / subject / column so callers can
    surface the exact coordinates to the user.
    """


class ZeroVarianceError(RmPowerError):
    """An F statistic is undefined because its error mean square is zero
    while the effect sum of squares is positive."""


class SingularCovarianceError(RmPowerError):
    """The contrast covariance is singular; sphericity diagnostics are
    undefined (too few subjects relative to the number of time points)."""


class DegenerateDataError(RmPowerError):
    """The data carry no usable information for the requested test
    (for example every row fully tied in the rank test)."""


class CsvError(RmPowerError, ValueError):
    """CSV input cannot be parsed into a dataset; messages carry the
    1-based line number."""
