"""Exception types raised across the package."""


class CityKpiError(Exception):
    """Base class for all citykpi errors."""


class EmptyResultError(CityKpiError):
    """No rows survived an operation that must return at least one."""


class MissingTargetError(CityKpiError):
    """Dataset has no target column."""


class BadFractionError(CityKpiError):
    """test_fraction outside the open interval (0, 1)."""


class WidthMismatchError(CityKpiError):
    """Feature count disagrees between two paired objects."""


class NonFiniteError(CityKpiError):
    """Training diverged into NaN or infinity."""


class SingleClassError(CityKpiError):
    """Labels contain only one class where two are required."""


class LengthMismatchError(CityKpiError):
    """Paired vectors have different lengths."""


class EmptyMatrixError(CityKpiError):
    """Confusion matrix has zero total count."""


class ZeroWeightsError(CityKpiError):
    """All weights in a weighted average are zero."""


class TooFewRowsError(CityKpiError):
    """Operation needs more rows than were supplied."""


class TooFewValuesError(CityKpiError):
    """Operation needs more values than were supplied."""


class SeriesTooShortError(CityKpiError):
    """Forecasting needs a longer series."""


class DataFormatError(CityKpiError):
    """Malformed CSV or dataset JSON."""
