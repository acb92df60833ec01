from .exceptions import (
    CorrelationOutOfRange,
    NonPositiveParameter,
    ParameterError,
    StandingAssumptionViolated
)
from .models import HestonParams, Interval
from .types import POSITIVE_INFINITY, ExtendedReal, extended, extended_add
from .validation import (
    REFERENCE_PARAMS,
    interval_contains,
    load_params,
    validate_params
)



__all__ = [
    "CorrelationOutOfRange",
    "NonPositiveParameter",
    "ParameterError",
    "StandingAssumptionViolated",
    "HestonParams",
    "Interval",
    "POSITIVE_INFINITY",
    "ExtendedReal",
    "extended",
    "extended_add",
    "REFERENCE_PARAMS",
    "interval_contains",
    "load_params",
    "validate_params",
]
