import logging
import os
from collections.abc import Mapping
from typing import Any

import orjson

from hestonldp.model.exceptions import (
    CorrelationOutOfRange,
    NonPositiveParameter,
    StandingAssumptionViolated
)
from hestonldp.model.models import HestonParams, Interval



_LOGGER = logging.getLogger("hestonldp.model")

REFERENCE_PARAMS = HestonParams(kappa=2.0, theta=0.1, sigma=1.0, rho=0.0, y0=0.1, x0=0.0)


def validate_params(params: HestonParams | Mapping[str, Any]) -> HestonParams:
    """Check a parameter set against the model constraints.

    Args:
        params: A `HestonParams` instance or a mapping with exactly the keys
            kappa, theta, sigma, rho, y0, x0.

    Returns:
        params: The validated parameters, unchanged.

    Raises:
        ValidationError: `params` is a mapping with missing, unknown or
            non-numeric keys.
        NonPositiveParameter: kappa, theta, sigma or y0 is not strictly positive.
        CorrelationOutOfRange: rho is not inside (-1, 1).
        StandingAssumptionViolated: rho*sigma - kappa >= 0.
    """
    if not isinstance(params, HestonParams):
        params = HestonParams.parse_obj(params)
    for name in ("kappa", "theta", "sigma", "y0"):
        value = getattr(params, name)
        if value <= 0:
            raise NonPositiveParameter(name, value)
    if not -1 < params.rho < 1:
        raise CorrelationOutOfRange(params.rho)
    if params.chi >= 0:
        raise StandingAssumptionViolated(params.kappa, params.sigma, params.rho)
    return params


def load_params(path: os.PathLike | str) -> HestonParams:
    """Read and validate parameters from a JSON file."""
    with open(path, "rb") as fh:
        data = orjson.loads(fh.read())
    if not isinstance(data, dict):
        raise TypeError(f"Expected a JSON object in {path}, got {type(data).__name__}")
    params = validate_params(data)
    _LOGGER.debug("Loaded parameters from %s: %r", path, params)
    return params


def interval_contains(interval: Interval, u: float) -> bool:
    """Membership test respecting endpoint openness."""
    return interval.contains(u)
