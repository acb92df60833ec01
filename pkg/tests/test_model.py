import math

import orjson
import pytest
from pydantic import ValidationError

from hestonldp.model import (
    REFERENCE_PARAMS,
    CorrelationOutOfRange,
    HestonParams,
    Interval,
    NonPositiveParameter,
    StandingAssumptionViolated,
    extended,
    extended_add,
    interval_contains,
    load_params,
    validate_params
)


def _params(**overrides) -> dict:
    return {**REFERENCE_PARAMS.dict(), **overrides}


def test_reference_params_are_valid():
    assert validate_params(REFERENCE_PARAMS) == REFERENCE_PARAMS


def test_validate_from_mapping():
    params = validate_params(_params(rho=-0.5))
    assert isinstance(params, HestonParams)
    assert params.rho == -0.5


@pytest.mark.parametrize("name", ["kappa", "theta", "sigma", "y0"])
@pytest.mark.parametrize("value", [0.0, -1.0])
def test_non_positive_parameter(name, value):
    with pytest.raises(NonPositiveParameter) as exc_info:
        validate_params(_params(**{name: value}))
    assert exc_info.value.name == name


@pytest.mark.parametrize("rho", [1.0, -1.0, 1.5])
def test_correlation_out_of_range(rho):
    with pytest.raises(CorrelationOutOfRange):
        validate_params(_params(rho=rho))


def test_standing_assumption():
    # rho*sigma - kappa = 0.9*3 - 2 > 0
    with pytest.raises(StandingAssumptionViolated):
        validate_params(_params(rho=0.9, sigma=3.0))


def test_unknown_and_missing_keys_rejected():
    with pytest.raises(ValidationError):
        validate_params({**_params(), "lambda": 1.0})
    data = _params()
    del data["x0"]
    with pytest.raises(ValidationError):
        validate_params(data)


def test_non_finite_rejected():
    with pytest.raises(ValidationError):
        HestonParams(**_params(theta=math.nan))
    with pytest.raises(ValidationError):
        HestonParams(**_params(kappa=math.inf))


def test_share_kappa_and_chi(correlated_params):
    assert correlated_params.chi == pytest.approx(-0.7 * 0.6 - 1.5)
    assert correlated_params.share_kappa == pytest.approx(1.5 + 0.7 * 0.6)


def test_load_params(tmp_path):
    path = tmp_path / "params.json"
    path.write_bytes(orjson.dumps(_params(rho=-0.3)))
    assert load_params(path).rho == -0.3


def test_interval_contains_respects_openness():
    interval = Interval(lo=-1.0, hi=2.0, hi_open=True)
    assert interval_contains(interval, -1.0)
    assert interval_contains(interval, 1.999)
    assert not interval_contains(interval, 2.0)
    assert not interval_contains(interval, math.nan)
    assert not interval_contains(Interval.empty(), 0.0)


def test_infinite_ends_are_open():
    interval = Interval(lo=-math.inf, hi=0.0)
    assert interval.lo_open
    assert not interval.contains(-math.inf)
    assert interval.contains(-1e300)


def test_interval_rejects_reversed_bounds():
    with pytest.raises(ValidationError):
        Interval(lo=1.0, hi=0.0)


def test_degenerate_interval():
    point = Interval.closed(0.5, 0.5)
    assert point.is_degenerate
    assert point.contains(0.5)
    assert point.interior().is_empty


def test_intersect_keeps_open_cut():
    domain = Interval.closed(-1.56, 2.56)
    cut = Interval(lo=-math.inf, hi=1.0, hi_open=True)
    result = domain.intersect(cut)
    assert result == Interval(lo=-1.56, hi=1.0, hi_open=True)
    assert Interval.closed(0.0, 1.0).intersect(Interval.open(1.0, 2.0)).is_empty


def test_extended_reals():
    assert extended(3) == 3.0
    assert extended(math.inf) == math.inf
    with pytest.raises(ValueError):
        extended(math.nan)
    with pytest.raises(ValueError):
        extended(-math.inf)
    assert extended_add(1.0, math.inf) == math.inf
    assert extended_add(1.0, 2.0) == 3.0
