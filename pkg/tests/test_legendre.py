import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hestonldp.cgf import (
    EmptyDomain,
    Side,
    base_spec,
    cgf_eval,
    cgf_grid,
    domain_endpoints,
    lambda_prime_zero,
    perturb
)
from hestonldp.legendre import (
    ConjugateSolver,
    EmptyInterval,
    conjugate,
    ldp_bounds,
    rate,
    rate_infimum,
    rate_minimizer,
    tilted_rate
)
from hestonldp.model import Interval

from strategies import heston_params


def test_grid_oracle(spec, params):
    u_minus, u_plus = domain_endpoints(params)
    u = np.linspace(u_minus, u_plus, 10**6)
    values = cgf_grid(spec, u)
    for x in np.linspace(-1.0, 1.0, 50):
        oracle = np.max(u * x - values)
        assert rate(spec, float(x)) == pytest.approx(oracle, abs=1e-6)


def test_fenchel_young(spec, params):
    u_minus, u_plus = domain_endpoints(params)
    rng = np.random.default_rng(2024)
    for u, x in zip(rng.uniform(u_minus, u_plus, 1000), rng.uniform(-1.0, 1.0, 1000)):
        assert cgf_eval(spec, float(u)) + rate(spec, float(x)) >= u * x - 1e-9


def test_maximiser_solves_first_order_condition(spec):
    for x in (-0.8, -0.05, 0.0, 0.3, 2.0):
        point = conjugate(spec, x)
        assert point.attained
        assert point.value == pytest.approx(point.maximizer * x - cgf_eval(spec, point.maximizer), abs=1e-12)


def test_zero_at_minimiser(spec, share_spec):
    assert rate_minimizer(spec) == pytest.approx(-0.05)
    assert rate(spec, -0.05) == pytest.approx(0.0, abs=1e-14)
    assert conjugate(spec, -0.05).maximizer == pytest.approx(0.0, abs=1e-9)
    assert rate_minimizer(share_spec) == pytest.approx(0.05)
    assert rate(share_spec, 0.05) == pytest.approx(0.0, abs=1e-12)


def test_tilt_identity(spec, params):
    for x in np.linspace(-1.0, 1.0, 100):
        x = float(x)
        assert tilted_rate(params, x) == pytest.approx(rate(spec, x) - x, abs=1e-9)


def test_symmetry_without_correlation(spec):
    # Lambda(u) = Lambda(1 - u) implies Lambda*(x) = x + Lambda*(-x).
    for x in (0.1, 0.25, 0.5):
        assert rate(spec, x) == pytest.approx(x + rate(spec, -x), abs=1e-9)


def test_biconjugate_recovers_cgf(spec):
    xs = np.linspace(-0.5, 0.5, 1001)
    rates = np.array([rate(spec, float(x)) for x in xs])
    for u in (-0.5, 0.5, 1.5):
        assert np.max(u * xs - rates) == pytest.approx(cgf_eval(spec, u), abs=1e-4)


def test_supremum_at_cut(put_spec):
    # Past Lambda'(1) the objective increases up to the open cut at 1.
    point = conjugate(put_spec, 0.5)
    assert not point.attained
    assert point.maximizer == 1.0
    assert point.value == pytest.approx(0.5, abs=1e-12)
    assert conjugate(put_spec, -0.2).attained


@given(heston_params(), st.floats(-2.0, 2.0))
def test_rate_is_non_negative(params, x):
    assert rate(base_spec(params), x) >= 0.0


@given(heston_params(), st.floats(-1.0, 1.0), st.floats(0.01, 0.5))
def test_rate_is_strictly_convex(params, x, h):
    spec = base_spec(params)
    mid = rate(spec, x)
    assert rate(spec, x - h) + rate(spec, x + h) > 2 * mid


@given(heston_params(), st.floats(0.05, 5.0), st.floats(0.0, 1.0))
def test_upper_cut_leaves_left_tail_rate_unchanged(params, lam, offset):
    spec = base_spec(params)
    x = lambda_prime_zero(params) - offset
    cut = perturb(spec, lam, Side.UPPER)
    assert rate(cut, x) == pytest.approx(rate(spec, x), rel=1e-9, abs=1e-12)


@given(heston_params(), st.floats(0.0, 2.0), st.floats(-2.0, 2.0))
def test_cut_beyond_domain_leaves_rate_unchanged(params, extra, x):
    spec = base_spec(params)
    _, u_plus = domain_endpoints(params)
    cut = perturb(spec, u_plus + extra, Side.UPPER)
    assert rate(cut, x) == pytest.approx(rate(spec, x), rel=1e-9, abs=1e-12)


def test_cut_inside_domain_changes_right_tail(spec, put_spec):
    # Past Lambda'(1) the supremum sits at the cut: x - Lambda(1) = x.
    assert rate(put_spec, -0.3) == pytest.approx(rate(spec, -0.3), rel=1e-9)
    assert rate(put_spec, 0.5) == pytest.approx(0.5, abs=1e-12)
    assert rate(put_spec, 0.5) < rate(spec, 0.5)


def test_rate_infimum(spec):
    below = Interval(lo=-math.inf, hi=-0.5, hi_open=True)
    assert rate_infimum(spec, below) == pytest.approx(rate(spec, -0.5))
    assert rate_infimum(spec, Interval.closed(-0.2, 0.2)) == 0.0
    above = Interval(lo=0.5, hi=math.inf, lo_open=True)
    assert rate_infimum(spec, above) == pytest.approx(rate(spec, 0.5))
    with pytest.raises(EmptyInterval):
        rate_infimum(spec, Interval.empty())


def test_ldp_bounds(spec):
    lower, upper = ldp_bounds(spec, Interval.closed(-1.0, -0.5))
    assert lower == pytest.approx(upper)
    assert upper == pytest.approx(-rate(spec, -0.5))
    lower, upper = ldp_bounds(spec, Interval.closed(-0.5, -0.5))
    assert lower == -math.inf
    assert upper == pytest.approx(-rate(spec, -0.5))


def test_minimiser_needs_interior_zero(spec):
    from hestonldp.cgf import tilt

    with pytest.raises(EmptyDomain):
        rate_minimizer(tilt(spec, 3.0))


def test_solver_settings_are_used(spec):
    coarse = ConjugateSolver(tolerance=1e-4)
    assert rate(spec, -0.5, coarse) == pytest.approx(rate(spec, -0.5), abs=1e-6)


def test_non_finite_x_rejected(spec):
    with pytest.raises(ValueError):
        conjugate(spec, math.nan)
