"""Closed-form limiting cgf of the Heston log-spot and its derivatives.

For Z_t = (X_t - x0)/t the limiting cgf is

    Lambda(u) = -(theta*kappa/sigma^2) * (u*rho*sigma - kappa + sqrt(Delta(u)))

on [u_minus, u_plus], the zero set boundary of the quadratic
Delta(u) = (u*rho*sigma - kappa)^2 - sigma^2*(u^2 - u). Outside that interval
the cgf is +inf.
"""
import functools
import math
from typing import Tuple

import numpy as np

from hestonldp.cgf.exceptions import OutsideDomainInterior
from hestonldp.cgf.models import CgfSpec, DomainEndpoint, EndpointKind, Side
from hestonldp.model import POSITIVE_INFINITY, ExtendedReal, HestonParams, Interval



def delta(params: HestonParams, u: float) -> float:
    """The quadratic whose zeros bound the effective domain."""
    a = u * (params.rho * params.sigma) - params.kappa
    return a * a - params.sigma * params.sigma * (u * u - u)


def delta_prime(params: HestonParams, u: float) -> float:
    rs = params.rho * params.sigma
    return 2.0 * rs * (u * rs - params.kappa) - params.sigma * params.sigma * (2.0 * u - 1.0)


def delta_second(params: HestonParams) -> float:
    return -2.0 * params.sigma * params.sigma * (1.0 - params.rho * params.rho)


def domain_endpoints(params: HestonParams) -> Tuple[float, float]:
    """Zeros (u_minus, u_plus) of `delta`, with u_minus < 0 < 1 < u_plus."""
    k_over_s = params.kappa / params.sigma
    root = math.sqrt((k_over_s - params.rho) * k_over_s + 0.25)
    center = 0.5 - params.rho * k_over_s
    scale = 1.0 - params.rho * params.rho
    return (center - root) / scale, (center + root) / scale


def _scale(params: HestonParams) -> float:
    return params.theta * params.kappa / (params.sigma * params.sigma)


def base_cgf(params: HestonParams, v: float) -> float:
    """Heston cgf at v, with v assumed inside [u_minus, u_plus].

    Negative roundoff in `delta` near the endpoints is clamped to zero.
    """
    d = delta(params, v)
    if d < 0.0:
        d = 0.0
    return -_scale(params) * (v * (params.rho * params.sigma) - params.kappa + math.sqrt(d))


def base_derivative(params: HestonParams, v: float) -> float:
    """First derivative of the Heston cgf at v.

    Diverges to -inf at u_minus and +inf at u_plus.
    """
    d = delta(params, v)
    dp = delta_prime(params, v)
    if d <= 0.0:
        return math.copysign(math.inf, -dp)
    return -_scale(params) * (params.rho * params.sigma + dp / (2.0 * math.sqrt(d)))


def base_second_derivative(params: HestonParams, v: float) -> float:
    d = delta(params, v)
    if d <= 0.0:
        return math.inf
    dp = delta_prime(params, v)
    root = math.sqrt(d)
    return _scale(params) * (dp * dp / (4.0 * d * root) - delta_second(params) / (2.0 * root))


def analytic_domain(spec: CgfSpec) -> Interval:
    """[u_minus - tilt, u_plus - tilt], ignoring any truncation."""
    u_minus, u_plus = domain_endpoints(spec.params)
    return Interval.closed(u_minus - spec.tilt, u_plus - spec.tilt)


def truncation_window(spec: CgfSpec) -> Interval:
    truncation = spec.truncation
    if truncation is None:
        return Interval(lo=-math.inf, hi=math.inf)
    if truncation.side is Side.UPPER:
        return Interval(lo=-math.inf, hi=truncation.lam, hi_open=True)
    return Interval(lo=-truncation.lam, hi=math.inf, lo_open=True)


@functools.lru_cache(maxsize=256)
def effective_domain(spec: CgfSpec) -> Interval:
    """The set where the cgf is finite."""
    return analytic_domain(spec).intersect(truncation_window(spec))


@functools.lru_cache(maxsize=256)
def domain_boundary(spec: CgfSpec) -> Tuple[DomainEndpoint, DomainEndpoint]:
    """Left and right endpoints of the effective domain with their origin."""
    domain = effective_domain(spec)
    # Analytic endpoints are closed. A cut is open, also when it lands exactly
    # on an analytic endpoint.
    left_kind = EndpointKind.TRUNCATION if domain.lo_open else EndpointKind.ANALYTIC
    right_kind = EndpointKind.TRUNCATION if domain.hi_open else EndpointKind.ANALYTIC
    return (
        DomainEndpoint(location=domain.lo, kind=left_kind, open=domain.lo_open),
        DomainEndpoint(location=domain.hi, kind=right_kind, open=domain.hi_open),
    )


def _shift(spec: CgfSpec, u: float) -> float:
    """Map u to the base argument u + tilt, clamped onto [u_minus, u_plus]."""
    u_minus, u_plus = domain_endpoints(spec.params)
    return min(max(u + spec.tilt, u_minus), u_plus)


def cgf_eval(spec: CgfSpec, u: float) -> ExtendedReal:
    """Evaluate the limiting cgf, +inf off the effective domain."""
    if math.isnan(u):
        raise ValueError("u cannot be NaN")
    if not effective_domain(spec).contains(u):
        return POSITIVE_INFINITY
    return base_cgf(spec.params, _shift(spec, u))


def cgf_grid(spec: CgfSpec, u: np.ndarray) -> np.ndarray:
    """Vectorised `cgf_eval`."""
    u = np.asarray(u, dtype=float)
    params = spec.params
    domain = effective_domain(spec)
    inside = (u > domain.lo) | ((u == domain.lo) & (not domain.lo_open))
    inside &= (u < domain.hi) | ((u == domain.hi) & (not domain.hi_open))
    u_minus, u_plus = domain_endpoints(params)
    v = np.clip(u + spec.tilt, u_minus, u_plus)
    rs = params.rho * params.sigma
    a = v * rs - params.kappa
    d = np.maximum(a * a - params.sigma * params.sigma * (v * v - v), 0.0)
    values = -_scale(params) * (a + np.sqrt(d))
    return np.where(inside, values, np.inf)


def _require_interior(spec: CgfSpec, u: float) -> None:
    domain = effective_domain(spec)
    if not domain.lo < u < domain.hi:
        raise OutsideDomainInterior(u, domain)


def cgf_derivative(spec: CgfSpec, u: float) -> ExtendedReal:
    """First derivative on the interior of the effective domain.

    Raises:
        OutsideDomainInterior: `u` is not an interior point.
    """
    _require_interior(spec, u)
    return base_derivative(spec.params, _shift(spec, u))


def cgf_second_derivative(spec: CgfSpec, u: float) -> ExtendedReal:
    """Second derivative on the interior of the effective domain.

    Raises:
        OutsideDomainInterior: `u` is not an interior point.
    """
    _require_interior(spec, u)
    return base_second_derivative(spec.params, _shift(spec, u))


def exponential_cgf(lam: float, u: float) -> ExtendedReal:
    """log E[exp(u*E)] for E ~ Exp(lam): log(lam/(lam - u)) when u < lam."""
    if lam <= 0:
        raise ValueError(f"lam must be positive, got {lam!r}")
    if u >= lam:
        return POSITIVE_INFINITY
    return math.log(lam / (lam - u))


def lambda_prime_zero(params: HestonParams) -> float:
    """Minimiser of the rate function under the pricing measure, -theta/2."""
    return -0.5 * params.theta


def lambda_prime_one(params: HestonParams) -> float:
    """Minimiser of the rate function under the share measure,
    theta*kappa / (2*(kappa - rho*sigma)).
    """
    return 0.5 * params.theta * params.kappa / params.share_kappa
