import logging
import math
from dataclasses import dataclass
from typing import Callable, Tuple

from scipy.optimize import brentq

from hestonldp.cgf import (
    CgfSpec,
    DomainEndpoint,
    EmptyDomain,
    base_spec,
    cgf_derivative,
    cgf_eval,
    derivative_limit,
    domain_boundary,
    effective_domain,
    limit_value,
    tilt
)
from hestonldp.legendre.exceptions import EmptyInterval
from hestonldp.legendre.models import RatePoint
from hestonldp.model import HestonParams, Interval



_LOGGER = logging.getLogger("hestonldp.legendre")


@dataclass(frozen=True)
class ConjugateSolver:
    """Fenchel-Legendre transform of a `CgfSpec` by root finding on Lambda'.

    Lambda' is strictly increasing on the interior of the domain, so the
    maximiser of u*x - Lambda(u) solves Lambda'(u) = x. The root is bracketed
    by stepping geometrically from a reference point toward the relevant
    endpoint and then refined with Brent's method.

    Args:
        tolerance: Absolute tolerance on the maximiser.
        max_iterations: Iteration cap for the root finder.
        bracket_halvings: Number of geometric steps toward an endpoint before
            the supremum is reported at the endpoint itself.
    """
    tolerance: float = 1e-12
    max_iterations: int = 200
    bracket_halvings: int = 60

    def conjugate(self, spec: CgfSpec, x: float) -> RatePoint:
        """Evaluate sup{u*x - Lambda(u)} and its maximiser.

        Raises:
            EmptyDomain: The spec has an empty effective domain.
        """
        if not math.isfinite(x):
            raise ValueError(f"x must be finite, got {x!r}")
        domain = effective_domain(spec)
        if domain.is_empty or domain.is_degenerate:
            raise EmptyDomain(f"no interior in {domain}")

        interior = domain.interior()
        u_ref = 0.0 if interior.contains(0.0) else 0.5 * (domain.lo + domain.hi)
        d_ref = cgf_derivative(spec, u_ref)
        if x == d_ref:
            return self._point(spec, x, u_ref, True)

        left, right = domain_boundary(spec)
        if x > d_ref:
            endpoint, is_right = right, True
        else:
            endpoint, is_right = left, False

        limit = derivative_limit(spec, endpoint, is_right)
        if (is_right and x >= limit) or (not is_right and x <= limit):
            return self._at_endpoint(spec, x, endpoint)

        bracket = self._bracket(spec, x, u_ref, endpoint.location, is_right)
        if bracket is None:
            _LOGGER.warning(
                "No bracket for x=%r within %i steps of %r, reporting the endpoint supremum",
                x,
                self.bracket_halvings,
                endpoint.location
            )
            return self._at_endpoint(spec, x, endpoint)

        f: Callable[[float], float] = lambda u: cgf_derivative(spec, u) - x
        a, b = bracket
        u_star = brentq(f, a, b, xtol=self.tolerance, maxiter=self.max_iterations)
        return self._point(spec, x, u_star, True)

    def _bracket(
        self,
        spec: CgfSpec,
        x: float,
        u_ref: float,
        boundary: float,
        right: bool
    ) -> Tuple[float, float] | None:
        """Walk u_k = b - (b - u_ref)*2**-k until Lambda'(u_k) passes x."""
        inner = u_ref
        span = boundary - u_ref
        for k in range(1, self.bracket_halvings + 1):
            u = boundary - span * 2.0 ** (-k)
            if u == boundary:
                break
            d = cgf_derivative(spec, u)
            if (right and d >= x) or (not right and d <= x):
                _LOGGER.debug("Bracketed x=%r after %i steps", x, k)
                return (inner, u) if right else (u, inner)
            inner = u
        return None

    def _point(self, spec: CgfSpec, x: float, u: float, attained: bool) -> RatePoint:
        value = u * x - cgf_eval(spec, u)
        if -1e-14 < value < 0.0:
            value = 0.0
        return RatePoint(x=x, value=value, maximizer=u, attained=attained)

    def _at_endpoint(self, spec: CgfSpec, x: float, endpoint: DomainEndpoint) -> RatePoint:
        # The objective increases all the way to the endpoint; its supremum is
        # the one-sided limit there.
        b = endpoint.location
        value = b * x - limit_value(spec, endpoint)
        return RatePoint(x=x, value=value, maximizer=b, attained=False)


DEFAULT_SOLVER = ConjugateSolver()


def conjugate(spec: CgfSpec, x: float, solver: ConjugateSolver = DEFAULT_SOLVER) -> RatePoint:
    """Fenchel-Legendre transform of `spec` at `x`."""
    return solver.conjugate(spec, x)


def rate(spec: CgfSpec, x: float, solver: ConjugateSolver = DEFAULT_SOLVER) -> float:
    return solver.conjugate(spec, x).value


def tilted_rate(params: HestonParams, x: float, solver: ConjugateSolver = DEFAULT_SOLVER) -> float:
    """Rate function under the share measure, equal to Lambda*(x) - x."""
    return solver.conjugate(tilt(base_spec(params), 1.0), x).value


def rate_minimizer(spec: CgfSpec) -> float:
    """Lambda'(0), where the rate function of a proper cgf vanishes.

    Raises:
        EmptyDomain: 0 is not an interior point of the effective domain.
    """
    domain = effective_domain(spec)
    if not domain.interior().contains(0.0):
        raise EmptyDomain(f"0 is not interior to {domain}")
    return cgf_derivative(spec, 0.0)


def rate_infimum(spec: CgfSpec, interval: Interval, solver: ConjugateSolver = DEFAULT_SOLVER) -> float:
    """inf of the rate function over `interval`.

    The rate function is convex with its minimum at `rate_minimizer`, so the
    infimum is attained at the minimiser when the closure of `interval`
    contains it and otherwise at the endpoint nearest to it. The rate
    function is continuous, so endpoint openness does not change the value.

    Raises:
        EmptyInterval: `interval` is empty.
    """
    if interval.is_empty:
        raise EmptyInterval(interval)
    x_min = rate_minimizer(spec)
    if interval.closure().contains(x_min):
        return -cgf_eval(spec, 0.0) + 0.0
    nearest = interval.hi if interval.hi < x_min else interval.lo
    return solver.conjugate(spec, nearest).value


def ldp_bounds(
    spec: CgfSpec,
    interval: Interval,
    solver: ConjugateSolver = DEFAULT_SOLVER
) -> Tuple[float, float]:
    """Lower and upper large deviation bounds for P[Z_t in interval].

    Returns:
        bounds: (-inf over the interior, -inf over the closure), using
            inf of the empty set = +inf.
    """
    if interval.is_empty:
        raise EmptyInterval(interval)
    interior = interval.interior()
    lower = -math.inf if interior.is_empty else -rate_infimum(spec, interior, solver)
    upper = -rate_infimum(spec, interval.closure(), solver)
    return lower, upper
