import logging
import math
from dataclasses import dataclass
from typing import List

from hestonldp.cgf.functions import (
    analytic_domain,
    base_cgf,
    base_derivative,
    domain_boundary,
    effective_domain
)
from hestonldp.cgf.models import (
    CgfSpec,
    DomainEndpoint,
    EndpointKind,
    EndpointReport,
    SmoothnessReport
)



_LOGGER = logging.getLogger("hestonldp.cgf")


def derivative_limit(spec: CgfSpec, endpoint: DomainEndpoint, right: bool) -> float:
    """One-sided limit of the derivative at a boundary point.

    At analytic endpoints the limit is infinite. At a truncation endpoint the
    derivative of the untruncated cgf is continuous, so the limit is its value
    there (infinite only when the cut sits on an analytic endpoint).
    """
    if endpoint.kind is EndpointKind.ANALYTIC:
        return math.inf if right else -math.inf
    return base_derivative(spec.params, endpoint.location + spec.tilt)


def limit_value(spec: CgfSpec, endpoint: DomainEndpoint) -> float:
    """lim Lambda(u) as u approaches the endpoint from inside the domain."""
    if analytic_domain(spec).contains(endpoint.location):
        return base_cgf(spec.params, endpoint.location + spec.tilt)
    return math.inf


@dataclass(frozen=True)
class SteepnessProbe:
    """Numerical steepness test along b -/+ 10**-k, k = first..last.

    An endpoint is numerically steep when |Lambda'| along the sequence ends
    above `threshold` and increases over the `trailing` last terms.
    """
    threshold: float = 1e6
    first_exponent: int = 2
    last_exponent: int = 12
    trailing: int = 4

    def sequence(self, spec: CgfSpec, endpoint: DomainEndpoint, right: bool) -> List[float]:
        domain = effective_domain(spec)
        midpoint = 0.5 * (domain.lo + domain.hi)
        values = []
        for k in range(self.first_exponent, self.last_exponent + 1):
            step = 10.0 ** (-k)
            if right:
                u = max(endpoint.location - step, midpoint)
            else:
                u = min(endpoint.location + step, midpoint)
            values.append(abs(base_derivative(spec.params, u + spec.tilt)))
        return values

    def is_divergent(self, values: List[float]) -> bool:
        tail = values[-self.trailing:]
        increasing = all(b > a for a, b in zip(tail, tail[1:]))
        return increasing and tail[-1] > self.threshold

    def report(self, spec: CgfSpec) -> SmoothnessReport:
        endpoints = []
        for endpoint, right in zip(domain_boundary(spec), (False, True)):
            values = self.sequence(spec, endpoint, right)
            numerically_steep = self.is_divergent(values)
            limit = derivative_limit(spec, endpoint, right)
            if endpoint.kind is EndpointKind.ANALYTIC:
                is_steep = True
                lsc = True
            else:
                is_steep = numerically_steep or math.isinf(limit)
                # Lambda = +inf at the open cut, so lsc fails iff the inner
                # limit is finite.
                lsc = math.isinf(limit_value(spec, endpoint))
            if is_steep != numerically_steep:
                _LOGGER.debug(
                    "Numerical steepness disagrees with classification at %r (%s)",
                    endpoint.location,
                    endpoint.kind.value,
                    extra={"sequence": values}
                )
            endpoints.append(
                EndpointReport(
                    location=endpoint.location,
                    kind=endpoint.kind,
                    side="right" if right else "left",
                    is_steep=is_steep,
                    derivative_limit=limit,
                    lower_semicontinuous=lsc,
                    numerically_steep=numerically_steep,
                    derivative_sequence=values
                )
            )
        return SmoothnessReport(
            endpoints=endpoints,
            essentially_smooth=all(endpoint.is_steep for endpoint in endpoints),
            divergence_threshold=self.threshold
        )


DEFAULT_PROBE = SteepnessProbe()


def smoothness_report(spec: CgfSpec, probe: SteepnessProbe = DEFAULT_PROBE) -> SmoothnessReport:
    """Classify essential smoothness and lower semicontinuity of `spec`."""
    return probe.report(spec)
