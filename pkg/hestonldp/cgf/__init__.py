from .combinators import base_spec, perturb, tilt
from .exceptions import (
    CgfError,
    CompositionOrderError,
    EmptyDomain,
    OutsideDomainInterior
)
from .functions import (
    analytic_domain,
    cgf_derivative,
    cgf_eval,
    cgf_grid,
    cgf_second_derivative,
    delta,
    domain_boundary,
    domain_endpoints,
    effective_domain,
    exponential_cgf,
    lambda_prime_one,
    lambda_prime_zero
)
from .models import (
    CgfSpec,
    DomainEndpoint,
    EndpointKind,
    EndpointReport,
    Side,
    SmoothnessReport,
    Truncation
)
from .smoothness import (
    DEFAULT_PROBE,
    SteepnessProbe,
    derivative_limit,
    limit_value,
    smoothness_report
)



__all__ = [
    "base_spec",
    "perturb",
    "tilt",
    "CgfError",
    "CompositionOrderError",
    "EmptyDomain",
    "OutsideDomainInterior",
    "analytic_domain",
    "cgf_derivative",
    "cgf_eval",
    "cgf_grid",
    "cgf_second_derivative",
    "delta",
    "domain_boundary",
    "domain_endpoints",
    "effective_domain",
    "exponential_cgf",
    "lambda_prime_one",
    "lambda_prime_zero",
    "CgfSpec",
    "DomainEndpoint",
    "EndpointKind",
    "EndpointReport",
    "Side",
    "SmoothnessReport",
    "Truncation",
    "DEFAULT_PROBE",
    "SteepnessProbe",
    "derivative_limit",
    "limit_value",
    "smoothness_report",
]
