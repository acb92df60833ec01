from typing import List, Tuple

from hestonldp.cgf import (
    CgfSpec,
    Side,
    SteepnessProbe,
    base_spec,
    domain_endpoints,
    effective_domain,
    lambda_prime_one,
    lambda_prime_zero,
    perturb,
    smoothness_report,
    tilt
)
from hestonldp.commands.models import CommandResult, RunConfig
from hestonldp.model import HestonParams
from hestonldp.settings import SMOOTHNESS_SETTINGS



COLUMNS = [
    "family",
    "domain_lo",
    "domain_hi",
    "endpoint",
    "kind",
    "side",
    "is_steep",
    "derivative_limit",
    "lower_semicontinuous",
    "essentially_smooth",
]


def families(params: HestonParams, lam: float = 1.0) -> List[Tuple[str, CgfSpec]]:
    """The pricing, share and exponentially perturbed cgf families."""
    base = base_spec(params)
    share = tilt(base, 1.0)
    return [
        ("base", base),
        ("tilt(1)", share),
        (f"perturb({lam:g},upper)", perturb(base, lam, Side.UPPER)),
        (f"tilt(1)+perturb({lam:g},lower)", perturb(share, lam, Side.LOWER)),
    ]


def cmd_domain(config: RunConfig, probe: SteepnessProbe | None = None) -> CommandResult:
    """Domain endpoints, minimisers and smoothness of each cgf family."""
    probe = probe or SMOOTHNESS_SETTINGS.get_probe()
    params = config.params
    u_minus, u_plus = domain_endpoints(params)
    rows = []
    reports = {}
    for name, spec in families(params, config.options.get("lam", 1.0)):
        domain = effective_domain(spec)
        report = smoothness_report(spec, probe)
        reports[name] = report.dict()
        for endpoint in report.endpoints:
            rows.append(
                {
                    "family": name,
                    "domain_lo": domain.lo,
                    "domain_hi": domain.hi,
                    **endpoint.to_row(),
                    "essentially_smooth": report.essentially_smooth,
                }
            )
    return CommandResult(
        columns=COLUMNS,
        rows=rows,
        summary={
            "u_minus": u_minus,
            "u_plus": u_plus,
            "lambda_prime_zero": lambda_prime_zero(params),
            "lambda_prime_one": lambda_prime_one(params),
            "reports": reports,
        }
    )
