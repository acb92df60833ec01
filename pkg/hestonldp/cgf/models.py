import math
from enum import Enum
from typing import Any, Dict, List

from pydantic import BaseModel, confloat, root_validator, validator

from hestonldp.cgf.exceptions import EmptyDomain
from hestonldp.model import HestonParams, validate_params



class Side(str, Enum):
    """Which way an exponential perturbation truncates the domain.

    `UPPER` models Z_t + E/t and keeps (-inf, lam); `LOWER` models Z_t - E/t
    and keeps (-lam, inf).
    """
    UPPER = "upper"
    LOWER = "lower"


class EndpointKind(str, Enum):
    ANALYTIC = "analytic"
    TRUNCATION = "truncation"


class Truncation(BaseModel):
    lam: confloat(gt=0)
    side: Side

    class Config:
        frozen = True


class CgfSpec(BaseModel):
    """Limiting cgf: the Heston cgf shifted by `tilt`, optionally truncated.

    Evaluates to Lambda(u + tilt) on the tilted analytic domain
    [u_minus - tilt, u_plus - tilt] intersected with the truncation window.
    """
    params: HestonParams
    tilt: float = 0.0
    truncation: Truncation | None = None

    @validator("params")
    def _validate_params(cls, v: HestonParams) -> HestonParams:
        return validate_params(v)

    @validator("tilt")
    def _finite_tilt(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("tilt must be finite")
        return v

    @root_validator(skip_on_failure=True)
    def _nonempty_domain(cls, v: Dict[str, Any]) -> Dict[str, Any]:
        # Local import, the functions module depends on this one.
        from hestonldp.cgf.functions import domain_endpoints

        truncation: Truncation | None = v["truncation"]
        if truncation is None:
            return v
        u_minus, u_plus = domain_endpoints(v["params"])
        lo, hi = u_minus - v["tilt"], u_plus - v["tilt"]
        if truncation.side is Side.UPPER and truncation.lam <= lo:
            raise EmptyDomain(f"upper truncation at {truncation.lam!r} <= {lo!r}")
        if truncation.side is Side.LOWER and -truncation.lam >= hi:
            raise EmptyDomain(f"lower truncation at {-truncation.lam!r} >= {hi!r}")
        return v

    class Config:
        frozen = True


class DomainEndpoint(BaseModel):
    """A boundary point of the effective domain."""
    location: float
    kind: EndpointKind
    open: bool

    class Config:
        frozen = True


class EndpointReport(BaseModel):
    """Steepness and semicontinuity verdict at one boundary point."""
    location: float
    kind: EndpointKind
    side: str
    is_steep: bool
    derivative_limit: float
    lower_semicontinuous: bool
    numerically_steep: bool
    derivative_sequence: List[float]

    def to_row(self) -> Dict[str, Any]:
        return {
            "endpoint": self.location,
            "kind": self.kind.value,
            "side": self.side,
            "is_steep": self.is_steep,
            "derivative_limit": self.derivative_limit,
            "lower_semicontinuous": self.lower_semicontinuous,
        }


class SmoothnessReport(BaseModel):
    endpoints: List[EndpointReport]
    differentiable_interior: bool = True
    essentially_smooth: bool
    divergence_threshold: float

    @property
    def lower_semicontinuous(self) -> bool:
        return all(endpoint.lower_semicontinuous for endpoint in self.endpoints)
