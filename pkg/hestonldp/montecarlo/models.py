import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, confloat, conint, root_validator

from hestonldp.asymptotics import LimitKind



_PERTURBATION_PATTERN = re.compile(r"^(?P<sign>[+-])exp:(?P<lam>.+)$")

MAX_DT = 0.1


class Measure(str, Enum):
    PRICING = "pricing"
    SHARE = "share"


class Scheme(str, Enum):
    FULL_TRUNCATION_EULER = "full_truncation_euler"
    EXACT_VARIANCE_EULER_LOG = "exact_variance_euler_log"


class Direction(str, Enum):
    BELOW = "below"
    ABOVE = "above"


class PerturbationKind(str, Enum):
    NONE = "none"
    PLUS_EXP = "plus_exp"
    MINUS_EXP = "minus_exp"


class LimitMethod(str, Enum):
    THEOREM = "theorem"
    GARTNER_ELLIS = "gartner_ellis"


class Perturbation(BaseModel):
    """An independent exponential added to or subtracted from X_t - x0."""
    kind: PerturbationKind = PerturbationKind.NONE
    lam: Optional[confloat(gt=0)] = None

    @root_validator(skip_on_failure=True)
    def _check_lam(cls, v: Dict[str, Any]) -> Dict[str, Any]:
        if v["kind"] is PerturbationKind.NONE:
            v["lam"] = None
        elif v["lam"] is None:
            raise ValueError(f"Perturbation '{v['kind'].value}' requires lam")
        return v

    @classmethod
    def parse(cls, text: str) -> "Perturbation":
        """Parse 'none', '+exp:LAMBDA' or '-exp:LAMBDA'."""
        text = text.strip().lower()
        if text == "none":
            return cls()
        match = _PERTURBATION_PATTERN.match(text)
        if match is None:
            raise ValueError(f"Invalid perturbation '{text}', expected none, +exp:LAMBDA or -exp:LAMBDA")
        kind = PerturbationKind.PLUS_EXP if match["sign"] == "+" else PerturbationKind.MINUS_EXP
        return cls(kind=kind, lam=float(match["lam"]))

    @property
    def sign(self) -> int:
        return {PerturbationKind.NONE: 0, PerturbationKind.PLUS_EXP: 1, PerturbationKind.MINUS_EXP: -1}[self.kind]

    def __str__(self) -> str:
        if self.kind is PerturbationKind.NONE:
            return "none"
        return f"{'+' if self.sign > 0 else '-'}exp:{self.lam:g}"

    class Config:
        frozen = True


class McConfig(BaseModel):
    """Simulation settings for one horizon."""
    t: confloat(gt=0)
    n_paths: conint(ge=1000)
    n_steps: conint(ge=1)
    scheme: Scheme = Scheme.FULL_TRUNCATION_EULER
    seed: conint(ge=0, lt=2**64) = 0
    measure: Measure = Measure.PRICING
    budget: conint(gt=0) = 10**9

    @root_validator(skip_on_failure=True)
    def _check_dt(cls, v: Dict[str, Any]) -> Dict[str, Any]:
        dt = v["t"] / v["n_steps"]
        if dt > MAX_DT:
            raise ValueError(f"Time step {dt!r} exceeds {MAX_DT}; increase n_steps")
        return v

    @classmethod
    def from_rate(cls, t: float, steps_per_unit_time: int, **kwargs: Any) -> "McConfig":
        """Build a config with ceil(t * steps_per_unit_time) steps."""
        n_steps = max(1, math.ceil(t * steps_per_unit_time - 1e-9))
        return cls(t=t, n_steps=n_steps, **kwargs)

    @property
    def dt(self) -> float:
        return self.t / self.n_steps

    def with_horizon(self, t: float) -> "McConfig":
        """Same config at horizon `t`, keeping the time step."""
        n_steps = max(1, round(t / self.dt))
        return McConfig(**{**self.dict(), "t": t, "n_steps": n_steps})

    def with_measure(self, measure: Measure) -> "McConfig":
        return McConfig(**{**self.dict(), "measure": measure})

    class Config:
        frozen = True


@dataclass(frozen=True)
class TerminalSample:
    """Terminal log-spot and variance of every simulated path."""
    x: np.ndarray
    y: np.ndarray
    x0: float
    config: McConfig

    @property
    def log_return(self) -> np.ndarray:
        """X_t - x0."""
        return self.x - self.x0

    @property
    def n_paths(self) -> int:
        return self.x.shape[0]


class TailEstimate(BaseModel):
    """Binomial estimate of a tail probability and its scaled logarithm.

    When no path hits the event `no_hits` is set, `scaled_log` is -inf and
    no confidence interval is reported.
    """
    p_hat: confloat(ge=0, le=1)
    std_err: float
    scaled_log: float
    scaled_log_ci: Optional[Tuple[float, float]]
    n_hits: int
    n_paths: int
    t: float
    no_hits: bool

    @classmethod
    def from_counts(cls, n_hits: int, n_paths: int, t: float, z: float = 1.96) -> "TailEstimate":
        p_hat = n_hits / n_paths
        std_err = math.sqrt(p_hat * (1.0 - p_hat) / n_paths)
        if n_hits == 0:
            return cls(
                p_hat=0.0,
                std_err=0.0,
                scaled_log=-math.inf,
                scaled_log_ci=None,
                n_hits=0,
                n_paths=n_paths,
                t=t,
                no_hits=True
            )
        scaled_log = math.log(p_hat) / t
        half_width = z * (std_err / p_hat) / t
        return cls(
            p_hat=p_hat,
            std_err=std_err,
            scaled_log=scaled_log,
            scaled_log_ci=(scaled_log - half_width, scaled_log + half_width),
            n_hits=n_hits,
            n_paths=n_paths,
            t=t,
            no_hits=False
        )


class CgfEstimate(BaseModel):
    """Empirical (1/t) log E[exp(u (X_t - x0))] next to its limit."""
    u: float
    t: float
    value: float
    std_err: float
    analytic: float


class PairedGap(BaseModel):
    """Difference of two probabilities estimated on common paths."""
    name: str
    estimate: float
    std_err: float
    ci: Tuple[float, float]
    holds: bool


class OrderingReport(BaseModel):
    x: float
    t: float
    lam1: float
    lam2: float
    direction: Direction
    coupled: bool
    p_lam1: TailEstimate
    p_lam2: TailEstimate
    p_none: TailEstimate
    gaps: List[PairedGap]
    pathwise: Optional[bool] = None
    passed: bool


class RepresentationReport(BaseModel):
    """Option price estimated directly and through an exponential-threshold
    probability.
    """
    strike: float
    t: float
    direct: float
    direct_std_err: float
    representation: float
    representation_std_err: float
    difference: float
    joint_std_err: float
    passed: bool


class MomentReport(BaseModel):
    """A Monte Carlo estimate compared against a reference value."""
    name: str
    estimate: float
    std_err: float
    reference: float
    reference_std_err: float = 0.0
    passed: bool


class ConvergenceRow(BaseModel):
    t: float
    p_hat: float
    std_err: float
    scaled_log: float
    ci_lo: Optional[float]
    ci_hi: Optional[float]
    theoretical_limit: float
    gap: Optional[float]


class ConvergenceTable(BaseModel):
    x: float
    measure: Measure
    perturbation: Perturbation
    direction: Direction
    method: LimitMethod
    kind: Optional[LimitKind]
    proven: bool
    theoretical_limit: float
    rows: List[ConvergenceRow]

    @property
    def final_gap(self) -> Optional[float]:
        gaps = [row.gap for row in self.rows if row.gap is not None]
        return gaps[-1] if gaps else None

    @property
    def gap_decreasing(self) -> bool:
        gaps = [row.gap for row in self.rows if row.gap is not None]
        return len(gaps) > 0 and all(b <= a for a, b in zip(gaps, gaps[1:]))
