import math
from typing import Any, Dict

from pydantic import BaseModel, root_validator



class HestonParams(BaseModel):
    """Heston model constants.

    Construction only checks that every field is a finite number. The model
    constraints (positivity, correlation range and rho*sigma - kappa < 0) are
    enforced by `validate_params`.
    """
    kappa: float
    theta: float
    sigma: float
    rho: float
    y0: float
    x0: float

    @root_validator(skip_on_failure=True)
    def _reject_non_finite(cls, v: Dict[str, Any]) -> Dict[str, Any]:
        for name, value in v.items():
            if not math.isfinite(value):
                raise ValueError(f"Parameter '{name}' must be finite, got {value!r}")
        return v

    @property
    def chi(self) -> float:
        """rho*sigma - kappa, negative for every accepted parameter set."""
        return self.rho * self.sigma - self.kappa

    @property
    def share_kappa(self) -> float:
        """Mean reversion speed of the variance under the share measure."""
        return self.kappa - self.rho * self.sigma

    class Config:
        extra = "forbid"
        frozen = True


class Interval(BaseModel):
    """Real interval with explicit endpoint openness.

    Infinite endpoints are always open. An interval with `lo == hi` and at
    least one open endpoint is empty; use `Interval.empty()` to build one.
    """
    lo: float
    hi: float
    lo_open: bool = False
    hi_open: bool = False

    @root_validator(skip_on_failure=True)
    def _normalize(cls, v: Dict[str, Any]) -> Dict[str, Any]:
        lo, hi = v["lo"], v["hi"]
        if math.isnan(lo) or math.isnan(hi):
            raise ValueError("Interval endpoints cannot be NaN")
        if lo > hi:
            raise ValueError(f"Interval lower endpoint {lo!r} exceeds upper endpoint {hi!r}")
        if lo == math.inf or hi == -math.inf:
            raise ValueError("Interval must contain at least one real number or be empty")
        if math.isinf(lo):
            v["lo_open"] = True
        if math.isinf(hi):
            v["hi_open"] = True
        return v

    @classmethod
    def empty(cls) -> "Interval":
        return cls(lo=0.0, hi=0.0, lo_open=True, hi_open=True)

    @classmethod
    def closed(cls, lo: float, hi: float) -> "Interval":
        return cls(lo=lo, hi=hi)

    @classmethod
    def open(cls, lo: float, hi: float) -> "Interval":
        return cls(lo=lo, hi=hi, lo_open=True, hi_open=True)

    @property
    def is_empty(self) -> bool:
        return self.lo == self.hi and (self.lo_open or self.hi_open)

    @property
    def is_degenerate(self) -> bool:
        """`True` for a single point [a, a]."""
        return self.lo == self.hi and not (self.lo_open or self.hi_open)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def contains(self, u: float) -> bool:
        if self.is_empty or math.isnan(u):
            return False
        if u < self.lo or (u == self.lo and self.lo_open):
            return False
        if u > self.hi or (u == self.hi and self.hi_open):
            return False
        return True

    def interior(self) -> "Interval":
        if self.lo == self.hi:
            return Interval.empty()
        return Interval(lo=self.lo, hi=self.hi, lo_open=True, hi_open=True)

    def closure(self) -> "Interval":
        if self.is_empty:
            return self
        return Interval(lo=self.lo, hi=self.hi)

    def intersect(self, other: "Interval") -> "Interval":
        if self.is_empty or other.is_empty:
            return Interval.empty()
        if self.lo > other.lo:
            lo, lo_open = self.lo, self.lo_open
        elif self.lo < other.lo:
            lo, lo_open = other.lo, other.lo_open
        else:
            lo, lo_open = self.lo, self.lo_open or other.lo_open
        if self.hi < other.hi:
            hi, hi_open = self.hi, self.hi_open
        elif self.hi > other.hi:
            hi, hi_open = other.hi, other.hi_open
        else:
            hi, hi_open = self.hi, self.hi_open or other.hi_open
        if lo > hi or (lo == hi and (lo_open or hi_open)):
            return Interval.empty()
        return Interval(lo=lo, hi=hi, lo_open=lo_open, hi_open=hi_open)

    def __str__(self) -> str:
        if self.is_empty:
            return "{}"
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        return f"{left}{self.lo}, {self.hi}{right}"

    class Config:
        frozen = True
