from enum import Enum

from pydantic import BaseModel

from hestonldp.model import Interval



class LimitKind(str, Enum):
    """The three tail limits of the perturbed Heston log-spot.

    PUT_TAIL:  (1/t) log P[X_t - x0 + E_1 < xt]  -> -Lambda*(x),     x <= Lambda'(0)
    CALL_TAIL: (1/t) log P~[X_t - x0 - E_1 > xt] -> x - Lambda*(x),  x >= Lambda'(1)
    MID_TAIL:  (1/t) log P~[X_t - x0 - E_1 <= xt] -> x - Lambda*(x), Lambda'(0) <= x <= Lambda'(1)
    """
    PUT_TAIL = "put_tail"
    CALL_TAIL = "call_tail"
    MID_TAIL = "mid_tail"


class LimitQuery(BaseModel):
    kind: LimitKind
    x: float

    class Config:
        frozen = True


class LimitValue(BaseModel):
    kind: LimitKind
    x: float
    value: float
    proven: bool
    admissible: Interval


class GateResult(BaseModel):
    """Outcome of the Gartner-Ellis applicability check."""
    valid: bool
    reason: str | None = None
    endpoint: float | None = None

    def __bool__(self) -> bool:
        return self.valid
