from .exceptions import InvalidConfiguration, OutOfTheoremRange
from .limits import (
    evaluate_limit,
    gartner_ellis_limit,
    ldp_gate,
    limit_call_tail,
    limit_mid_tail,
    limit_put_tail,
    theorem_range
)
from .models import GateResult, LimitKind, LimitQuery, LimitValue



__all__ = [
    "InvalidConfiguration",
    "OutOfTheoremRange",
    "evaluate_limit",
    "gartner_ellis_limit",
    "ldp_gate",
    "limit_call_tail",
    "limit_mid_tail",
    "limit_put_tail",
    "theorem_range",
    "GateResult",
    "LimitKind",
    "LimitQuery",
    "LimitValue",
]
