import logging
import math

from hestonldp.asymptotics.exceptions import OutOfTheoremRange
from hestonldp.asymptotics.models import GateResult, LimitKind, LimitQuery, LimitValue
from hestonldp.cgf import (
    CgfSpec,
    SmoothnessReport,
    base_spec,
    lambda_prime_one,
    lambda_prime_zero,
    smoothness_report
)
from hestonldp.legendre import rate, rate_infimum
from hestonldp.model import HestonParams, Interval



_LOGGER = logging.getLogger("hestonldp.asymptotics")


def theorem_range(params: HestonParams, kind: LimitKind) -> Interval:
    """Range of x on which the limit of `kind` is proven."""
    lower = lambda_prime_zero(params)
    upper = lambda_prime_one(params)
    if kind is LimitKind.PUT_TAIL:
        return Interval(lo=-math.inf, hi=lower)
    if kind is LimitKind.CALL_TAIL:
        return Interval(lo=upper, hi=math.inf)
    return Interval.closed(lower, upper)


def _check_range(params: HestonParams, kind: LimitKind, x: float, force: bool) -> bool:
    admissible = theorem_range(params, kind)
    proven = admissible.contains(x)
    if not proven:
        if not force:
            raise OutOfTheoremRange(kind.value, x, admissible)
        _LOGGER.info("Evaluating %s at x=%r outside the proven range %s", kind.value, x, admissible)
    return proven


def limit_put_tail(params: HestonParams, x: float, force: bool = False) -> float:
    """lim (1/t) log P[X_t - x0 + E_1 < xt] = -Lambda*(x) for x <= -theta/2.

    Raises:
        OutOfTheoremRange: x > -theta/2 and `force` is `False`.
    """
    _check_range(params, LimitKind.PUT_TAIL, x, force)
    return -rate(base_spec(params), x)


def limit_call_tail(params: HestonParams, x: float, force: bool = False) -> float:
    """lim (1/t) log P~[X_t - x0 - E_1 > xt] = x - Lambda*(x) for x >= Lambda'(1).

    Raises:
        OutOfTheoremRange: x < Lambda'(1) and `force` is `False`.
    """
    _check_range(params, LimitKind.CALL_TAIL, x, force)
    return x - rate(base_spec(params), x)


def limit_mid_tail(params: HestonParams, x: float, force: bool = False) -> float:
    """lim (1/t) log P~[X_t - x0 - E_1 <= xt] = x - Lambda*(x) on [Lambda'(0), Lambda'(1)].

    Raises:
        OutOfTheoremRange: x is outside [Lambda'(0), Lambda'(1)] and `force`
            is `False`.
    """
    _check_range(params, LimitKind.MID_TAIL, x, force)
    return x - rate(base_spec(params), x)


_EVALUATORS = {
    LimitKind.PUT_TAIL: limit_put_tail,
    LimitKind.CALL_TAIL: limit_call_tail,
    LimitKind.MID_TAIL: limit_mid_tail,
}


def evaluate_limit(params: HestonParams, query: LimitQuery, force: bool = False) -> LimitValue:
    """Evaluate a limit and record whether `x` lies in its proven range."""
    admissible = theorem_range(params, query.kind)
    value = _EVALUATORS[query.kind](params, query.x, force=force)
    return LimitValue(
        kind=query.kind,
        x=query.x,
        value=value,
        proven=admissible.contains(query.x),
        admissible=admissible
    )


def ldp_gate(spec: CgfSpec, report: SmoothnessReport | None = None) -> GateResult:
    """Check that the Gartner-Ellis theorem applies to `spec`.

    The cgf must be steep and lower semicontinuous at every boundary point.
    An open cut inside the analytic domain fails both.
    """
    report = report or smoothness_report(spec)
    for endpoint in report.endpoints:
        if not endpoint.is_steep:
            return GateResult(
                valid=False,
                reason=f"not steep at {endpoint.location!r} ({endpoint.kind.value} endpoint)",
                endpoint=endpoint.location
            )
        if not endpoint.lower_semicontinuous:
            return GateResult(
                valid=False,
                reason=f"not lower semicontinuous at {endpoint.location!r} ({endpoint.kind.value} endpoint)",
                endpoint=endpoint.location
            )
    return GateResult(valid=True)


def gartner_ellis_limit(spec: CgfSpec, interval: Interval) -> float:
    """-inf of the rate function of `spec` over `interval`.

    This is the large deviation limit only when `ldp_gate(spec)` passes.
    """
    return -rate_infimum(spec, interval)
