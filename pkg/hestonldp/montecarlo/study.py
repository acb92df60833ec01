import logging
import math
from typing import Optional, Sequence

from hestonldp.asymptotics import (
    InvalidConfiguration,
    LimitKind,
    LimitQuery,
    evaluate_limit,
    gartner_ellis_limit,
    ldp_gate
)
from hestonldp.model import HestonParams, Interval
from hestonldp.montecarlo.estimators import estimate_tail, family_spec, measure_spec
from hestonldp.montecarlo.exceptions import GateRefused
from hestonldp.montecarlo.models import (
    ConvergenceRow,
    ConvergenceTable,
    Direction,
    LimitMethod,
    McConfig,
    Measure,
    Perturbation,
    PerturbationKind
)
from hestonldp.montecarlo.runner import DEFAULT_RUNNER, BlockRunner



_LOGGER = logging.getLogger("hestonldp.montecarlo")

_CONFIGURATIONS = {
    (Measure.PRICING, PerturbationKind.PLUS_EXP, Direction.BELOW): LimitKind.PUT_TAIL,
    (Measure.SHARE, PerturbationKind.MINUS_EXP, Direction.ABOVE): LimitKind.CALL_TAIL,
    (Measure.SHARE, PerturbationKind.MINUS_EXP, Direction.BELOW): LimitKind.MID_TAIL,
}


def match_configuration(measure: Measure, perturbation: Perturbation, direction: Direction) -> LimitKind:
    """The tail limit whose event a simulation setup estimates.

    Raises:
        InvalidConfiguration: The setup is not one of pricing/+exp:1/below,
            share/-exp:1/above or share/-exp:1/below.
    """
    kind = _CONFIGURATIONS.get((measure, perturbation.kind, direction))
    if kind is None or perturbation.lam != 1.0:
        raise InvalidConfiguration(
            f"No proven limit for measure={measure.value}, perturbation={perturbation}, "
            f"direction={direction.value}"
        )
    return kind


def event_interval(x: float, direction: Direction) -> Interval:
    """(-inf, x) for `BELOW`, (x, inf) for `ABOVE`."""
    if direction is Direction.BELOW:
        return Interval(lo=-math.inf, hi=x, hi_open=True)
    return Interval(lo=x, hi=math.inf, lo_open=True)


def _theorem_limit(
    params: HestonParams,
    measure: Measure,
    x: float,
    perturbation: Perturbation,
    direction: Direction,
    force: bool
) -> tuple[Optional[LimitKind], float, bool]:
    try:
        kind = match_configuration(measure, perturbation, direction)
    except InvalidConfiguration:
        if not force:
            raise
        _LOGGER.info(
            "Forced run without a matching limit, comparing against the unperturbed Gartner-Ellis bound"
        )
        spec = measure_spec(params, measure)
        return None, gartner_ellis_limit(spec, event_interval(x, direction)), False
    limit = evaluate_limit(params, LimitQuery(kind=kind, x=x), force=force)
    return kind, limit.value, limit.proven


def _gartner_ellis_limit(
    params: HestonParams,
    measure: Measure,
    x: float,
    perturbation: Perturbation,
    direction: Direction,
    force: bool
) -> tuple[Optional[LimitKind], float, bool]:
    spec = family_spec(params, measure, perturbation)
    gate = ldp_gate(spec)
    if not gate:
        if not force:
            raise GateRefused(gate.reason)
        _LOGGER.info("Forced Gartner-Ellis limit although %s", gate.reason)
    return None, gartner_ellis_limit(spec, event_interval(x, direction)), gate.valid


def convergence_study(
    params: HestonParams,
    cfg: McConfig,
    x: float,
    perturbation: Perturbation,
    direction: Direction,
    t_grid: Sequence[float],
    method: LimitMethod = LimitMethod.THEOREM,
    force: bool = False,
    runner: BlockRunner = DEFAULT_RUNNER,
    z: float = 1.96
) -> ConvergenceTable:
    """Estimate the scaled log tail along `t_grid` and compare it with its limit.

    The number of paths and the time step of `cfg` are held fixed across the
    grid. Rows without hits carry scaled_log = -inf and no gap.

    Args:
        params: Model parameters.
        cfg: Simulation settings; `cfg.t` is replaced by each grid point.
        x: Threshold per unit time.
        perturbation: Exponential added to or subtracted from X_t - x0.
        direction: Side of the event.
        t_grid: Strictly increasing horizons.
        method: `THEOREM` takes the limit from the matching tail limit.
            `GARTNER_ELLIS` builds the perturbed family and requires it to
            pass `ldp_gate`.
        force: Compute the limit outside its proven range.

    Raises:
        ValueError: `t_grid` is empty or not strictly increasing.
        InvalidConfiguration: No limit matches the setup and `force` is `False`.
        OutOfTheoremRange: `x` is outside the proven range and `force` is `False`.
        GateRefused: The Gartner-Ellis gate fails and `force` is `False`.
        BudgetExceeded: A horizon exceeds the path-step budget.
    """
    t_grid = [float(t) for t in t_grid]
    if not t_grid or any(b <= a for a, b in zip(t_grid, t_grid[1:])):
        raise ValueError(f"t_grid must be non-empty and strictly increasing, got {t_grid}")

    resolve = _theorem_limit if method is LimitMethod.THEOREM else _gartner_ellis_limit
    kind, limit, proven = resolve(params, cfg.measure, x, perturbation, direction, force)
    _LOGGER.info(
        "Convergence study at x=%r toward %r over t=%s",
        x,
        limit,
        t_grid,
        extra={"method": method.value, "kind": kind.value if kind else None, "proven": proven}
    )

    rows = []
    for t in t_grid:
        estimate = estimate_tail(
            params,
            cfg.with_horizon(t),
            x,
            perturbation=perturbation,
            direction=direction,
            runner=runner,
            z=z
        )
        ci_lo, ci_hi = estimate.scaled_log_ci or (None, None)
        gap = None if estimate.no_hits else abs(estimate.scaled_log - limit)
        rows.append(
            ConvergenceRow(
                t=t,
                p_hat=estimate.p_hat,
                std_err=estimate.std_err,
                scaled_log=estimate.scaled_log,
                ci_lo=ci_lo,
                ci_hi=ci_hi,
                theoretical_limit=limit,
                gap=gap
            )
        )
    return ConvergenceTable(
        x=x,
        measure=cfg.measure,
        perturbation=perturbation,
        direction=direction,
        method=method,
        kind=kind,
        proven=proven,
        theoretical_limit=limit,
        rows=rows
    )
