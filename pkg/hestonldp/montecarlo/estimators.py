import logging
import math
from typing import Optional

import numpy as np
from scipy.special import logsumexp

from hestonldp.cgf import (
    CgfSpec,
    Side,
    analytic_domain,
    base_spec,
    cgf_eval,
    exponential_cgf,
    perturb,
    tilt
)
from hestonldp.model import HestonParams
from hestonldp.montecarlo.exceptions import EstimatorDomainError
from hestonldp.montecarlo.models import (
    CgfEstimate,
    Direction,
    McConfig,
    Measure,
    Perturbation,
    TailEstimate,
    TerminalSample
)
from hestonldp.montecarlo.runner import DEFAULT_RUNNER, BlockRunner
from hestonldp.montecarlo.simulator import draw_exponentials, simulate_terminal



_LOGGER = logging.getLogger("hestonldp.montecarlo")

# Fraction of the analytic domain width kept clear at each end by the
# empirical scaled cgf.
ENDPOINT_MARGIN = 0.1


def measure_spec(params: HestonParams, measure: Measure) -> CgfSpec:
    """Limiting cgf of (X_t - x0)/t under `measure`."""
    spec = base_spec(params)
    if measure is Measure.SHARE:
        return tilt(spec, 1.0)
    return spec


def family_spec(params: HestonParams, measure: Measure, perturbation: Optional[Perturbation]) -> CgfSpec:
    """Limiting cgf of (X_t - x0 +/- E)/t under `measure`."""
    spec = measure_spec(params, measure)
    if perturbation is None or perturbation.sign == 0:
        return spec
    side = Side.UPPER if perturbation.sign > 0 else Side.LOWER
    return perturb(spec, perturbation.lam, side)


def perturbed_values(
    sample: TerminalSample,
    perturbation: Optional[Perturbation],
    unit_exponentials: Optional[np.ndarray]
) -> np.ndarray:
    """X_t - x0 with the exponential added or subtracted.

    `unit_exponentials` are Exp(1) draws, one per path, scaled here by 1/lam.
    """
    values = sample.log_return
    if perturbation is None or perturbation.sign == 0:
        return values
    if unit_exponentials is None:
        raise ValueError("A perturbed estimate needs exponential draws")
    return values + perturbation.sign * unit_exponentials / perturbation.lam


def event_indicator(values: np.ndarray, threshold: float, direction: Direction) -> np.ndarray:
    """1{values < threshold} for `BELOW`, 1{values > threshold} for `ABOVE`."""
    if direction is Direction.BELOW:
        return values < threshold
    return values > threshold


def tail_from_sample(
    sample: TerminalSample,
    x: float,
    perturbation: Optional[Perturbation] = None,
    direction: Direction = Direction.BELOW,
    unit_exponentials: Optional[np.ndarray] = None,
    z: float = 1.96
) -> TailEstimate:
    t = sample.config.t
    values = perturbed_values(sample, perturbation, unit_exponentials)
    hits = int(np.count_nonzero(event_indicator(values, x * t, direction)))
    estimate = TailEstimate.from_counts(hits, sample.n_paths, t, z=z)
    if estimate.no_hits:
        _LOGGER.info(
            "No path hit the event at t=%g, x=%r",
            t,
            x,
            extra={"direction": direction.value, "perturbation": str(perturbation)}
        )
    return estimate


def estimate_tail(
    params: HestonParams,
    cfg: McConfig,
    x: float,
    perturbation: Optional[Perturbation] = None,
    direction: Direction = Direction.BELOW,
    runner: BlockRunner = DEFAULT_RUNNER,
    z: float = 1.96
) -> TailEstimate:
    """Estimate P[X_t - x0 +/- E < xt] (or > xt) and its scaled logarithm.

    A sample in which no path hits the event yields a `TailEstimate` with
    `no_hits` set rather than an error.

    Args:
        params: Model parameters.
        cfg: Simulation settings. The measure is taken from here.
        x: Threshold per unit time.
        perturbation: Optional independent exponential.
        direction: Which side of xt the event lies on.
        runner: Block runner for the simulation.
        z: Normal quantile of the reported confidence interval.

    Raises:
        BudgetExceeded: The run exceeds the path-step budget.
    """
    sample = simulate_terminal(params, cfg, runner=runner)
    unit_exponentials = None
    if perturbation is not None and perturbation.sign != 0:
        unit_exponentials = draw_exponentials(cfg, 1, runner=runner)[0]
    return tail_from_sample(sample, x, perturbation, direction, unit_exponentials, z=z)


def scaled_cgf_window(params: HestonParams, measure: Measure) -> tuple[float, float]:
    """Open interval of u on which the empirical scaled cgf is computed."""
    domain = analytic_domain(measure_spec(params, measure))
    margin = ENDPOINT_MARGIN * domain.width
    return domain.lo + margin, domain.hi - margin


def scaled_cgf_from_sample(
    sample: TerminalSample,
    u: float,
    analytic: float,
    correction: float = 0.0
) -> CgfEstimate:
    t = sample.config.t
    if u == 0.0:
        return CgfEstimate(u=u, t=t, value=0.0 + correction / t, std_err=0.0, analytic=analytic)
    exponent = u * sample.log_return
    n = exponent.shape[0]
    log_mean = logsumexp(exponent) - math.log(n)
    # Delta method on the log of the mean, using weights normalised by the mean.
    weights = np.exp(exponent - log_mean)
    std_err = float(np.std(weights, ddof=1)) / math.sqrt(n) / t
    return CgfEstimate(
        u=u,
        t=t,
        value=float(log_mean + correction) / t,
        std_err=std_err,
        analytic=analytic
    )


def estimate_scaled_cgf(
    params: HestonParams,
    cfg: McConfig,
    u: float,
    perturbation: Optional[Perturbation] = None,
    runner: BlockRunner = DEFAULT_RUNNER
) -> CgfEstimate:
    """(1/t) log of the sample mean of exp(u (X_t - x0)), next to Lambda(u).

    With a perturbation the exact exponential term log(lam/(lam -/+ u)) is
    added and the analytic value is that of the truncated family.

    Raises:
        EstimatorDomainError: `u` is within 10% of the domain width of an
            endpoint, or beyond the perturbation cut.
        BudgetExceeded: The run exceeds the path-step budget.
    """
    lo, hi = scaled_cgf_window(params, cfg.measure)
    if not lo < u < hi:
        raise EstimatorDomainError(u, lo, hi)
    correction = 0.0
    if perturbation is not None and perturbation.sign != 0:
        correction = exponential_cgf(perturbation.lam, perturbation.sign * u)
        if math.isinf(correction):
            if perturbation.sign > 0:
                raise EstimatorDomainError(u, lo, min(hi, perturbation.lam))
            raise EstimatorDomainError(u, max(lo, -perturbation.lam), hi)
    analytic = cgf_eval(family_spec(params, cfg.measure, perturbation), u)
    sample = simulate_terminal(params, cfg, runner=runner)
    return scaled_cgf_from_sample(sample, u, analytic, correction)
