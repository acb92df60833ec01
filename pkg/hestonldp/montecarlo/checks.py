"""Monte Carlo checks of the orderings, representations and measure change
used by the tail limits.
"""
import logging
import math
from typing import Iterable, Optional

import numpy as np
from scipy.stats import expon

from hestonldp.model import HestonParams
from hestonldp.montecarlo.estimators import event_indicator
from hestonldp.montecarlo.models import (
    Direction,
    McConfig,
    Measure,
    MomentReport,
    OrderingReport,
    PairedGap,
    RepresentationReport,
    TailEstimate
)
from hestonldp.montecarlo.runner import DEFAULT_RUNNER, BlockRunner
from hestonldp.montecarlo.simulator import draw_exponentials, simulate_terminal



_LOGGER = logging.getLogger("hestonldp.montecarlo")

# Agreement is declared within this many (joint) standard errors.
N_STD_ERR = 3.0


def _mean_and_std_err(values: np.ndarray) -> tuple[float, float]:
    return float(np.mean(values)), float(np.std(values, ddof=1)) / math.sqrt(values.shape[0])


def _independent(cfg: McConfig, measure: Measure) -> McConfig:
    """`cfg` under `measure` with a seed distinct from `cfg.seed`."""
    return McConfig(**{**cfg.dict(), "measure": measure, "seed": (cfg.seed + 1) % 2**64})


def _paired_gap(name: str, smaller: np.ndarray, larger: np.ndarray, z: float) -> PairedGap:
    estimate, std_err = _mean_and_std_err(larger.astype(float) - smaller.astype(float))
    lo, hi = estimate - z * std_err, estimate + z * std_err
    return PairedGap(name=name, estimate=estimate, std_err=std_err, ci=(lo, hi), holds=hi >= 0.0)


def ordering_check(
    params: HestonParams,
    cfg: McConfig,
    x: float,
    lam1: float,
    lam2: float,
    direction: Direction = Direction.BELOW,
    coupled: bool = False,
    runner: BlockRunner = DEFAULT_RUNNER,
    z: float = 1.96
) -> OrderingReport:
    """Check p(E_lam1) <= p(E_lam2) <= p(none) on common paths.

    For `BELOW` the events are {X_t - x0 + E < xt}; for `ABOVE` they are the
    mirrored {X_t - x0 - E > xt}. A larger rate gives a stochastically
    smaller exponential, so the event is more likely. With `coupled` the
    second exponential is (lam1/lam2) * E_lam1 and the ordering holds path by
    path; otherwise the two exponentials are independent and each gap must
    be non-negative within its confidence interval.

    Raises:
        ValueError: Unless 0 < lam1 <= lam2.
        BudgetExceeded: The run exceeds the path-step budget.
    """
    if not 0 < lam1 <= lam2:
        raise ValueError(f"Expected 0 < lam1 <= lam2, got lam1={lam1!r}, lam2={lam2!r}")
    sample = simulate_terminal(params, cfg, runner=runner)
    unit = draw_exponentials(cfg, 1 if coupled else 2, runner=runner)
    e1 = unit[0] / lam1
    e2 = unit[0] / lam2 if coupled else unit[1] / lam2

    sign = 1.0 if direction is Direction.BELOW else -1.0
    threshold = x * cfg.t
    values = sample.log_return
    hit1 = event_indicator(values + sign * e1, threshold, direction)
    hit2 = event_indicator(values + sign * e2, threshold, direction)
    hit_none = event_indicator(values, threshold, direction)

    gaps = [
        _paired_gap("lam2_minus_lam1", hit1, hit2, z),
        _paired_gap("none_minus_lam2", hit2, hit_none, z),
    ]
    pathwise = None
    if coupled:
        pathwise = bool(np.all(hit1 <= hit2) and np.all(hit2 <= hit_none))
    passed = all(gap.holds for gap in gaps) and pathwise is not False

    n = sample.n_paths
    report = OrderingReport(
        x=x,
        t=cfg.t,
        lam1=lam1,
        lam2=lam2,
        direction=direction,
        coupled=coupled,
        p_lam1=TailEstimate.from_counts(int(hit1.sum()), n, cfg.t, z=z),
        p_lam2=TailEstimate.from_counts(int(hit2.sum()), n, cfg.t, z=z),
        p_none=TailEstimate.from_counts(int(hit_none.sum()), n, cfg.t, z=z),
        gaps=gaps,
        pathwise=pathwise,
        passed=passed
    )
    if not passed:
        _LOGGER.warning("Ordering check failed at x=%r, t=%g", x, cfg.t, extra={"gaps": [g.dict() for g in gaps]})
    return report


def exponential_cdf_monotone(lams: Iterable[float], alphas: Iterable[float]) -> bool:
    """Check that P[E_lam < alpha] = 1 - exp(-lam*alpha) is non-decreasing in
    lam for alpha > 0 and zero for alpha <= 0.
    """
    lams = np.sort(np.asarray(list(lams), dtype=float))
    if lams.size == 0 or np.any(lams <= 0):
        raise ValueError("Rates must be positive")
    for alpha in alphas:
        cdf = expon.cdf(alpha, scale=1.0 / lams)
        if alpha <= 0:
            if np.any(cdf != 0.0):
                return False
        elif np.any(np.diff(cdf) < 0):
            return False
    return True


def put_representation_check(
    params: HestonParams,
    cfg: McConfig,
    strike: float,
    runner: BlockRunner = DEFAULT_RUNNER
) -> RepresentationReport:
    """Compare E[(K - S_t)+] with K * P[log K > X_t + E_1] on the same paths.

    Conditionally on X_t both integrands have the same mean, so their paired
    difference has mean zero. Simulated under the pricing measure whatever
    `cfg.measure` is.

    Raises:
        ValueError: `strike` is not positive.
        BudgetExceeded: The run exceeds the path-step budget.
    """
    if not strike > 0:
        raise ValueError(f"strike must be positive, got {strike!r}")
    cfg = cfg.with_measure(Measure.PRICING)
    sample = simulate_terminal(params, cfg, runner=runner)
    e1 = draw_exponentials(cfg, 1, runner=runner)[0]

    direct = np.maximum(strike - np.exp(sample.x), 0.0)
    representation = strike * (math.log(strike) > sample.x + e1)
    direct_mean, direct_se = _mean_and_std_err(direct)
    rep_mean, rep_se = _mean_and_std_err(representation)
    difference, joint_se = _mean_and_std_err(direct - representation)
    return RepresentationReport(
        strike=strike,
        t=cfg.t,
        direct=direct_mean,
        direct_std_err=direct_se,
        representation=rep_mean,
        representation_std_err=rep_se,
        difference=difference,
        joint_std_err=joint_se,
        passed=abs(difference) <= N_STD_ERR * joint_se + 1e-12
    )


def call_representation_check(
    params: HestonParams,
    cfg: McConfig,
    strike: float,
    runner: BlockRunner = DEFAULT_RUNNER
) -> RepresentationReport:
    """Compare E[(S_t - K)+] under the pricing measure with
    S_0 * P~[X_t - E_1 > log K] under the share measure.

    The two sides come from independent samples, so the joint standard error
    is the root sum of squares.

    Raises:
        ValueError: `strike` is not positive.
        BudgetExceeded: The run exceeds the path-step budget.
    """
    if not strike > 0:
        raise ValueError(f"strike must be positive, got {strike!r}")
    pricing_cfg = cfg.with_measure(Measure.PRICING)
    share_cfg = _independent(cfg, Measure.SHARE)
    pricing = simulate_terminal(params, pricing_cfg, runner=runner)
    share = simulate_terminal(params, share_cfg, runner=runner)
    e1 = draw_exponentials(share_cfg, 1, runner=runner)[0]

    direct = np.maximum(np.exp(pricing.x) - strike, 0.0)
    representation = math.exp(params.x0) * (share.x - e1 > math.log(strike))
    direct_mean, direct_se = _mean_and_std_err(direct)
    rep_mean, rep_se = _mean_and_std_err(representation)
    joint_se = math.hypot(direct_se, rep_se)
    difference = direct_mean - rep_mean
    return RepresentationReport(
        strike=strike,
        t=cfg.t,
        direct=direct_mean,
        direct_std_err=direct_se,
        representation=rep_mean,
        representation_std_err=rep_se,
        difference=difference,
        joint_std_err=joint_se,
        passed=abs(difference) <= N_STD_ERR * joint_se + 1e-12
    )


def martingale_check(
    params: HestonParams,
    cfg: McConfig,
    runner: BlockRunner = DEFAULT_RUNNER
) -> MomentReport:
    """Check E[exp(X_t - x0)] = 1 under the pricing measure.

    Heavy tails make the sample mean unreliable beyond t of about 20.
    """
    cfg = cfg.with_measure(Measure.PRICING)
    sample = simulate_terminal(params, cfg, runner=runner)
    estimate, std_err = _mean_and_std_err(np.exp(sample.log_return))
    return MomentReport(
        name="martingale",
        estimate=estimate,
        std_err=std_err,
        reference=1.0,
        passed=abs(estimate - 1.0) <= N_STD_ERR * std_err
    )


def share_consistency_check(
    params: HestonParams,
    cfg: McConfig,
    x: float,
    direction: Direction = Direction.BELOW,
    runner: BlockRunner = DEFAULT_RUNNER,
    name: Optional[str] = None
) -> MomentReport:
    """Compare P~[A] simulated under the share measure with the weighted
    pricing-measure estimate of E[exp(X_t - x0) 1_A], A = {X_t - x0 < xt}
    (or > xt).

    The weighted estimator's variance grows quickly with t; use t <= 10.
    """
    pricing = simulate_terminal(params, cfg.with_measure(Measure.PRICING), runner=runner)
    share = simulate_terminal(params, _independent(cfg, Measure.SHARE), runner=runner)
    threshold = x * cfg.t

    weighted = np.exp(pricing.log_return) * event_indicator(pricing.log_return, threshold, direction)
    direct = event_indicator(share.log_return, threshold, direction).astype(float)
    estimate, std_err = _mean_and_std_err(weighted)
    reference, reference_se = _mean_and_std_err(direct)
    return MomentReport(
        name=name or f"share_consistency_{direction.value}",
        estimate=estimate,
        std_err=std_err,
        reference=reference,
        reference_std_err=reference_se,
        passed=abs(estimate - reference) <= N_STD_ERR * math.hypot(std_err, reference_se)
    )
