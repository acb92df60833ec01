import functools
import logging
import math

import numpy as np

from hestonldp.model import HestonParams, validate_params
from hestonldp.montecarlo.exceptions import BudgetExceeded
from hestonldp.montecarlo.models import McConfig, Measure, Scheme, TerminalSample
from hestonldp.montecarlo.runner import DEFAULT_RUNNER, BlockRunner
from hestonldp.montecarlo.streams import EXPONENTIAL_STREAM, PATH_STREAM, block_generator



_LOGGER = logging.getLogger("hestonldp.montecarlo")


def _dynamics(params: HestonParams, measure: Measure) -> tuple[float, float, float]:
    """(log-spot drift per unit variance, variance drift level, mean reversion).

    Under the pricing measure dX = -Y/2 dt + sqrt(Y) dW1 and
    dY = (kappa*theta - kappa*Y) dt + sigma*sqrt(Y) dW2. The share measure
    dP~/dP = exp(X_t - x0) shifts dW1 by sqrt(Y) dt and dW2 by rho*sqrt(Y) dt,
    giving dX = +Y/2 dt + sqrt(Y) dW1~ and
    dY = (kappa*theta - (kappa - rho*sigma)*Y) dt + sigma*sqrt(Y) dW2~.
    """
    level = params.kappa * params.theta
    if measure is Measure.SHARE:
        return 0.5, level, params.share_kappa
    return -0.5, level, params.kappa


def _full_truncation_block(
    params: HestonParams,
    cfg: McConfig,
    block: int,
    size: int
) -> np.ndarray:
    rng = block_generator(cfg.seed, block, PATH_STREAM)
    x_drift, level, reversion = _dynamics(params, cfg.measure)
    dt = cfg.dt
    rho = params.rho
    rho_bar = math.sqrt(1.0 - rho * rho)

    x = np.full(size, params.x0)
    y = np.full(size, params.y0)
    for _ in range(cfg.n_steps):
        z_var = rng.standard_normal(size)
        z_perp = rng.standard_normal(size)
        y_pos = np.maximum(y, 0.0)
        vol = np.sqrt(y_pos * dt)
        x += x_drift * y_pos * dt + vol * (rho * z_var + rho_bar * z_perp)
        y += (level - reversion * y_pos) * dt + params.sigma * vol * z_var
    return np.stack([x, y])


def _exact_variance_block(
    params: HestonParams,
    cfg: McConfig,
    block: int,
    size: int
) -> np.ndarray:
    # Variance from the noncentral chi-squared transition of the CIR process;
    # log-spot from the trapezoidal integrated variance, with the part driven
    # by W2 recovered from the variance increment.
    rng = block_generator(cfg.seed, block, PATH_STREAM)
    x_drift, level, reversion = _dynamics(params, cfg.measure)
    dt = cfg.dt
    sigma = params.sigma
    rho = params.rho
    rho_bar = math.sqrt(1.0 - rho * rho)

    decay = math.exp(-reversion * dt)
    scale = sigma * sigma * (1.0 - decay) / (4.0 * reversion)
    df = 4.0 * level / (sigma * sigma)

    x = np.full(size, params.x0)
    y = np.full(size, params.y0)
    for _ in range(cfg.n_steps):
        y_next = scale * rng.noncentral_chisquare(df, y * decay / scale)
        integrated = 0.5 * (y + y_next) * dt
        driven = (y_next - y - level * dt + reversion * integrated) / sigma
        z = rng.standard_normal(size)
        x += x_drift * integrated + rho * driven + rho_bar * np.sqrt(integrated) * z
        y = y_next
    return np.stack([x, y])


_SCHEMES = {
    Scheme.FULL_TRUNCATION_EULER: _full_truncation_block,
    Scheme.EXACT_VARIANCE_EULER_LOG: _exact_variance_block,
}


def check_budget(cfg: McConfig) -> None:
    if cfg.n_paths * cfg.n_steps > cfg.budget:
        raise BudgetExceeded(cfg.n_paths, cfg.n_steps, cfg.budget)


def simulate_terminal(
    params: HestonParams,
    cfg: McConfig,
    runner: BlockRunner = DEFAULT_RUNNER
) -> TerminalSample:
    """Simulate (X_t, Y_t) under the measure and scheme in `cfg`.

    The sample is a deterministic function of (seed, n_paths, n_steps,
    scheme, measure) and the runner's block size.

    Raises:
        BudgetExceeded: n_paths * n_steps exceeds `cfg.budget`.
    """
    params = validate_params(params)
    check_budget(cfg)
    _LOGGER.info(
        "Simulating %i paths x %i steps to t=%g under the %s measure (%s)",
        cfg.n_paths,
        cfg.n_steps,
        cfg.t,
        cfg.measure.value,
        cfg.scheme.value
    )
    block_fn = functools.partial(_SCHEMES[cfg.scheme], params, cfg)
    terminal = runner.concatenate(block_fn, cfg.n_paths, axis=1)
    return TerminalSample(x=terminal[0], y=terminal[1], x0=params.x0, config=cfg)


def draw_exponentials(
    cfg: McConfig,
    count: int = 1,
    runner: BlockRunner = DEFAULT_RUNNER
) -> np.ndarray:
    """Unit-mean exponential variates, shape (count, n_paths).

    Drawn from a stream independent of the path stream so perturbed and
    unperturbed estimates share paths. Divide by lam for Exp(lam).
    """
    def block_fn(block: int, size: int) -> np.ndarray:
        rng = block_generator(cfg.seed, block, EXPONENTIAL_STREAM)
        return rng.standard_exponential((count, size))

    return runner.concatenate(block_fn, cfg.n_paths, axis=1)
