"""Analytic invariants and short Monte Carlo checks run as one suite."""
import logging
import math
from typing import Callable, List, Tuple

import numpy as np

from hestonldp.cgf import (
    Side,
    base_spec,
    cgf_derivative,
    cgf_eval,
    cgf_grid,
    delta,
    domain_endpoints,
    lambda_prime_one,
    lambda_prime_zero,
    perturb,
    smoothness_report,
    tilt
)
from hestonldp.commands.models import CheckItem, CommandResult, RunConfig
from hestonldp.legendre import ConjugateSolver, conjugate, rate, tilted_rate
from hestonldp.model import HestonParams
from hestonldp.montecarlo import (
    BlockRunner,
    McConfig,
    exponential_cdf_monotone,
    martingale_check,
    ordering_check,
    put_representation_check
)
from hestonldp.settings import MONTECARLO_SETTINGS, SMOOTHNESS_SETTINGS, SOLVER_SETTINGS



_LOGGER = logging.getLogger("hestonldp.commands")

COLUMNS = ["name", "passed", "detail"]

GRID_POINTS = 10**6


def _relative(a: float, b: float) -> float:
    return abs(a - b) / max(abs(b), 1.0)


def check_cgf_identities(params: HestonParams) -> CheckItem:
    spec = base_spec(params)
    u_minus, u_plus = domain_endpoints(params)
    errors = {
        "cgf(0)": abs(cgf_eval(spec, 0.0)),
        "cgf(1)": abs(cgf_eval(spec, 1.0)),
        "delta(u-)": abs(delta(params, u_minus)) / max(params.kappa**2, 1.0),
        "delta(u+)": abs(delta(params, u_plus)) / max(params.kappa**2, 1.0),
        "cgf'(0)": _relative(cgf_derivative(spec, 0.0), lambda_prime_zero(params)),
        "cgf'(1)": _relative(cgf_derivative(spec, 1.0), lambda_prime_one(params)),
    }
    tolerances = {"cgf(0)": 1e-12, "cgf(1)": 1e-12, "delta(u-)": 1e-9, "delta(u+)": 1e-9}
    passed = all(err <= tolerances.get(name, 1e-10) for name, err in errors.items())
    worst = max(errors, key=errors.get)
    return CheckItem(name="cgf_identities", passed=passed, detail=f"worst {worst} error {errors[worst]:.3g}")


def check_conjugate_oracle(params: HestonParams, solver: ConjugateSolver) -> CheckItem:
    spec = base_spec(params)
    u_minus, u_plus = domain_endpoints(params)
    u = np.linspace(u_minus, u_plus, GRID_POINTS)
    values = cgf_grid(spec, u)
    worst = 0.0
    for x in np.linspace(-1.0, 1.0, 50):
        oracle = float(np.max(u * x - values))
        worst = max(worst, abs(conjugate(spec, float(x), solver).value - oracle))
    return CheckItem(name="conjugate_oracle", passed=worst <= 1e-6, detail=f"max error {worst:.3g}")


def check_fenchel_young(params: HestonParams, solver: ConjugateSolver, seed: int) -> CheckItem:
    spec = base_spec(params)
    u_minus, u_plus = domain_endpoints(params)
    rng = np.random.default_rng(seed)
    us = rng.uniform(u_minus, u_plus, 1000)
    xs = rng.uniform(-1.0, 1.0, 1000)
    worst = 0.0
    for u, x in zip(us, xs):
        slack = cgf_eval(spec, float(u)) + rate(spec, float(x), solver) - u * x
        worst = min(worst, slack)
    return CheckItem(name="fenchel_young", passed=worst >= -1e-9, detail=f"min slack {worst:.3g}")


def check_tilt_identity(params: HestonParams, solver: ConjugateSolver) -> CheckItem:
    spec = base_spec(params)
    worst = 0.0
    for x in np.linspace(-1.0, 1.0, 100):
        x = float(x)
        worst = max(worst, abs(tilted_rate(params, x, solver) - (rate(spec, x, solver) - x)))
    return CheckItem(name="tilt_identity", passed=worst <= 1e-9, detail=f"max error {worst:.3g}")


def check_smoothness(params: HestonParams) -> CheckItem:
    probe = SMOOTHNESS_SETTINGS.get_probe()
    base = base_spec(params)
    _, u_plus = domain_endpoints(params)
    base_smooth = smoothness_report(base, probe).essentially_smooth
    cut = smoothness_report(perturb(base, 1.0, Side.UPPER), probe).endpoints[-1]
    cut_fails = not cut.is_steep and not cut.lower_semicontinuous
    beyond_smooth = smoothness_report(perturb(base, u_plus + 1.0, Side.UPPER), probe).essentially_smooth
    return CheckItem(
        name="smoothness_classification",
        passed=base_smooth and cut_fails and beyond_smooth,
        detail=f"base={base_smooth} cut_at_1_fails={cut_fails} cut_beyond_domain={beyond_smooth}"
    )


def _mc_config(config: RunConfig) -> McConfig:
    return McConfig.from_rate(
        1.0,
        MONTECARLO_SETTINGS.steps_per_unit_time,
        n_paths=config.options.get("n_paths", 10**5),
        seed=config.seed,
        budget=MONTECARLO_SETTINGS.budget
    )


def check_ordering(config: RunConfig, runner: BlockRunner) -> CheckItem:
    params = config.params
    report = ordering_check(
        params,
        _mc_config(config),
        lambda_prime_zero(params),
        1.0,
        3.0,
        coupled=config.options.get("coupled", False),
        runner=runner,
        z=MONTECARLO_SETTINGS.z_score
    )
    detail = " ".join(f"{gap.name}={gap.estimate:.4g}+-{gap.std_err:.2g}" for gap in report.gaps)
    return CheckItem(name="ordering", passed=report.passed, detail=detail)


def check_exponential_cdf() -> CheckItem:
    passed = exponential_cdf_monotone([0.5, 1.0, 2.0, 3.0, 10.0], [-1.0, 0.0, 0.1, 1.0, 5.0])
    return CheckItem(name="exponential_cdf_monotone", passed=passed)


def check_put_representation(config: RunConfig, runner: BlockRunner) -> CheckItem:
    strike = math.exp(config.params.x0)
    report = put_representation_check(config.params, _mc_config(config), strike, runner=runner)
    return CheckItem(
        name="put_representation",
        passed=report.passed,
        detail=f"direct={report.direct:.6g} representation={report.representation:.6g} "
               f"joint_std_err={report.joint_std_err:.2g}"
    )


def check_martingale(config: RunConfig, runner: BlockRunner) -> CheckItem:
    report = martingale_check(config.params, _mc_config(config), runner=runner)
    return CheckItem(
        name="martingale",
        passed=report.passed,
        detail=f"mean={report.estimate:.6g} std_err={report.std_err:.2g}"
    )


def cmd_selftest(config: RunConfig, runner: BlockRunner | None = None) -> CommandResult:
    """Run the invariant suite. Exit code 0 iff every item passes."""
    runner = runner or MONTECARLO_SETTINGS.get_runner()
    solver = SOLVER_SETTINGS.get_solver()
    params = config.params
    suite: List[Tuple[str, Callable[[], CheckItem]]] = [
        ("cgf_identities", lambda: check_cgf_identities(params)),
        ("conjugate_oracle", lambda: check_conjugate_oracle(params, solver)),
        ("fenchel_young", lambda: check_fenchel_young(params, solver, config.seed)),
        ("tilt_identity", lambda: check_tilt_identity(params, solver)),
        ("smoothness_classification", lambda: check_smoothness(params)),
        ("exponential_cdf_monotone", check_exponential_cdf),
        ("ordering", lambda: check_ordering(config, runner)),
        ("put_representation", lambda: check_put_representation(config, runner)),
        ("martingale", lambda: check_martingale(config, runner)),
    ]
    items = []
    for name, check in suite:
        item = check()
        _LOGGER.info("%s: %s", name, "pass" if item.passed else "FAIL", extra={"detail": item.detail})
        items.append(item)
    passed = all(item.passed for item in items)
    return CommandResult(
        columns=COLUMNS,
        rows=[item.dict() for item in items],
        rows_key="invariant_checks",
        summary={"passed": passed},
        exit_code=0 if passed else 1
    )
