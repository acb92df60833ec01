import logging
from typing import List

from hestonldp.commands.models import CommandResult, RunConfig
from hestonldp.exceptions import ConfigurationError
from hestonldp.montecarlo import (
    BlockRunner,
    Direction,
    LimitMethod,
    McConfig,
    Measure,
    Perturbation,
    Scheme,
    convergence_study
)
from hestonldp.settings import MONTECARLO_SETTINGS



_LOGGER = logging.getLogger("hestonldp.commands")

COLUMNS = [
    "t",
    "p_hat",
    "std_err",
    "scaled_log",
    "ci_lo",
    "ci_hi",
    "theoretical_limit",
    "gap",
]


def parse_t_grid(text: str) -> List[float]:
    try:
        grid = [float(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise ConfigurationError(f"Invalid t grid '{text}': {e}") from e
    if not grid or any(t <= 0 for t in grid) or any(b <= a for a, b in zip(grid, grid[1:])):
        raise ConfigurationError(f"t grid '{text}' must be positive and strictly increasing")
    return grid


def cmd_verify(config: RunConfig, runner: BlockRunner | None = None) -> CommandResult:
    """Run a convergence study and compare the last gap with the tolerance.

    Expected options: x, measure, perturbation, direction, t_grid, n_paths,
    steps_per_unit_time, tol, scheme and via.

    Exit code 0 when the gap at the largest horizon is within `tol`, 1
    otherwise (including a final horizon without hits).
    """
    runner = runner or MONTECARLO_SETTINGS.get_runner()
    options = config.options
    t_grid = [float(t) for t in options["t_grid"]]
    cfg = McConfig.from_rate(
        t_grid[0],
        options["steps_per_unit_time"],
        n_paths=options["n_paths"],
        scheme=Scheme(options.get("scheme", Scheme.FULL_TRUNCATION_EULER.value)),
        seed=config.seed,
        measure=Measure(options["measure"]),
        budget=MONTECARLO_SETTINGS.budget
    )
    table = convergence_study(
        config.params,
        cfg,
        options["x"],
        Perturbation.parse(options["perturbation"]),
        Direction(options["direction"]),
        t_grid,
        method=LimitMethod(options.get("via", LimitMethod.THEOREM.value)),
        force=config.force,
        runner=runner,
        z=MONTECARLO_SETTINGS.z_score
    )
    tol = options["tol"]
    last = table.rows[-1]
    passed = last.gap is not None and last.gap <= tol
    if not passed:
        _LOGGER.warning("Final gap %r at t=%g exceeds tolerance %r", last.gap, last.t, tol)
    return CommandResult(
        columns=COLUMNS,
        rows=[row.dict() for row in table.rows],
        rows_key="estimates",
        summary={
            "limit": {
                "kind": table.kind.value if table.kind else None,
                "method": table.method.value,
                "proven": table.proven,
                "value": table.theoretical_limit,
            },
            "invariant_checks": [
                {"name": "final_gap_within_tolerance", "passed": passed, "gap": last.gap, "tol": tol},
                {"name": "gap_decreasing", "passed": table.gap_decreasing},
            ],
        },
        exit_code=0 if passed else 1
    )
