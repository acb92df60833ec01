import logging
import math
from typing import List, Sequence

import numpy as np

from hestonldp.asymptotics import (
    LimitKind,
    LimitQuery,
    OutOfTheoremRange,
    evaluate_limit
)
from hestonldp.cgf import base_spec
from hestonldp.commands.models import CommandResult, RunConfig
from hestonldp.exceptions import ConfigurationError
from hestonldp.legendre import ConjugateSolver, conjugate, tilted_rate
from hestonldp.settings import SOLVER_SETTINGS



_LOGGER = logging.getLogger("hestonldp.commands")

COLUMNS = [
    "x",
    "rate",
    "maximizer",
    "tilted_rate",
    "limit_put_tail",
    "limit_mid_tail",
    "limit_call_tail",
]


def parse_x_grid(text: str) -> List[float]:
    """Parse 'start:stop:num' (inclusive, evenly spaced) or 'x1,x2,...'.

    Raises:
        ConfigurationError: The grid is empty, malformed or not finite.
    """
    text = text.strip()
    try:
        if ":" in text:
            start, stop, num = text.split(":")
            num = int(num)
            if num < 1:
                raise ValueError("num must be positive")
            grid = np.linspace(float(start), float(stop), num).tolist()
        else:
            grid = [float(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise ConfigurationError(f"Invalid x grid '{text}': {e}") from e
    if not grid:
        raise ConfigurationError(f"Empty x grid '{text}'")
    if not all(math.isfinite(x) for x in grid):
        raise ConfigurationError(f"x grid '{text}' contains non-finite values")
    return grid


def cmd_rate(config: RunConfig, x_grid: Sequence[float], solver: ConjugateSolver | None = None) -> CommandResult:
    """Rate function, share-measure rate function and tail limits on a grid.

    Limits outside their proven range are left empty unless `config.force`
    is set, in which case they are computed and listed in an `out_of_range`
    column.
    """
    solver = solver or SOLVER_SETTINGS.get_solver()
    params = config.params
    spec = base_spec(params)
    columns = COLUMNS + (["out_of_range"] if config.force else [])
    rows = []
    for x in x_grid:
        point = conjugate(spec, x, solver)
        row = {
            "x": x,
            "rate": point.value,
            "maximizer": point.maximizer,
            "tilted_rate": tilted_rate(params, x, solver),
        }
        forced = []
        for kind in (LimitKind.PUT_TAIL, LimitKind.MID_TAIL, LimitKind.CALL_TAIL):
            try:
                limit = evaluate_limit(params, LimitQuery(kind=kind, x=x), force=config.force)
            except OutOfTheoremRange:
                row[f"limit_{kind.value}"] = None
                continue
            row[f"limit_{kind.value}"] = limit.value
            if not limit.proven:
                forced.append(kind.value)
        if config.force:
            row["out_of_range"] = ";".join(forced)
        rows.append(row)
    _LOGGER.debug("Computed %i rate rows", len(rows))
    return CommandResult(columns=columns, rows=rows)
