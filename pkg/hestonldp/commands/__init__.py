from .domain import cmd_domain, families
from .models import (
    CheckItem,
    CommandResult,
    OutputFormat,
    OutputSpec,
    RunConfig
)
from .output import render, write_result
from .rate import cmd_rate, parse_x_grid
from .selftest import cmd_selftest
from .verify import cmd_verify, parse_t_grid



__all__ = [
    "cmd_domain",
    "families",
    "CheckItem",
    "CommandResult",
    "OutputFormat",
    "OutputSpec",
    "RunConfig",
    "render",
    "write_result",
    "cmd_rate",
    "parse_x_grid",
    "cmd_selftest",
    "cmd_verify",
    "parse_t_grid",
]
