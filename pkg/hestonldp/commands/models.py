from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, conint

from hestonldp.model import HestonParams



class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class OutputSpec(BaseModel):
    path: Optional[str] = None
    format: OutputFormat = OutputFormat.CSV


class RunConfig(BaseModel):
    """Fully resolved configuration of one command invocation."""
    command: str
    params: HestonParams
    seed: conint(ge=0, lt=2**64) = 0
    force: bool = False
    options: Dict[str, Any] = Field(default_factory=dict)
    output: OutputSpec = Field(default_factory=OutputSpec)

    def echo(self) -> Dict[str, Any]:
        """The part of the config embedded in output files.

        The output path is left out so the same run written to two places
        produces identical bytes.
        """
        return {
            "command": self.command,
            "params": self.params.dict(),
            "seed": self.seed,
            "force": self.force,
            "options": self.options,
            "format": self.output.format.value,
        }


class CheckItem(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class CommandResult(BaseModel):
    """Table and summary produced by a command, and its exit code."""
    columns: List[str]
    rows: List[Dict[str, Any]]
    summary: Dict[str, Any] = Field(default_factory=dict)
    rows_key: str = "rows"
    exit_code: int = 0
