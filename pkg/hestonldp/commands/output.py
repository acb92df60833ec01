import csv
import io
import math
import sys
from enum import Enum
from typing import Any

import numpy as np
import orjson
from pydantic import BaseModel

from hestonldp.commands.models import CommandResult, OutputFormat, RunConfig



CSV_DIGITS = 9


def jsonable(obj: Any) -> Any:
    """Replace non-finite floats with "inf"/"-inf"/"nan" and models with dicts."""
    if isinstance(obj, np.generic):
        obj = obj.item()
    if isinstance(obj, BaseModel):
        return jsonable(obj.dict())
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, float):
        if math.isnan(obj):
            return "nan"
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        return float(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def format_cell(value: Any) -> str:
    if isinstance(value, np.generic):
        value = value.item()
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return format(value, f".{CSV_DIGITS}g")
    return str(value)


def render_json(config: RunConfig, result: CommandResult) -> bytes:
    payload = {
        "config": config.echo(),
        result.rows_key: result.rows,
        **result.summary,
    }
    return orjson.dumps(
        jsonable(payload),
        option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS | orjson.OPT_APPEND_NEWLINE
    )


def render_csv(config: RunConfig, result: CommandResult) -> bytes:
    buffer = io.StringIO()
    comment = orjson.dumps(jsonable(config.echo()), option=orjson.OPT_SORT_KEYS).decode()
    buffer.write(f"# {comment}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(result.columns)
    for row in result.rows:
        writer.writerow([format_cell(row.get(column)) for column in result.columns])
    return buffer.getvalue().encode()


def render(config: RunConfig, result: CommandResult) -> bytes:
    if config.output.format is OutputFormat.JSON:
        return render_json(config, result)
    return render_csv(config, result)


def write_result(config: RunConfig, result: CommandResult) -> None:
    """Write the rendered result to the configured path, or stdout."""
    data = render(config, result)
    if config.output.path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    with open(config.output.path, "wb") as fh:
        fh.write(data)
