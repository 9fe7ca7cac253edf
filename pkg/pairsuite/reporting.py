"""
Machine-readable command output.

One ``OutputRecord`` per command invocation, emitted as JSON (validated
against ``schemas/output_record.schema.json``) or CSV. Floats are written
with 12 significant digits, integers in full decimal, so identical inputs
give byte-identical output.
"""

import json
import logging
import math
import os
from dataclasses import dataclass, field
from functools import lru_cache
from io import StringIO
from typing import Any, Dict, List, Optional

import jsonschema
import numpy as np
import pandas as pd

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1.0"
SCHEMA_PATH = os.path.join(os.path.dirname(__file__), "schemas", "output_record.schema.json")

FLOAT_DIGITS = 12


def _normalise(value: Any, digits: int = FLOAT_DIGITS) -> Any:
    """JSON-ready copy: floats rounded to ``digits`` significant digits, non-finite floats to None."""
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, int):
        return int(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            return None
        return float(f"{value:.{digits}g}")
    if isinstance(value, dict):
        return {str(k): _normalise(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_normalise(v, digits) for v in value]
    if hasattr(value, "tolist"):
        return _normalise(value.tolist(), digits)
    raise TypeError(f"Cannot serialise {type(value).__name__}")


def _cell(value: Any, digits: int = FLOAT_DIGITS) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


@dataclass
class OutputRecord:
    """
    The result of one command.

    ``result["rows"]``, when present, is a table (list of flat dicts) and is
    what the CSV form emits; otherwise the CSV form is a single row of
    ``parameters.*`` and ``result.*`` columns.
    """

    command: str
    parameters: Dict[str, Any]
    result: Dict[str, Any]
    seed: Optional[int] = None
    elapsed_seconds: Optional[float] = None
    schema_version: str = SCHEMA_VERSION
    float_digits: int = field(default=FLOAT_DIGITS, repr=False)

    def to_dict(self) -> Dict[str, Any]:
        return _normalise({
            "schema_version": self.schema_version,
            "command": self.command,
            "parameters": self.parameters,
            "result": self.result,
            "seed": self.seed,
            "elapsed_seconds": self.elapsed_seconds,
        }, self.float_digits)

    def to_json(self) -> str:
        data = self.to_dict()
        validate_record(data)
        return json.dumps(data, sort_keys=True, indent=2) + "\n"

    def _table(self) -> List[Dict[str, Any]]:
        data = self.to_dict()
        rows = data["result"].get("rows")
        if isinstance(rows, list) and all(isinstance(row, dict) for row in rows):
            return rows

        flat: Dict[str, Any] = {"command": self.command}
        for key, value in data["parameters"].items():
            flat[f"parameters.{key}"] = value
        for key, value in data["result"].items():
            flat[f"result.{key}"] = value
        flat["seed"] = data["seed"]
        flat["elapsed_seconds"] = data["elapsed_seconds"]
        return [flat]

    def to_csv(self) -> str:
        rows = self._table()
        columns: List[str] = []
        for row in rows:
            columns.extend(key for key in row if key not in columns)
        frame = pd.DataFrame(
            [[_cell(row.get(col), self.float_digits) for col in columns] for row in rows],
            columns=columns,
            dtype=str,
        )
        buffer = StringIO()
        frame.to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        raise ValueError(f"Unknown output format: {fmt}")


@lru_cache(maxsize=1)
def load_schema() -> Dict[str, Any]:
    with open(SCHEMA_PATH, "r", encoding="utf-8") as f:
        return json.load(f)


def validate_record(data: Dict[str, Any]) -> None:
    """
    Validate a JSON-ready record against the shipped schema.

    Raises:
        jsonschema.ValidationError: If the record does not conform
    """
    jsonschema.validate(instance=data, schema=load_schema())
