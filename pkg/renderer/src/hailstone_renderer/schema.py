"""Loading and validation of the figure dataset files.

The renderer is a pure view: it accepts exactly the documented CSV/JSON
schemas and aborts before producing any output when a file does not match.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

EXPECTED_COLUMNS = {
    "1": ["x", "pow2_factor"],
    "2": ["n", "reflected_tzs", "sorted_tzs"],
    "3": ["x", "reflect_prev", "reflect_curr"],
    "4a": ["n", "rld"],
    "4b": ["value", "rld_count", "digit_sum_count"],
    "5": ["L", "p_less", "p_greater", "p_equal", "p_ratio", "q_gap_mean"],
}


class SchemaError(ValueError):
    """The input file does not match the documented dataset schema."""


def _parse_cell(text: str):
    try:
        return int(text)
    except ValueError:
        try:
            return float(text)
        except ValueError:
            raise SchemaError(f"non-numeric cell {text!r}") from None


def load_dataset(path: str | Path, dataset_id: str) -> dict[str, list]:
    """Read one dataset file (CSV or JSON by suffix) and validate it.

    Returns {column name: list of numbers}. Raises SchemaError on a header
    or shape mismatch, an empty table, or non-numeric cells.
    """
    if dataset_id not in EXPECTED_COLUMNS:
        raise SchemaError(f"unknown dataset id {dataset_id!r}")
    path = Path(path)
    expected = EXPECTED_COLUMNS[dataset_id]
    if path.suffix == ".json":
        columns = _load_json(path, dataset_id)
    else:
        columns = _load_csv(path)
    if list(columns) != expected:
        raise SchemaError(
            f"{path.name}: columns {list(columns)} do not match {expected} for dataset {dataset_id}"
        )
    lengths = {len(values) for values in columns.values()}
    if len(lengths) > 1:
        raise SchemaError(f"{path.name}: ragged columns")
    if lengths == {0}:
        raise SchemaError(f"{path.name}: dataset is empty")
    return columns


def _load_csv(path: Path) -> dict[str, list]:
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path.name}: no header row") from None
        columns: dict[str, list] = {name: [] for name in header}
        if len(columns) != len(header):
            raise SchemaError(f"{path.name}: duplicate column names")
        for row in reader:
            if len(row) != len(header):
                raise SchemaError(f"{path.name}: row width {len(row)} != {len(header)}")
            for name, cell in zip(header, row):
                columns[name].append(_parse_cell(cell))
    return columns


def _load_json(path: Path, dataset_id: str) -> dict[str, list]:
    with open(path) as handle:
        try:
            payload = json.load(handle)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path.name}: invalid JSON ({exc})") from None
    if not isinstance(payload, dict) or "columns" not in payload:
        raise SchemaError(f"{path.name}: expected an object with a 'columns' field")
    if str(payload.get("figure_id")) != dataset_id:
        raise SchemaError(
            f"{path.name}: figure_id {payload.get('figure_id')!r} does not match {dataset_id!r}"
        )
    columns = payload["columns"]
    if not isinstance(columns, dict):
        raise SchemaError(f"{path.name}: 'columns' must be an object")
    for name, values in columns.items():
        if not isinstance(values, list) or not all(isinstance(v, (int, float)) for v in values):
            raise SchemaError(f"{path.name}: column {name!r} is not a numeric list")
    return {name: list(values) for name, values in columns.items()}
