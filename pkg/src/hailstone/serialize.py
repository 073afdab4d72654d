"""Deterministic CSV/JSON serialization and atomic file output.

CSV: comma delimiter, LF line endings, header row always present. JSON:
one object (or array, for bare sequences) per file, two-space indent.
Identical inputs always produce identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
import tempfile
from fractions import Fraction

from .collatz import Trajectory
from .experiments import FigureDataset, MassRatioReport


def _cell(value) -> str:
    if isinstance(value, bool):
        raise TypeError("boolean cells are not part of any schema")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, Fraction):
        return repr(float(value))
    return str(value)


def _jsonable(value):
    if isinstance(value, Fraction):
        return float(value)
    return value


def _csv_text(header: list[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def dataset_csv_text(dataset: FigureDataset) -> str:
    return _csv_text(list(dataset.columns), zip(*dataset.columns.values()))


def dataset_json_text(dataset: FigureDataset) -> str:
    payload = {
        "figure_id": dataset.figure_id,
        "metadata": dataset.metadata,
        "columns": {name: [_jsonable(v) for v in vals] for name, vals in dataset.columns.items()},
    }
    return json.dumps(payload, indent=2) + "\n"


def sequence_csv_text(values: list[int]) -> str:
    return _csv_text(["value"], ([v] for v in values))


def sequence_json_text(values: list[int]) -> str:
    return json.dumps(list(values)) + "\n"


def trajectory_csv_text(traj: Trajectory) -> str:
    rows = [(i, value, t) for i, (value, t) in enumerate(traj.steps)]
    return _csv_text(["step_index", "value", "t_value"], rows)


def trajectory_json_text(traj: Trajectory) -> str:
    payload = {
        "start": traj.start,
        "formulation": traj.formulation,
        "terminated": traj.terminated,
        "steps": [{"step": i, "value": value, "t": t} for i, (value, t) in enumerate(traj.steps)],
    }
    return json.dumps(payload, indent=2) + "\n"


def mass_ratio_csv_text(report: MassRatioReport) -> str:
    d = report.to_dict()
    d.pop("gap_histogram", None)
    return _csv_text(list(d), [list(d.values())])


def mass_ratio_json_text(report: MassRatioReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def write_text(path: str | os.PathLike | None, text: str) -> None:
    """Write text to a file atomically (temp file + rename), or to stdout if path is None."""
    if path is None:
        sys.stdout.write(text)
        return
    path = os.fspath(path)
    directory = os.path.dirname(path) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=os.path.basename(path) + ".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
