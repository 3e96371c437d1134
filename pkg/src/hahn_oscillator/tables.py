"""Delimited output for spectra, wavefunctions and scan results.

CSV files carry a single header row and nothing else; floats are written
with 17 significant digits so they round-trip bit for bit. JSON files hold
``{"metadata": {...}, "columns": [...], "rows": [[...], ...]}`` with
non-finite floats written as ``null``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path
from typing import Any, Sequence

FORMATS = ("csv", "json")


def _csv_cell(value: Any) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _json_cell(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def render(
    columns: Sequence[str],
    rows: Sequence[Sequence[Any]],
    metadata: dict[str, Any],
    fmt: str = "csv",
) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_csv_cell(v) for v in row])
        return buf.getvalue()
    if fmt == "json":
        doc = {
            "metadata": metadata,
            "columns": list(columns),
            "rows": [[_json_cell(v) for v in row] for row in rows],
        }
        return json.dumps(doc, indent=1) + "\n"
    raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")


def write(
    path: str | Path,
    columns: Sequence[str],
    rows: Sequence[Sequence[Any]],
    metadata: dict[str, Any],
    fmt: str = "csv",
) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render(columns, rows, metadata, fmt))
    return path


def read_csv(path: str | Path) -> tuple[list[str], list[list[str]]]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        return header, [row for row in reader]


def tag(value: float) -> str:
    """Filesystem-friendly rendering of a parameter value, e.g. -0.7 -> ``m0.7``."""
    text = repr(float(value))
    return text.replace("-", "m")
