"""
Rendering of command output.

JSON is written with sorted keys and a trailing newline so identical inputs
give byte-identical files. Every JSON-emitting command has a schema in
`cli/schemas/`.
"""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Iterable, Mapping, Sequence

SCHEMA_DIR = Path(__file__).resolve().parent / "schemas"


def to_json(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def to_csv(rows: Iterable[Mapping[str, str]], columns: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def write_file(path: str, text: str) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text)


def load_schema(command: str) -> dict:
    return json.loads((SCHEMA_DIR / f"{command}.schema.json").read_text())


VERIFY_SUMMARY_COLUMNS = (
    "n", "family", "params", "beta", "graph_count", "solved", "best_value", "closed_form_value",
    "passed", "failed_checks", "known_ties",
)


def verify_summary_rows(cells: Iterable[Mapping]) -> list[dict[str, str]]:
    """One CSV row per verification cell, built from the JSON cell reports."""
    rows = []
    for cell in cells:
        utility = cell["utility"]
        rows.append(
            {
                "n": str(cell["n"]),
                "family": utility["family"],
                "params": ";".join(
                    f"{k}={','.join(v) if isinstance(v, list) else v}" for k, v in sorted(utility["params"].items())
                ),
                "beta": utility["beta"],
                "graph_count": str(cell["graph_count"]),
                "solved": str(cell["solved"]),
                "best_value": cell["best_value"],
                "closed_form_value": cell["closed_form_value"],
                "passed": "yes" if cell["passed"] else "no",
                "failed_checks": ";".join(c["name"] for c in cell["structural_checks"] if not c["passed"]),
                "known_ties": ";".join(c["name"] for c in cell["structural_checks"] if c.get("known_tie")),
            }
        )
    return rows
