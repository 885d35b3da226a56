"""Machine-readable run reports emitted by the CLI."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field

CSV_COLUMNS = ("a", "b", "d", "g", "h1_I4", "kind", "dim_w", "tangent_dim", "criteria")


@dataclass
class RunReport:
    command: list[str]
    model: str | None = None
    inputs: dict = field(default_factory=dict)
    payload: list[dict] = field(default_factory=list)
    checks: dict = field(default_factory=dict)
    wall_time: float | None = None

    def to_dict(self, stable: bool = False) -> dict:
        doc = asdict(self)
        if stable:
            doc.pop("wall_time")
        return doc

    def serialize(self, stable: bool = False) -> str:
        return json.dumps(self.to_dict(stable), sort_keys=True, indent=2) + "\n"

    @classmethod
    def parse(cls, text: str) -> "RunReport":
        doc = json.loads(text)
        return cls(
            command=doc["command"],
            model=doc.get("model"),
            inputs=doc.get("inputs", {}),
            payload=doc.get("payload", []),
            checks=doc.get("checks", {}),
            wall_time=doc.get("wall_time"),
        )


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (list, tuple)):
        return ";".join(map(str, value))
    return str(value)


def rows_to_csv(rows: list[dict], columns=CSV_COLUMNS) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def rows_to_table(rows: list[dict], columns=None) -> str:
    if not rows:
        return "(no rows)\n"
    if columns is None:
        columns = [c for c in rows[0] if not isinstance(rows[0][c], (dict, list))] or list(rows[0])
    cells = [[_cell(r.get(c)) for c in columns] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"
