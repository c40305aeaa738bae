"""Flat key=value run reports with a machine-readable JSON block."""

from __future__ import annotations

import json
from pathlib import Path

SCHEMA_VERSION = 1


def format_report(record: dict) -> str:
    lines = [f"schema={SCHEMA_VERSION}"]
    for key in sorted(record):
        value = record[key]
        if isinstance(value, (list, tuple)):
            value = ",".join(str(v) for v in value)
        lines.append(f"{key}={value}")
    lines.append("json=" + json.dumps(record, sort_keys=True))
    return "\n".join(lines) + "\n"


def write_report(path: str | Path, record: dict) -> None:
    Path(path).write_text(format_report(record), encoding="utf-8")
