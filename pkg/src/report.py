"""
Rendering of command results: canonical JSON and Markdown tables.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd

from src import __version__
from src.invariant_config import ResolutionConfig
from src.invariant_table import FAMILIES, InvariantTable

TOOL_NAME = "qginv"
FLOAT_FORMAT = "%.12g"


@dataclass
class Report:
    command: str
    payload: Dict[str, Any] = field(default_factory=dict)
    tables: Dict[str, InvariantTable] = field(default_factory=dict)
    frames: Dict[str, pd.DataFrame] = field(default_factory=dict)


def normalize(value: Any) -> Any:
    """Floats through %.12g (non-finite to null), tuples to lists, keys to str."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return float(FLOAT_FORMAT % value) if math.isfinite(value) else None
    if isinstance(value, dict):
        return {str(k): normalize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [normalize(v) for v in value]
    if hasattr(value, "item"):
        # numpy scalars
        return normalize(value.item())
    return str(value)


def meta_block(config: ResolutionConfig) -> Dict[str, Any]:
    return {"tool": TOOL_NAME, "version": __version__, "config": config.to_dict()}


def report_dict(report: Report, config: ResolutionConfig) -> Dict[str, Any]:
    out: Dict[str, Any] = {"command": report.command, "meta": meta_block(config)}
    out.update(report.payload)
    for key, table in report.tables.items():
        out[key] = {"name": table.name, "invariants": table.to_dict(), "symbolic": table.symbolic()}
    for key, frame in report.frames.items():
        out[key] = frame.to_dict(orient="records")
    return normalize(out)


def to_json(report: Report, config: ResolutionConfig) -> str:
    return canonical_json(report_dict(report, config))


def canonical_json(data: Any) -> str:
    return json.dumps(normalize(data), sort_keys=True, indent=2, ensure_ascii=False)


# MARKDOWN
def _table_frames(table: InvariantTable) -> Dict[str, pd.DataFrame]:
    out: Dict[str, pd.DataFrame] = {}
    for family, keys in FAMILIES.items():
        rows: List[Dict[str, Any]] = []
        for key in sorted(table, key=lambda k: (k.endswith("_dual"), k)):
            base_key = key[: -len("_dual")] if key.endswith("_dual") and key != "Mod_dual" else key
            if base_key not in keys:
                continue
            g = table[key]
            unit_base: Optional[float] = g.exact.unit.base if g.exact is not None else None
            rows.append({
                "invariant": key,
                "value": g.symbolic(),
                "generator": g.generator,
                "base": unit_base,
                "resolution_limited": g.resolution_limited,
            })
        if rows:
            out[family] = pd.DataFrame(rows)
    return out


def _scalar_rows(payload: Dict[str, Any]) -> pd.DataFrame:
    flat = pd.json_normalize(normalize(payload), sep=".")
    if flat.empty:
        return pd.DataFrame(columns=["field", "value"])
    row = flat.iloc[0]
    return pd.DataFrame({"field": list(row.index), "value": [str(v) for v in row.values]})


def to_markdown(report: Report, config: ResolutionConfig) -> str:
    parts: List[str] = [f"# {TOOL_NAME} {report.command}", ""]
    meta = pd.DataFrame(
        [{"field": k, "value": str(v)} for k, v in sorted(config.to_dict().items())]
        + [{"field": "version", "value": __version__}]
    )
    parts += ["## meta", "", meta.to_markdown(index=False), ""]
    if report.payload:
        parts += ["## summary", "", _scalar_rows(report.payload).to_markdown(index=False), ""]
    for key, table in report.tables.items():
        for family, frame in _table_frames(table).items():
            parts += [f"## {key}: {family} ({table.name})", "", frame.to_markdown(index=False), ""]
    for key, frame in report.frames.items():
        parts += [f"## {key}", "", frame.to_markdown(index=False), ""]
    return "\n".join(parts)


def render(report: Report, fmt: str, config: ResolutionConfig) -> str:
    if fmt == "markdown":
        return to_markdown(report, config)
    return to_json(report, config)
