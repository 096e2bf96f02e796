"""Serialized check results and their JSON/text rendering."""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field

from .. import __version__
from ..ring import FiniteRing
from ..verdict import Verdict

FIELDS = ("ring", "check", "property", "verdict", "witness", "trace", "detail", "elapsed_ms", "engine_version")
TIMING_FIELDS = ("elapsed_ms",)


@dataclass
class Report:
    ring: str
    check: str
    property: str | None
    verdict: str
    witness: list[dict] | None
    trace: str = ""
    detail: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0
    engine_version: str = __version__

    def to_dict(self, timing: bool = True) -> dict:
        d = {k: getattr(self, k) for k in FIELDS}
        if not timing:
            for k in TIMING_FIELDS:
                d.pop(k)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(**{k: d[k] for k in FIELDS if k in d})


def _plain(value):
    """Make verdict extras JSON friendly (numpy ints, tuples)."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, "item"):
        return value.item()
    return value


def make_report(R: FiniteRing, ring_name: str, check: str, prop: str | None, v: Verdict, ms: float) -> Report:
    witness = None
    if v.witness:
        witness = [{"role": role, "index": x, "label": R.labels[x]} for role, x in v.witness]
    return Report(
        ring=ring_name,
        check=check,
        property=prop,
        verdict=v.status.value,
        witness=witness,
        trace=v.trace,
        detail=_plain(v.extra),
        elapsed_ms=round(ms, 3),
    )


def render_text(r: Report) -> str:
    line = f"{r.ring}  {r.check}: {r.verdict}"
    if r.witness:
        line += "  [" + ", ".join(f"{w['role']}={w['label']}" for w in r.witness) + "]"
    if r.trace:
        line += f"  ({r.trace})"
    return line


def emit_report(reports, fmt: str = "json", path=None, *, timing: bool = True, extra: dict | None = None) -> str:
    """Render reports as a JSON document or text lines, writing to ``path`` when given."""
    if fmt == "json":
        items = [r.to_dict(timing) for r in reports]
        doc = items if extra is None else {"engine_version": __version__, "reports": items, **extra}
        out = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    elif fmt == "text":
        out = "".join(render_text(r) + "\n" for r in reports)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path is None or path == "-":
        sys.stdout.write(out)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(out)
    return out


def strip_timing(doc):
    """Copy of a report document with timing fields removed, for comparisons."""
    if isinstance(doc, dict):
        return {k: strip_timing(v) for k, v in doc.items() if k not in TIMING_FIELDS}
    if isinstance(doc, list):
        return [strip_timing(v) for v in doc]
    return doc
