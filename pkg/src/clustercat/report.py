"""Structured verification results and the versioned JSON report envelope."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

SCHEMA = "clustercat.report/1"


@dataclass
class Check:
    """Outcome of one verification sweep: what was checked and every counterexample."""

    name: str
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def fail(self, **info) -> None:
        self.counterexamples.append(info)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d


def jsonable(obj: Any) -> Any:
    """Convert tuples, Fractions, dataclasses and dict keys into JSON-friendly values."""
    if isinstance(obj, Check):
        return jsonable(obj.to_dict())
    if isinstance(obj, dict):
        return {k if isinstance(k, str) else str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else str(obj)
    if hasattr(obj, "__dataclass_fields__"):
        return jsonable(asdict(obj))
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    return str(obj)


def envelope(command: str, argv: list[str], quiver_hash: str | None, results: Any,
             checks: list[Check] | None = None, timing: float | None = None) -> dict:
    checks = checks or []
    return {
        "schema": SCHEMA,
        "command": command,
        "argv": list(argv),
        "quiver_hash": quiver_hash,
        "results": jsonable(results),
        "verification": {
            "ok": all(c.ok for c in checks),
            "checks": [c.to_dict() for c in checks],
        },
        "timing_seconds": None if timing is None else round(timing, 4),
    }


def dumps(report: dict) -> str:
    return json.dumps(jsonable(report), indent=2, sort_keys=True)
