"""Claim records and JSON reports for verification campaigns."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional

from . import __version__

SCHEMA = 1


def _jsonable(x: Any) -> Any:
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


@dataclass
class Claim:
    claim_id: str
    anchor: str
    parameters: Dict[str, Any]
    expected: Any
    computed: Any
    passed: bool
    runtime_ms: Optional[float] = None
    note: str = ""

    def to_json(self, timing: bool = False) -> dict:
        d = {
            "claim_id": self.claim_id,
            "anchor": self.anchor,
            "parameters": _jsonable(self.parameters),
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "pass": bool(self.passed),
            "runtime_ms": round(self.runtime_ms, 3) if (timing and self.runtime_ms is not None) else None,
        }
        if self.note:
            d["note"] = self.note
        return d

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        params = ",".join(f"{k}={v}" for k, v in self.parameters.items())
        return f"[{mark}] {self.claim_id}({params}) expected={_short(self.expected)} computed={_short(self.computed)}"


def _short(x: Any, width: int = 60) -> str:
    s = json.dumps(_jsonable(x))
    return s if len(s) <= width else s[:width - 3] + "..."


def _param_key(params: Dict[str, Any]) -> tuple:
    """Numbers compare numerically, everything else as JSON text."""
    out = []
    for k, v in params.items():
        if isinstance(v, int) and not isinstance(v, bool):
            out.append((k, 0, v, ""))
        else:
            out.append((k, 1, 0, json.dumps(_jsonable(v))))
    return tuple(out)


@dataclass
class Report:
    claims: List[Claim] = field(default_factory=list)
    notes: Dict[str, str] = field(default_factory=dict)

    def add(self, claim_id: str, anchor: str, parameters: Dict[str, Any], expected: Any,
            computed: Any, passed: Optional[bool] = None, note: str = "",
            runtime_ms: Optional[float] = None) -> Claim:
        if passed is None:
            passed = expected == computed
        c = Claim(claim_id, anchor, dict(parameters), expected, computed, bool(passed), runtime_ms, note)
        self.claims.append(c)
        return c

    def extend(self, other: "Report") -> "Report":
        self.claims.extend(other.claims)
        self.notes.update(other.notes)
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def failures(self) -> List[Claim]:
        return [c for c in self.claims if not c.passed]

    def sorted_claims(self) -> List[Claim]:
        return sorted(self.claims, key=lambda c: (c.claim_id, _param_key(c.parameters)))

    def to_json(self, parameters: Optional[dict] = None, timing: bool = False) -> dict:
        return {
            "schema": SCHEMA,
            "tool": "tlzero",
            "version": __version__,
            "parameters": _jsonable(parameters or {}),
            "notes": dict(sorted(self.notes.items())),
            "all_pass": self.passed,
            "claims": [c.to_json(timing) for c in self.sorted_claims()],
        }

    def dumps(self, parameters: Optional[dict] = None, timing: bool = False) -> str:
        return json.dumps(self.to_json(parameters, timing), indent=2, sort_keys=False)


@contextmanager
def timed() -> Iterator[dict]:
    box = {"ms": 0.0}
    t0 = time.perf_counter()
    try:
        yield box
    finally:
        box["ms"] = (time.perf_counter() - t0) * 1000.0
