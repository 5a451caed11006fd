"""Machine-checkable run reports shared by the CLI, scripts and tests."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any


def _plain(x: Any) -> Any:
    """Convert to JSON-ready values (matrices become row lists)."""
    if hasattr(x, "to_rows"):
        return x.to_rows()
    if hasattr(x, "as_list"):
        return x.as_list()
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


RESERVED = frozenset({"command", "inputs", "assertions", "overall", "wall_time"})


@dataclass
class Assertion:
    name: str
    expected: Any
    actual: Any
    passed: bool

    def to_dict(self) -> dict:
        return {"name": self.name, "expected": _plain(self.expected),
                "actual": _plain(self.actual), "pass": self.passed}


@dataclass
class RunReport:
    command: str
    inputs: dict = field(default_factory=dict)
    assertions: list[Assertion] = field(default_factory=list)
    results: dict = field(default_factory=dict)
    wall_time: float = 0.0
    _start: float = field(default_factory=time.perf_counter, repr=False)

    def check(self, name: str, expected: Any, actual: Any, passed: bool | None = None) -> bool:
        ok = (expected == actual) if passed is None else bool(passed)
        self.assertions.append(Assertion(name, expected, actual, ok))
        return ok

    @property
    def overall(self) -> bool:
        return all(a.passed for a in self.assertions)

    def finish(self) -> "RunReport":
        self.wall_time = time.perf_counter() - self._start
        return self

    def to_dict(self) -> dict:
        """Flat JSON object: the fixed report keys plus every result key."""
        clash = RESERVED.intersection(self.results)
        if clash:
            raise ValueError(f"result keys collide with report keys: {sorted(clash)}")
        out = {k: _plain(v) for k, v in self.results.items()}
        out.update({"command": self.command, "inputs": _plain(self.inputs),
                    "assertions": [a.to_dict() for a in self.assertions],
                    "overall": self.overall, "wall_time": round(self.wall_time, 3)})
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def lines(self) -> list[str]:
        out = [f"{self.command}: {'PASS' if self.overall else 'FAIL'} ({self.wall_time:.2f} s)"]
        for a in self.assertions:
            mark = "ok  " if a.passed else "FAIL"
            out.append(f"  [{mark}] {a.name}: expected {_plain(a.expected)}, got {_plain(a.actual)}")
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "RunReport":
        results = {k: v for k, v in d.items() if k not in RESERVED}
        r = cls(d["command"], d.get("inputs", {}), results=results, wall_time=d.get("wall_time", 0.0))
        r.assertions = [Assertion(a["name"], a["expected"], a["actual"], a["pass"]) for a in d["assertions"]]
        return r
