"""Structured verification reports shared by the checkers and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class BierReport:
    """Named pass/fail checks plus machine-readable values.

    A failed check always carries a witness in ``detail``.
    """

    command: str
    checks: list[Check] = field(default_factory=list)
    values: dict[str, Any] = field(default_factory=dict)

    def add(self, name: str, passed: bool, detail: str = "") -> bool:
        if not passed and not detail:
            raise ValueError(f"failed check {name!r} needs a witness")
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    def extend(self, other: "BierReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.detail))
        for k, v in other.values.items():
            self.values[prefix + k] = v

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "ok": self.ok,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
            "values": {k: _jsonable(v) for k, v in self.values.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = [f"# {self.command}"]
        for k, v in self.values.items():
            if isinstance(v, (list, tuple)) and v and isinstance(v[0], str):
                lines.append(f"{k}:")
                lines.extend(f"  {item}" for item in v)
            else:
                lines.append(f"{k}: {_fmt_value(v)}")
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"[{status}] {c.name}" + (f": {c.detail}" if c.detail else ""))
        lines.append("result: " + ("ok" if self.ok else "FAILED"))
        return "\n".join(lines) + "\n"


def _fmt_value(v) -> str:
    if isinstance(v, tuple):
        return "(" + ",".join(map(str, v)) + ")"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _jsonable(v):
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    if isinstance(v, list):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v
