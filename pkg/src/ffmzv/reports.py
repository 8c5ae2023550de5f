"""Structured pass/fail/observation records for every verification run."""

from __future__ import annotations

import json
from dataclasses import dataclass

TOOL_VERSION = "0.1.0"

_STATUSES = ("pass", "fail", "observation")


@dataclass(frozen=True)
class Case:
    input: str
    status: str
    detail: str = ""

    def __post_init__(self):
        if self.status not in _STATUSES:
            raise ValueError(f"bad case status {self.status!r}")


@dataclass
class Report:
    check: str
    params: dict
    cases: list
    version: str = TOOL_VERSION
    elapsed_ms: float | None = None

    @property
    def summary(self) -> dict:
        out = {"pass": 0, "fail": 0, "observation": 0}
        for c in self.cases:
            out[c.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def sorted(self) -> "Report":
        return Report(self.check, self.params, sorted(self.cases, key=lambda c: c.input),
                      self.version, self.elapsed_ms)

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "cases": [{"input": c.input, "status": c.status, "detail": c.detail}
                      for c in self.cases],
            "summary": self.summary,
            "version": self.version,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self, indent=2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def merge(check: str, params: dict, reports) -> Report:
    """Concatenate the cases of several reports under one heading."""
    cases = []
    for r in reports:
        cases.extend(r.cases)
    return Report(check=check, params=params, cases=cases)
