"""Structured pass/fail reports shared by all verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    witness: Any = None

    def to_json(self) -> dict:
        out: dict = {"name": self.name, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    """A named list of checks with the parameters that produced them."""

    title: str
    params: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "", witness: Any = None) -> bool:
        self.checks.append(Check(name, bool(passed), detail, witness))
        return bool(passed)

    def extend(self, checks: list[Check]) -> None:
        self.checks.extend(checks)

    def merge(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.detail, c.witness))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def first_failure(self) -> Check | None:
        fails = self.failures
        return fails[0] if fails else None

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "params": self.params,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }

    def summary(self) -> str:
        n = len(self.checks)
        bad = len(self.failures)
        status = "PASS" if not bad else f"FAIL ({bad} of {n})"
        return f"{self.title}: {status}"


class CheckCollector:
    """Accumulate pass/fail counts per check name, keeping the first witness of a failure."""

    def __init__(self) -> None:
        self.order: list[str] = []
        self.counts: dict[str, int] = {}
        self.failed: dict[str, Any] = {}

    def record(self, name: str, ok: bool, witness: Any = None) -> None:
        if name not in self.counts:
            self.order.append(name)
            self.counts[name] = 0
        self.counts[name] += 1
        if not ok and name not in self.failed:
            self.failed[name] = witness

    def checks(self) -> list[Check]:
        out = []
        for name in self.order:
            ok = name not in self.failed
            detail = f"{self.counts[name]} instances"
            out.append(Check(name, ok, detail, None if ok else self.failed[name]))
        return out
