"""Check records shared by the verification suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = ["CheckResult", "SuiteReport"]


@dataclass
class CheckResult:
    name: str
    box: tuple[int, ...]
    anchor: str
    passed: bool
    experimental: bool = False
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "box": list(self.box),
            "anchor": self.anchor,
            "passed": self.passed,
            "experimental": self.experimental,
            "detail": self.detail,
        }


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ch.passed for ch in self.checks if not ch.experimental)

    def __bool__(self) -> bool:
        return self.passed

    @property
    def failures(self) -> list[CheckResult]:
        return [ch for ch in self.checks if not ch.passed and not ch.experimental]

    def extend(self, other: SuiteReport) -> None:
        self.checks.extend(other.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [ch.to_dict() for ch in self.checks],
        }

    def to_json(self, indent: int | None = None) -> str:
        if indent is None:
            return json.dumps(self.to_dict(), separators=(",", ":"))
        return json.dumps(self.to_dict(), indent=indent)
