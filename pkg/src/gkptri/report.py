"""Uniform pass/fail records returned by every verification routine."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    finding: bool = False
    data: dict = field(default_factory=dict)

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        extra = f"  ({self.detail})" if self.detail else ""
        return f"{tag}  {self.name}{extra}"


def all_passed(checks: Iterable[Check]) -> bool:
    return all(c.passed for c in checks)


def first_failure(checks: Iterable[Check]) -> Check | None:
    for c in checks:
        if not c.passed:
            return c
    return None
