"""Pass/fail bookkeeping shared by the checking routines."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    note: str = ""

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "checked": self.checked, "failures": list(self.failures)}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Report:
    title: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list[str]:
        return [f"{c.name}: {f}" for c in self.checks for f in c.failures]

    def to_dict(self) -> dict:
        return {"title": self.title, "passed": self.passed, "checks": [c.to_dict() for c in self.checks]}

    def lines(self) -> list[str]:
        out = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            extra = f" ({c.note})" if c.note else ""
            out.append(f"  [{status}] {c.name}: {c.checked} checked{extra}")
            out.extend(f"      {f}" for f in c.failures[:10])
            if len(c.failures) > 10:
                out.append(f"      ... {len(c.failures) - 10} more")
        return out


def collect(name: str, failures: list[str], checked: int, limit: int = 50, note: str = "") -> CheckResult:
    return CheckResult(name, not failures, checked, failures[:limit], note)
