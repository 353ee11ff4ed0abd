"""Deterministic verification reports.

A report is one line per checked property plus a machine-readable summary
block; rendering the same report twice yields byte-identical text, which the
harness treats as a contract (same seed, same cases, same bytes).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed_cases: int
    total_cases: int
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.passed_cases == self.total_cases

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict} {self.name} {self.passed_cases}/{self.total_cases}"


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    seed: int
    cases: int
    properties: tuple[PropertyResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)

    def to_text(self) -> str:
        lines = [
            f"suite: {self.suite}",
            f"seed: {self.seed}",
            f"cases: {self.cases}",
        ]
        for prop in self.properties:
            lines.append(prop.line())
            if prop.counterexample is not None:
                for row in prop.counterexample.splitlines():
                    lines.append(f"  | {row}")
        summary = {
            "suite": self.suite,
            "seed": self.seed,
            "cases": self.cases,
            "properties": len(self.properties),
            "failures": sum(0 if p.passed else 1 for p in self.properties),
        }
        lines.append("summary " + json.dumps(summary, sort_keys=True))
        return "\n".join(lines) + "\n"
