"""Verification reports shared by the check suites and the CLI."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    count: int = 1
    counterexample: Any = None


@dataclass
class VerificationReport:
    suite: str
    graph: str
    params: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    elapsed: float = 0.0
    _t0: float = field(default_factory=time.perf_counter, repr=False)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, count: int = 1, counterexample=None) -> Check:
        c = Check(name, bool(passed), count, counterexample)
        self.checks.append(c)
        return c

    def tally(self, name: str, failures: list, count: int) -> Check:
        """One check summarizing ``count`` cases; keeps the first failure."""
        return self.add(name, not failures, count, failures[0] if failures else None)

    def finish(self) -> "VerificationReport":
        self.elapsed = time.perf_counter() - self._t0
        return self

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "graph": self.graph,
            "params": self.params,
            "ok": self.ok,
            "elapsed": round(self.elapsed, 3),
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "count": c.count,
                    **({"counterexample": c.counterexample} if not c.passed else {}),
                }
                for c in self.checks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, default=str)

    def to_text(self) -> str:
        head = f"{self.suite} on {self.graph} {self.params}"
        lines = [head]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name} ({c.count} cases)")
            if not c.passed:
                lines.append(f"         counterexample: {c.counterexample}")
        lines.append(f"  => {'PASS' if self.ok else 'FAIL'} in {self.elapsed:.2f}s")
        return "\n".join(lines)
