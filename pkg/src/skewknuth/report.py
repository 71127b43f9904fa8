"""Pass/fail records produced by the identity checkers and the verify suites."""
from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Failure:
    identity: str
    inputs: str
    lhs: Any
    rhs: Any

    def to_dict(self) -> dict[str, str]:
        return {"identity": self.identity, "inputs": self.inputs, "lhs": str(self.lhs), "rhs": str(self.rhs)}


@dataclass
class VerificationReport:
    suite: str
    cases_run: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> Failure | None:
        return self.failures[0] if self.failures else None

    def check(self, identity: str, inputs: str, lhs: Any, rhs: Any) -> bool:
        """Record one comparison; returns whether both sides agreed."""
        self.cases_run += 1
        if lhs != rhs:
            self.failures.append(Failure(identity, inputs, lhs, rhs))
            return False
        return True

    def merge(self, other: VerificationReport) -> None:
        self.cases_run += other.cases_run
        self.failures.extend(other.failures)

    @contextmanager
    def timed(self):
        start = time.perf_counter()
        try:
            yield self
        finally:
            self.elapsed_ms += int((time.perf_counter() - start) * 1000)

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "cases_run": self.cases_run,
            "failures": [f.to_dict() for f in self.failures],
            "elapsed_ms": self.elapsed_ms,
        }
