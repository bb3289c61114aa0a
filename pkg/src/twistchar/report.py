"""Pass/fail reports returned by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Report:
    """Outcome of one verification suite on one root system.

    ``params`` records what was examined (window sizes, pair counts,
    sampling mode) so a report is interpretable on its own.  A failing
    report carries the first counterexample found.
    """

    check: str
    kind: str
    passed: bool
    params: dict = field(default_factory=dict)
    counterexample: dict | None = None

    def to_json(self) -> dict:
        out = {
            "check": self.check,
            "kind": self.kind,
            "params": self.params,
            "pass": self.passed,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out

    def describe(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extras = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        line = f"{status} {self.check} [{self.kind}] {extras}".rstrip()
        if not self.passed and self.counterexample is not None:
            line += f" counterexample={self.counterexample}"
        return line
