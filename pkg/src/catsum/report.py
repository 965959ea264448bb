"""Verification report shared by the exact and rigorous sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"


@dataclass
class VerificationReport:
    """Outcome of checking one claim over an integer range.

    ``failures`` holds ``(n, verdict)`` pairs in ascending ``n``.  A verdict
    starting with ``"inconclusive"`` means the precision cap was reached
    without deciding the inequality; anything else is a genuine violation.
    ``details`` carries claim-specific extras (thresholds, coefficient
    checks) and is serialized verbatim.
    """

    claim_id: str
    range: tuple[int, int]
    checked: int
    failures: list[tuple[int, str]] = field(default_factory=list)
    max_precision_used: int = 0
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if not self.failures else "fail"

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def violations(self) -> list[tuple[int, str]]:
        return [f for f in self.failures if not f[1].startswith(INCONCLUSIVE)]

    @property
    def inconclusive(self) -> list[tuple[int, str]]:
        return [f for f in self.failures if f[1].startswith(INCONCLUSIVE)]

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "range": list(self.range),
            "checked": self.checked,
            "failures": [{"n": n, "verdict": v} for n, v in self.failures],
            "max_precision_used": self.max_precision_used,
            "status": self.status,
            "details": self.details,
        }
