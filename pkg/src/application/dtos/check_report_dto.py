"""Check report Data Transfer Object."""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple


@dataclass(frozen=True)
class CheckReportDTO:
    """DTO for one executable check."""

    name: str
    verdict: str
    parameters: Tuple[Tuple[str, str], ...]
    quantities: Tuple[Tuple[str, str], ...]
    witness: Optional[Tuple[Tuple[str, str], ...]] = None

    @property
    def passed(self) -> bool:
        """Check whether the verdict is a pass."""
        return self.verdict == "pass"

    def to_document(self) -> Dict[str, Any]:
        """Record in the canonical report shape."""
        return {
            "check": self.name,
            "verdict": self.verdict,
            "parameters": dict(self.parameters),
            "quantities": dict(self.quantities),
            "witness": dict(self.witness) if self.witness else None,
        }


@dataclass(frozen=True)
class VerificationSummaryDTO:
    """Aggregate of several checks, ordered by check name."""

    checks: Tuple[CheckReportDTO, ...]

    @property
    def passed(self) -> bool:
        """Check whether every verdict passed."""
        return all(check.passed for check in self.checks)

    def to_document(self) -> Dict[str, Any]:
        """Nested record for JSON output."""
        return {
            "verdict": "pass" if self.passed else "fail",
            "checks": [check.to_document() for check in self.checks],
        }

    def to_rows(self) -> List[Dict[str, Any]]:
        """One record per check for CSV and table output."""
        return [
            {
                "check": c.name,
                "verdict": c.verdict,
                "witness": "; ".join(f"{k}={v}" for k, v in c.witness or ()),
            }
            for c in self.checks
        ]
