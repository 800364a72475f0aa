"""Measure report Data Transfer Object."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple


@dataclass(frozen=True)
class ShellRowDTO:
    """One shell of a measured union."""

    k: int
    measure: Fraction
    status: str


@dataclass(frozen=True)
class MeasureReportDTO:
    """DTO for a finite tail union and its shell decomposition.

    ``prime`` is None for unions on the real unit interval. ``critical_level`` is
    the rule's level token (an integer, ``inf`` or ``unknown``) for p-adic unions.
    """

    family: str
    prime: Optional[int]
    start: int
    stop: int
    measure: Fraction
    series: Fraction
    stage_count: int
    classes: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)
    shells: Tuple[ShellRowDTO, ...] = field(default_factory=tuple)
    residual: Optional[Fraction] = None
    stages: Tuple[Tuple[int, Fraction, Fraction], ...] = field(default_factory=tuple)
    critical_level: Optional[str] = None

    @property
    def prime_token(self) -> str:
        """The prime, or ``inf`` for the real line."""
        return "inf" if self.prime is None else str(self.prime)

    @property
    def display_name(self) -> str:
        """Get a one-line summary for table output."""
        return f"{self.family} p={self.prime_token} n in [{self.start}, {self.stop}]"

    def to_document(self) -> Dict[str, Any]:
        """Nested record for JSON output."""
        document: Dict[str, Any] = {
            "family": self.family,
            "p": self.prime_token,
            "range": [self.start, self.stop],
            "measure": self.measure,
            "series": self.series,
            "stages": self.stage_count,
            "classes": [[r, d] for r, d in self.classes],
        }
        if self.shells:
            document["shells"] = [
                {"k": s.k, "measure": s.measure, "status": s.status} for s in self.shells
            ]
            document["residual"] = self.residual
        if self.critical_level is not None:
            document["critical_level"] = self.critical_level
        return document

    def to_rows(self) -> List[Dict[str, Any]]:
        """Per-stage records for CSV and table output."""
        return [{"n": n, "psi": psi, "measure": m} for n, psi, m in self.stages]
