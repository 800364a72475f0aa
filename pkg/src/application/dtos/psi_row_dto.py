"""Psi support row Data Transfer Object."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict


@dataclass(frozen=True)
class PsiRowDTO:
    """DTO for one row ``(n, psi(n))`` of a support table."""

    n: int
    psi: Fraction
    part: str

    @property
    def radius(self) -> Fraction:
        """Stage radius psi(n)/n."""
        return self.psi / self.n

    def to_row(self) -> Dict[str, Any]:
        """Flat record in output column order."""
        return {"n": self.n, "psi": self.psi, "part": self.part}
