"""Spectrum membership Data Transfer Object."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Tuple


@dataclass(frozen=True)
class SpectrumDTO:
    """DTO for the answer to "can the family have measure x?"."""

    prime: int
    x: Fraction
    family: str
    member: bool
    preperiod: Tuple[int, ...]
    period: Tuple[int, ...]
    leading_digit: int

    @property
    def expansion(self) -> str:
        """Digits of x/(p-1), the repeating block in parentheses."""
        head = ",".join(str(d) for d in self.preperiod)
        if not self.period:
            return head or "0"
        block = ",".join(str(d) for d in self.period)
        return f"{head}({block})" if head else f"({block})"

    def to_document(self) -> Dict[str, Any]:
        """Record for every output format."""
        return {
            "p": self.prime,
            "x": self.x,
            "family": self.family,
            "member": self.member,
            "digits": self.expansion,
            "leading_digit": self.leading_digit,
        }
