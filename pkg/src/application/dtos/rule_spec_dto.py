"""Approximation-rule request Data Transfer Object."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from src.domain.value_objects.rule_variant import RuleVariant


@dataclass(frozen=True)
class RuleSpecDTO:
    """DTO naming a built-in psi rule and its parameters.

    ``x`` and ``digits`` are alternatives for the constructions; ``base``
    names the rule a primed rule transforms.
    """

    variant: RuleVariant
    prime: Optional[int] = None
    digits: Optional[str] = None
    x: Optional[Fraction] = None
    depth: int = 8
    table: Tuple[Tuple[int, Fraction], ...] = field(default_factory=tuple)
    full_support: bool = False
    base: Optional["RuleSpecDTO"] = None

    @property
    def display_name(self) -> str:
        """Get a short description for logs and table headers."""
        parts = [self.variant.value]
        if self.digits is not None:
            parts.append(f"digits={self.digits}")
        if self.x is not None:
            parts.append(f"x={self.x}")
        if self.base is not None:
            parts.append(f"of {self.base.display_name}")
        return " ".join(parts)
