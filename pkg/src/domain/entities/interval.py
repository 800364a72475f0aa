"""Half-open real interval entity."""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class HalfOpenInterval:
    """The interval ``[left, right)`` with rational endpoints."""

    left: Fraction
    right: Fraction

    def __post_init__(self) -> None:
        """Validate entity after initialization."""
        if self.right < self.left:
            raise ValueError("Interval right endpoint precedes left endpoint")

    @property
    def length(self) -> Fraction:
        """Lebesgue measure of the interval."""
        return self.right - self.left

    def __str__(self) -> str:
        return f"[{self.left}, {self.right})"
