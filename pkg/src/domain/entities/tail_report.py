"""Finite-stage tail union report entity."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple

from src.domain.entities.ball_set import BallSet
from src.domain.value_objects.family_tag import FamilyTag


@dataclass(frozen=True)
class StageMeasure:
    """One stage of a tail union."""

    n: int
    psi: Fraction
    measure: Fraction


@dataclass(frozen=True)
class TailReport:
    """Union of stage sets S_n for N <= n <= T, with the measure series.

    ``measure <= min(1, series)`` always holds by subadditivity.
    """

    family: FamilyTag
    prime: int
    start: int
    stop: int
    union: BallSet
    measure: Fraction
    series: Fraction
    stages: Tuple[StageMeasure, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        """Validate entity after initialization."""
        if not 1 <= self.start <= self.stop:
            raise ValueError(f"Invalid range [{self.start}, {self.stop}]")
        if self.measure > min(Fraction(1), self.series):
            raise ValueError("Union measure exceeds the measure series")

    @property
    def stage_count(self) -> int:
        """Number of supported stages in the range."""
        return len(self.stages)
