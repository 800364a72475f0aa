"""Residue and digit schedules of the multiplicative-set construction."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from src.domain.entities.spectrum_digits import SpectrumDigits
from src.domain.value_objects.case_id import CaseId


@dataclass(frozen=True)
class StageSchedule:
    """Schedule for the support slice n = p^k q.

    Attributes:
        k: Power of p in n
        x_k: Target digit at position k
        residues: I_{x_k}, the residues m mod p whose primes get radius p^-k-1
        r: r_k, the remainder the digit schedule has to realise
        b: b_{k,1} .. b_{k,D}; b_{k,i} primes per (i, b') class
    """

    k: int
    x_k: int
    residues: Tuple[int, ...]
    r: Fraction
    b: Tuple[int, ...]

    def b_at(self, i: int) -> int:
        """b_{k,i} for i >= 1, zero past the truncation depth."""
        return self.b[i - 1] if 1 <= i <= len(self.b) else 0


@dataclass(frozen=True)
class Case2Tables:
    """Everything the psi of the multiplicative-set construction depends on."""

    case_id: CaseId
    prime: int
    generator: int
    K: int
    digits: SpectrumDigits
    depth: int
    stages: Tuple[StageSchedule, ...]

    def __post_init__(self) -> None:
        """Validate entity after initialization."""
        p = self.prime
        for stage in self.stages:
            if any(not 1 <= m < p for m in stage.residues):
                raise ValueError(f"Residues of stage {stage.k} must lie in [1, {p})")
            if any(not 0 <= d < p for d in stage.b):
                raise ValueError(f"Schedule digits of stage {stage.k} must lie in [0, {p})")

    @property
    def max_stage(self) -> int:
        """Largest k with p^k q in the support."""
        return self.stages[-1].k if self.stages else -1

    @property
    def orbit_factor(self) -> int:
        """Number of distinct residues ``+-(g + b'p^i)^{+-1}`` per schedule class."""
        return 2 if self.case_id is CaseId.TWO else 4

    def stage(self, k: int) -> StageSchedule:
        """Schedule for p^k q."""
        return self.stages[k]
