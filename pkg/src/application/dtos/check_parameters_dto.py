"""Verification parameter Data Transfer Object."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from src.application.dtos.rule_spec_dto import RuleSpecDTO


@dataclass(frozen=True)
class CheckParametersDTO:
    """DTO carrying the optional per-check flags of ``verify``.

    Every field left as None falls back to the check's suite default.
    """

    p: Optional[int] = None
    n: Optional[int] = None
    psi: Optional[Fraction] = None
    x: Optional[Fraction] = None
    q: Optional[int] = None
    k: Optional[int] = None
    max_n: Optional[int] = None
    max_span: Optional[int] = None
    max_depth: Optional[int] = None
    k_max: Optional[int] = None
    samples: Optional[int] = None
    seed: int = 0
    depth: Optional[int] = None
    digits: Optional[str] = None
    start: int = 1
    stop: Optional[int] = None
    rule: Optional[RuleSpecDTO] = None
    cap: Optional[int] = None

    def primes(self, default: Tuple[int, ...]) -> Tuple[int, ...]:
        """The given prime alone, or the suite default."""
        return (self.p,) if self.p is not None else default
