"""Executable check report entity."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple

from src.domain.value_objects.verdict import Verdict


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one executable check.

    Parameters, witness and quantities are stored as sorted ``(key, text)``
    pairs so reports compare and serialize deterministically. A passing
    report never carries a witness.
    """

    name: str
    verdict: Verdict
    parameters: Tuple[Tuple[str, str], ...] = field(default_factory=tuple)
    quantities: Tuple[Tuple[str, str], ...] = field(default_factory=tuple)
    witness: Tuple[Tuple[str, str], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        """Validate entity after initialization."""
        if self.verdict.passed and self.witness:
            raise ValueError(f"Passing check '{self.name}' cannot carry a witness")

    @classmethod
    def build(
        cls,
        name: str,
        passed: bool,
        parameters: Dict[str, object],
        quantities: Dict[str, object],
        witness: Dict[str, object],
    ) -> "CheckReport":
        """Create a report, rendering every value with ``str``; rationals always as ``num/den``.

        The witness is dropped when the check passed.
        """

        def pairs(data: Dict[str, object]) -> Tuple[Tuple[str, str], ...]:
            return tuple(sorted((key, _text(value)) for key, value in data.items()))

        return cls(
            name=name,
            verdict=Verdict.PASS if passed else Verdict.FAIL,
            parameters=pairs(parameters),
            quantities=pairs(quantities),
            witness=() if passed else pairs(witness),
        )

    @property
    def passed(self) -> bool:
        """Check whether the verdict is a pass."""
        return self.verdict.passed

    def to_dict(self) -> Dict[str, object]:
        """Convert to the canonical JSON shape."""
        return {
            "check": self.name,
            "verdict": self.verdict.value,
            "parameters": dict(self.parameters),
            "quantities": dict(self.quantities),
            "witness": dict(self.witness) if self.witness else None,
        }


def _text(value: object) -> str:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)
