"""Base-p digit vector entity."""

from dataclasses import dataclass
from typing import Iterator, Tuple


@dataclass(frozen=True)
class DigitVector:
    """Digits ``d_0 .. d_{M-1}`` of a p-adic integer modulo ``p^M``.

    The least significant digit comes first.
    """

    prime: int
    digits: Tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate entity after initialization."""
        if self.prime < 2:
            raise ValueError("Prime must be at least 2")
        if any(not 0 <= d < self.prime for d in self.digits):
            raise ValueError(f"Digits must lie in [0, {self.prime})")

    @property
    def precision(self) -> int:
        """Number of stored digits, M."""
        return len(self.digits)

    def to_residue(self) -> int:
        """Reconstruct ``sum d_m p^m`` in ``[0, p^M)``."""
        value = 0
        for digit in reversed(self.digits):
            value = value * self.prime + digit
        return value

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __getitem__(self, index: int) -> int:
        return self.digits[index]
