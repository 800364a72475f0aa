"""Target-measure digit sequence entity."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from src.domain.exceptions.domain_exceptions import (
    OutOfRangeException,
    RepresentsOneException,
)


@dataclass(frozen=True)
class SpectrumDigits:
    """Digits x_0, x_1, ... of a target in [0, 1), base p, zeros implied past the list.

    Encodes ``x = sum x_k p^{-k-1}``.
    """

    prime: int
    digits: Tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate entity after initialization."""
        if self.prime < 2:
            raise ValueError("Prime must be at least 2")
        if any(not 0 <= d < self.prime for d in self.digits):
            raise ValueError(f"Digits must lie in [0, {self.prime})")

    @classmethod
    def from_value(cls, prime: int, x: Fraction, length: int) -> "SpectrumDigits":
        """Canonical expansion of x truncated to ``length`` digits.

        Greedy exact division never produces a tail of (p - 1)s.

        Raises:
            OutOfRangeException: If x lies outside [0, 1]
            RepresentsOneException: If x = 1
        """
        x = Fraction(x)
        if not 0 <= x <= 1:
            raise OutOfRangeException(f"{x} is outside [0, 1]")
        if x == 1:
            raise RepresentsOneException("x = 1 has no expansion with liminf x_k < p - 1")
        digits = []
        for _ in range(length):
            x *= prime
            digit = x.numerator // x.denominator
            digits.append(digit)
            x -= digit
        return cls(prime=prime, digits=tuple(digits))

    @classmethod
    def parse(cls, prime: int, text: str) -> "SpectrumDigits":
        """Read ``"101"`` or, for p > 10, ``"1,12,0"``; x_0 comes first."""
        parts = text.split(",") if "," in text else list(text)
        if not parts or not all(part.strip().isdigit() for part in parts):
            raise ValueError(f"Digit string '{text}' must contain decimal digits only")
        return cls(prime=prime, digits=tuple(int(part) for part in parts))

    def digit(self, k: int) -> int:
        """x_k, with zeros past the stored list."""
        return self.digits[k] if 0 <= k < len(self.digits) else 0

    @property
    def value(self) -> Fraction:
        """The encoded number ``sum x_k p^{-k-1}``."""
        return sum(
            (Fraction(d, self.prime ** (k + 1)) for k, d in enumerate(self.digits)),
            start=Fraction(0),
        )

    def tail(self, k: int) -> Fraction:
        """``sum_{l > k} x_l p^{k-l}``, the part of x after digit k scaled to [0, 1)."""
        return sum(
            (
                Fraction(self.digit(l), self.prime ** (l - k))
                for l in range(k + 1, len(self.digits))
            ),
            start=Fraction(0),
        )

    @property
    def is_binary(self) -> bool:
        """Check every digit is 0 or 1."""
        return all(d in (0, 1) for d in self.digits)

    def __str__(self) -> str:
        return "".join(str(d) for d in self.digits)
