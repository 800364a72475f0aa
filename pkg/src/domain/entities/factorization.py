"""Prime factorization entity."""

from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``(prime, exponent)`` pairs, primes increasing."""

    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        """Validate entity after initialization."""
        primes = [q for q, _ in self.pairs]
        if primes != sorted(set(primes)):
            raise ValueError("Primes must be strictly increasing")
        if any(e < 1 for _, e in self.pairs):
            raise ValueError("Exponents must be positive")

    @property
    def value(self) -> int:
        """The integer the factorization reconstructs."""
        n = 1
        for q, e in self.pairs:
            n *= q**e
        return n

    @property
    def primes(self) -> Tuple[int, ...]:
        """Distinct prime divisors."""
        return tuple(q for q, _ in self.pairs)

    @property
    def omega(self) -> int:
        """Number of distinct prime divisors."""
        return len(self.pairs)

    @property
    def is_squarefree(self) -> bool:
        """Check whether every exponent is 1."""
        return all(e == 1 for _, e in self.pairs)

    def prime_powers(self) -> Tuple[int, ...]:
        """The unitary prime-power components ``q^e``."""
        return tuple(q**e for q, e in self.pairs)
