"""Approximation function interface."""

from fractions import Fraction
from typing import Iterator, Protocol, Tuple


class IPsiRule(Protocol):
    """Interface for a rule-defined approximation function psi."""

    def value(self, n: int) -> Fraction:
        """Evaluate psi.

        Args:
            n: Positive integer

        Returns:
            psi(n) >= 0
        """
        ...

    def support(self, limit: int) -> Iterator[Tuple[int, Fraction]]:
        """Enumerate the support.

        Args:
            limit: Largest n to consider

        Returns:
            Pairs (n, psi(n)) with psi(n) > 0 and n <= limit, n increasing
        """
        ...

    def label(self, n: int) -> str:
        """Name the part of the rule that produced psi(n).

        Args:
            n: Positive integer in the support

        Returns:
            Short label for tabular output
        """
        ...
