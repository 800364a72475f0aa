"""Approximation-function variant value object."""

from enum import Enum


class RuleVariant(Enum):
    """Which built-in psi rule a request names.

    The value doubles as the command-line ``--rule`` token.
    """

    ZERO = "zero"
    TABLE = "table"
    THEOREM1 = "theorem1"
    THEOREM2 = "theorem2"
    REAL_PRIME = "real-prime"
    PRIME_SQUARE = "prime-square"
    PRIMED = "primed"

    @classmethod
    def from_token(cls, token: str) -> "RuleVariant":
        """Parse a command-line token.

        Raises:
            ValueError: If the token names no rule
        """
        normalized = token.strip().lower()
        for variant in cls:
            if variant.value == normalized:
                return variant
        raise ValueError(f"Unknown rule '{token}'")
