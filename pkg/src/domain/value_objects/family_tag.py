"""Approximation-set family value object."""

from enum import Enum


class FamilyTag(Enum):
    """Selects one of the stage-set families.

    The value doubles as the command-line token.
    """

    A = "a"
    C = "c"
    B = "b"
    FRAK_A = "fa"
    FRAK_K = "fk"
    FRAK_A_STRICT = "fa-strict"

    @property
    def display_name(self) -> str:
        """Get the conventional symbol of the family.

        Returns:
            Human-readable family name
        """
        return {
            FamilyTag.A: "A^p",
            FamilyTag.C: "C^p",
            FamilyTag.B: "B^p",
            FamilyTag.FRAK_A: "FrakA^p",
            FamilyTag.FRAK_K: "FrakK^p",
            FamilyTag.FRAK_A_STRICT: "FrakA'^p",
        }[self]

    @classmethod
    def from_token(cls, token: str) -> "FamilyTag":
        """Parse a command-line token.

        Args:
            token: Token such as ``"c"`` or ``"fa"`` (case-insensitive)

        Returns:
            Matching family tag

        Raises:
            ValueError: If the token names no family
        """
        normalized = token.strip().lower()
        for tag in cls:
            if tag.value == normalized:
                return tag
        raise ValueError(f"Unknown family '{token}'")
