"""p-adic ball entity."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from src.domain.value_objects.ball_kind import BallKind


@dataclass(frozen=True)
class PAdicBall:
    """A closed ball of Q_p intersected with Z_p.

    Canonically one of: the empty set, a singleton ``{center}``, or a residue
    class ``residue + p^depth Z_p`` with ``0 <= residue < p^depth``.
    """

    prime: int
    kind: BallKind
    residue: Optional[int] = None
    depth: Optional[int] = None
    center: Optional[Fraction] = None

    def __post_init__(self) -> None:
        """Validate entity after initialization."""
        if self.prime < 2:
            raise ValueError("Prime must be at least 2")
        if self.kind is BallKind.CLASS:
            if self.depth is None or self.residue is None:
                raise ValueError("Residue class needs residue and depth")
            if self.depth < 0:
                raise ValueError("Depth cannot be negative")
            if not 0 <= self.residue < self.prime**self.depth:
                raise ValueError("Residue must be reduced modulo p^depth")
        elif self.kind is BallKind.SINGLETON:
            if self.center is None:
                raise ValueError("Singleton needs a center")

    @classmethod
    def empty(cls, prime: int) -> "PAdicBall":
        """Create the empty ball."""
        return cls(prime=prime, kind=BallKind.EMPTY)

    @classmethod
    def singleton(cls, prime: int, center: Fraction) -> "PAdicBall":
        """Create the null ball ``{center}``."""
        return cls(prime=prime, kind=BallKind.SINGLETON, center=Fraction(center))

    @classmethod
    def residue_class(cls, prime: int, residue: int, depth: int) -> "PAdicBall":
        """Create ``residue + p^depth Z_p``, reducing the residue first."""
        return cls(
            prime=prime,
            kind=BallKind.CLASS,
            residue=residue % prime**depth,
            depth=depth,
        )

    @classmethod
    def full(cls, prime: int) -> "PAdicBall":
        """Create Z_p itself."""
        return cls.residue_class(prime, 0, 0)

    @property
    def is_class(self) -> bool:
        """Check whether the ball is a residue class."""
        return self.kind is BallKind.CLASS

    @property
    def measure(self) -> Fraction:
        """Haar measure, ``p^-depth`` for classes and 0 otherwise."""
        if self.kind is BallKind.CLASS:
            assert self.depth is not None
            return Fraction(1, self.prime**self.depth)
        return Fraction(0)

    def __str__(self) -> str:
        if self.kind is BallKind.EMPTY:
            return "Empty"
        if self.kind is BallKind.SINGLETON:
            return f"Singleton({self.center})"
        return f"Class({self.residue}, {self.depth})"
