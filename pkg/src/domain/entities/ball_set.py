"""Finite unions of p-adic balls as a normalized radix-p trie.

A node is ``True`` (the whole class below it is in the set), ``False``
(nothing below it is) or a tuple of p children indexed by the next base-p
digit. The root stands for Z_p; the child at digit d of a node for
``c + p^m Z_p`` stands for ``c + d p^m + p^{m+1} Z_p``. No branch has p equal
leaf children, so equal sets have equal tries.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterator, List, Set, Tuple, Union

Node = Union[bool, Tuple[Any, ...]]

FULL: Node = True
EMPTY: Node = False


def make_node(children: Tuple[Node, ...]) -> Node:
    """Collapse a branch whose children are all Full or all Empty."""
    first = children[0]
    if isinstance(first, bool) and all(child is first for child in children):
        return first
    return children


def node_insert(node: Node, p: int, digits: List[int], index: int = 0) -> Node:
    """Add the class spelled by ``digits[index:]`` below ``node``."""
    if node is FULL:
        return FULL
    if index == len(digits):
        return FULL
    children = list(node) if isinstance(node, tuple) else [EMPTY] * p
    d = digits[index]
    children[d] = node_insert(children[d], p, digits, index + 1)
    return make_node(tuple(children))


def node_union(a: Node, b: Node) -> Node:
    if a is FULL or b is FULL:
        return FULL
    if a is EMPTY:
        return b
    if b is EMPTY:
        return a
    assert isinstance(a, tuple) and isinstance(b, tuple)
    return make_node(tuple(node_union(x, y) for x, y in zip(a, b)))


def node_intersect(a: Node, b: Node) -> Node:
    if a is EMPTY or b is EMPTY:
        return EMPTY
    if a is FULL:
        return b
    if b is FULL:
        return a
    assert isinstance(a, tuple) and isinstance(b, tuple)
    return make_node(tuple(node_intersect(x, y) for x, y in zip(a, b)))


def node_complement(a: Node) -> Node:
    if isinstance(a, bool):
        return not a
    return tuple(node_complement(x) for x in a)


def node_measure(node: Node, p: int) -> Fraction:
    """Haar measure of the subtree relative to its own class."""
    if node is FULL:
        return Fraction(1)
    if node is EMPTY:
        return Fraction(0)
    assert isinstance(node, tuple)
    return sum((node_measure(child, p) for child in node), start=Fraction(0)) / p


def node_depth(node: Node) -> int:
    if isinstance(node, bool):
        return 0
    return 1 + max(node_depth(child) for child in node)


def node_classes(node: Node, p: int, residue: int = 0, depth: int = 0) -> Iterator[Tuple[int, int]]:
    """Yield ``(residue, depth)`` of every Full node, children in digit order."""
    if node is FULL:
        yield residue, depth
    elif isinstance(node, tuple):
        step = p**depth
        for d, child in enumerate(node):
            yield from node_classes(child, p, residue + d * step, depth + 1)


def residue_digits(p: int, residue: int, depth: int) -> List[int]:
    digits = []
    for _ in range(depth):
        residue, d = divmod(residue, p)
        digits.append(d)
    return digits


@dataclass(frozen=True)
class BallSet:
    """Normalized finite union of balls in Z_p, plus retained null points."""

    prime: int
    root: Node = EMPTY
    points: FrozenSet[Fraction] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        """Validate entity after initialization."""
        if self.prime < 2:
            raise ValueError("Prime must be at least 2")

    @classmethod
    def empty(cls, prime: int) -> "BallSet":
        """The empty set."""
        return cls(prime=prime)

    @classmethod
    def full(cls, prime: int) -> "BallSet":
        """Z_p itself."""
        return cls(prime=prime, root=FULL)

    @classmethod
    def from_classes(cls, prime: int, classes: List[Tuple[int, int]]) -> "BallSet":
        """Build the union of ``residue + p^depth Z_p`` over the given pairs."""
        root: Node = EMPTY
        for residue, depth in classes:
            root = node_insert(root, prime, residue_digits(prime, residue % prime**depth, depth))
        return cls(prime=prime, root=root)

    @property
    def is_empty(self) -> bool:
        """Check whether no ball and no point is present."""
        return self.root is EMPTY and not self.points

    @property
    def is_full(self) -> bool:
        """Check whether the set is all of Z_p."""
        return self.root is FULL

    @property
    def depth(self) -> int:
        """Depth of the deepest branch."""
        return node_depth(self.root)

    def measure(self) -> Fraction:
        """Exact Haar measure; retained points are null."""
        return node_measure(self.root, self.prime)

    def classes(self) -> List[Tuple[int, int]]:
        """Disjoint residue classes covering the set, in canonical order."""
        return list(node_classes(self.root, self.prime))

    def contains_residue(self, residue: int, precision: int) -> bool:
        """Check whether the class ``residue + p^precision Z_p`` lies in the balls."""
        node = self.root
        for d in residue_digits(self.prime, residue % self.prime**precision, precision):
            if isinstance(node, bool):
                return node
            node = node[d]
        return node is FULL

    def residues_at_depth(self, precision: int) -> Set[int]:
        """All residues mod p^precision whose class lies in the balls.

        Brute-force enumeration, meant as an oracle for small precision.
        """
        modulus = self.prime**precision
        return {r for r in range(modulus) if self.contains_residue(r, precision)}

    def to_dict(self) -> Dict[str, Any]:
        """Convert to the canonical JSON shape ``{"p": .., "classes": [[r, d], ..]}``."""
        return {"p": self.prime, "classes": [[r, d] for r, d in self.classes()]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BallSet":
        """Create a ball set from its canonical dictionary."""
        return cls.from_classes(
            int(data["p"]), [(int(r), int(d)) for r, d in data["classes"]]
        )

    def __str__(self) -> str:
        if self.is_full:
            return f"Z_{self.prime}"
        parts = [f"{r}+{self.prime}^{d}Z" for r, d in self.classes()]
        return " u ".join(parts) if parts else "{}"
