"""Boolean algebra and measure on finite unions of p-adic balls."""

from fractions import Fraction
from typing import Iterable, Union

from src.domain.entities.ball_set import (
    EMPTY,
    FULL,
    BallSet,
    Node,
    make_node,
    node_complement,
    node_insert,
    node_intersect,
    node_union,
    residue_digits,
)
from src.domain.entities.padic_ball import PAdicBall
from src.domain.exceptions.domain_exceptions import PrimeMismatchException
from src.domain.services.padic_core import residue_mod, valuation
from src.domain.value_objects.ball_kind import BallKind


def _check_primes(a: BallSet, b: Union[BallSet, PAdicBall]) -> None:
    if a.prime != b.prime:
        raise PrimeMismatchException(f"Cannot combine p={a.prime} with p={b.prime}")


def contains(ball_set: BallSet, x: Union[int, Fraction]) -> bool:
    """Membership of a rational in the balls or the retained points."""
    x = Fraction(x)
    if x in ball_set.points:
        return True
    p = ball_set.prime
    if valuation(p, x) < 0:
        return False
    node: Node = ball_set.root
    depth = 0
    while isinstance(node, tuple):
        depth += 1
        node = node[residue_mod(p, x, depth) // p ** (depth - 1)]
    return node is FULL


def _prune_points(root: Node, prime: int, points: Iterable[Fraction]) -> frozenset:
    probe = BallSet(prime=prime, root=root)
    return frozenset(x for x in points if not contains(probe, x))


def insert_ball(
    ball_set: BallSet, ball: PAdicBall, retain_singletons: bool = False
) -> BallSet:
    """Union a ball into a set.

    Singletons are null: dropped unless ``retain_singletons`` keeps them as
    membership-only points.

    Raises:
        PrimeMismatchException: If the primes differ
    """
    _check_primes(ball_set, ball)
    if ball.kind is BallKind.EMPTY:
        return ball_set
    if ball.kind is BallKind.SINGLETON:
        assert ball.center is not None
        if not retain_singletons or contains(ball_set, ball.center):
            return ball_set
        return BallSet(
            prime=ball_set.prime,
            root=ball_set.root,
            points=ball_set.points | {ball.center},
        )
    assert ball.residue is not None and ball.depth is not None
    root = node_insert(
        ball_set.root, ball.prime, residue_digits(ball.prime, ball.residue, ball.depth)
    )
    return BallSet(
        prime=ball_set.prime,
        root=root,
        points=_prune_points(root, ball_set.prime, ball_set.points),
    )


def measure(ball_set: BallSet) -> Fraction:
    """Exact Haar measure of the set."""
    return ball_set.measure()


def union(a: BallSet, b: BallSet) -> BallSet:
    """Set union.

    Raises:
        PrimeMismatchException: If the primes differ
    """
    _check_primes(a, b)
    root = node_union(a.root, b.root)
    return BallSet(
        prime=a.prime, root=root, points=_prune_points(root, a.prime, a.points | b.points)
    )


def union_all(prime: int, sets: Iterable[BallSet]) -> BallSet:
    """Union of many sets; the result does not depend on their order."""
    result = BallSet.empty(prime)
    for s in sets:
        result = union(result, s)
    return result


def intersect(a: BallSet, b: BallSet) -> BallSet:
    """Set intersection, keeping points that belong to both sides.

    Raises:
        PrimeMismatchException: If the primes differ
    """
    _check_primes(a, b)
    root = node_intersect(a.root, b.root)
    kept = {x for x in a.points if contains(b, x)} | {x for x in b.points if contains(a, x)}
    return BallSet(prime=a.prime, root=root, points=_prune_points(root, a.prime, kept))


def complement_in_Zp(a: BallSet) -> BallSet:
    """Complement in Z_p modulo null sets; retained points are dropped."""
    return BallSet(prime=a.prime, root=node_complement(a.root))


def difference(a: BallSet, b: BallSet) -> BallSet:
    """Balls of a outside b, modulo null sets."""
    return intersect(a, complement_in_Zp(b))


def is_subset(a: BallSet, b: BallSet) -> bool:
    """Check a is contained in b, ignoring retained points."""
    _check_primes(a, b)
    return node_intersect(a.root, b.root) == a.root


def shell(prime: int, k: int) -> BallSet:
    """The shell ``p^k Z_p^x`` of elements of valuation exactly k."""
    node: Node = make_node((EMPTY,) + (FULL,) * (prime - 1))
    for _ in range(k):
        node = make_node((node,) + (EMPTY,) * (prime - 1))
    return BallSet(prime=prime, root=node)


def tail_ball(prime: int, k: int) -> BallSet:
    """The class ``p^k Z_p``."""
    return BallSet.from_classes(prime, [(0, k)])


def shell_measure(ball_set: BallSet, k: int) -> Fraction:
    """Measure of the set inside the shell ``p^k Z_p^x``."""
    return intersect(ball_set, shell(ball_set.prime, k)).measure()


def contains_shell(ball_set: BallSet, k: int) -> bool:
    """Check the whole shell ``p^k Z_p^x`` lies in the set."""
    return is_subset(shell(ball_set.prime, k), ball_set)
