"""Exact Lebesgue measure of stage sets on the real unit interval."""

import logging
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Tuple

from src.domain.entities.interval import HalfOpenInterval
from src.domain.exceptions.domain_exceptions import (
    InvalidInputException,
    OutOfRangeException,
)
from src.domain.interfaces.psi_rule import IPsiRule
from src.domain.services.number_theory import (
    divisors,
    next_prime_at_least,
    primes_up_to,
    unitary_splits,
)
from src.domain.value_objects.family_tag import FamilyTag

logger = logging.getLogger(__name__)

UNIT = HalfOpenInterval(Fraction(0), Fraction(1))


class RealTail(NamedTuple):
    """Measure of a finite tail union next to the limit it decreases to."""

    measure: Fraction
    limit: Fraction
    first_prime: int


def clip(left: Fraction, right: Fraction) -> HalfOpenInterval:
    """``[left, right)`` intersected with [0, 1); may come out empty."""
    left, right = max(left, UNIT.left), min(right, UNIT.right)
    return HalfOpenInterval(left, max(left, right))


def union_measure(intervals: Iterable[HalfOpenInterval]) -> Fraction:
    """Lebesgue measure of a finite union, by one sweep over sorted endpoints."""
    spans = sorted((i.left, i.right) for i in intervals if i.left < i.right)
    if not spans:
        return Fraction(0)
    total = Fraction(0)
    run_left, run_right = spans[0]
    for left, right in spans[1:]:
        if left > run_right:
            total += run_right - run_left
            run_left, run_right = left, right
        else:
            run_right = max(run_right, right)
    return total + run_right - run_left


def _centers(family: FamilyTag, n: int) -> List[Fraction]:
    if family is FamilyTag.FRAK_A:
        pairs: Iterable[Tuple[int, int]] = unitary_splits(n)
    elif family is FamilyTag.FRAK_K:
        pairs = ((a, n // a) for a in divisors(n))
    else:
        raise InvalidInputException(f"No real stage set for {family.display_name}")
    centers = []
    for top, bottom in pairs:
        centers.extend([Fraction(top, bottom), Fraction(-top, bottom)])
    return centers


def real_stage_intervals(family: FamilyTag, n: int, psi_n: Fraction) -> List[HalfOpenInterval]:
    """Balls ``B(c, psi(n)/n)`` of the real FrakA or FrakK stage set, clipped to [0, 1)."""
    radius = Fraction(psi_n) / n
    return [clip(c - radius, c + radius) for c in _centers(family, n)]


def real_tail_measure(family: FamilyTag, psi: IPsiRule, start: int, stop: int) -> Fraction:
    """Measure of the union of real stage sets over the support of psi in [start, stop]."""
    if not 1 <= start <= stop:
        raise InvalidInputException(f"Invalid range [{start}, {stop}]")
    intervals: List[HalfOpenInterval] = []
    for n, psi_n in psi.support(stop):
        if n >= start:
            intervals.extend(real_stage_intervals(family, n, psi_n))
    return union_measure(intervals)


def real_case_tail(x: Fraction, start: int) -> RealTail:
    """Measure of the union of ``[0, x + 1/q]`` over primes q >= start, within [0, 1].

    The intervals are nested, so primes up to twice the first one suffice.

    Raises:
        OutOfRangeException: If x lies outside [0, 1]
        InvalidInputException: If start < 2
    """
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise OutOfRangeException(f"x = {x} is outside [0, 1]")
    if start < 2:
        raise InvalidInputException(f"Q must be >= 2, got {start}")
    first = next_prime_at_least(start)
    intervals = [
        clip(Fraction(0), x + Fraction(1, q)) for q in primes_up_to(2 * first) if q >= first
    ]
    measure = union_measure(intervals)
    logger.debug("Real tail for x=%s from q=%d: %s", x, first, measure)
    return RealTail(measure=measure, limit=x, first_prime=first)
