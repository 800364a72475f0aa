"""Builders for the approximation functions realising prescribed measures.

Covers the shell rule behind the C and B spectra, the residue-class schedule
of the multiplicative-set construction for every prime, the real prime rule,
and the psi -> psi' transform between the strict and non-strict families.
"""

import logging
import math
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Set, Tuple, Union

from src.domain.entities.case_tables import Case2Tables, StageSchedule
from src.domain.entities.psi_rules import (
    I_CLASS,
    PrimedRule,
    PrimeSquareRule,
    RealPrimeRule,
    Theorem1Rule,
    Theorem2Rule,
    ZeroRule,
)
from src.domain.entities.spectrum_digits import SpectrumDigits
from src.domain.entities.tail_report import TailReport
from src.domain.exceptions.domain_exceptions import (
    InvalidInputException,
    OutOfRangeException,
)
from src.domain.interfaces.job_runner import IJobRunner
from src.domain.interfaces.psi_rule import IPsiRule
from src.domain.services.ds_sets import witness_stage_union
from src.domain.services.number_theory import (
    DEFAULT_PRIME_CAP,
    admissible_primes,
    construction_generator,
    dirichlet_prime,
    is_prime,
)
from src.domain.value_objects.case_id import CaseId
from src.domain.value_objects.family_tag import FamilyTag

logger = logging.getLogger(__name__)

DEFAULT_DEPTH = 8

# Progression terms a witness search may scan beyond its modulus.
WITNESS_SPAN = 1000

Level = Optional[Union[int, float]]


class SpectrumMembership(NamedTuple):
    """Result of the digit test for a target measure.

    ``preperiod`` and ``period`` spell the base-p expansion of x/(p-1); the
    expansion is finite when ``period`` is empty.
    """

    member: bool
    preperiod: Tuple[int, ...]
    period: Tuple[int, ...]
    leading_digit: int


class Witness(NamedTuple):
    """A stage n = p^k q chosen to realise one residue class."""

    n: int
    k: int
    q: int
    part: str


# --- shell rule and spectra ---------------------------------------------------


def theorem1_psi(
    p: int, digits: SpectrumDigits, full_support: bool = False
) -> Theorem1Rule:
    """Shell rule with ``psi(n) = x_{v(n)} n / p^{v(n)+1}``.

    Raises:
        InvalidDigitsException: If a digit is not 0 or 1
    """
    return Theorem1Rule(prime=p, digits=digits, full_support=full_support)


def theorem1_witnesses(p: int, digits: SpectrumDigits, count: int = 10) -> List[int]:
    """Stages p^k q for every k with x_k = 1 and the first ``count`` primes q > p."""
    primes = admissible_primes(p, count)
    return sorted(p**k * q for k, x_k in enumerate(digits.digits) if x_k for q in primes)


def spectrum_value(digits: SpectrumDigits, family: FamilyTag) -> Fraction:
    """Measure realised by binary digits in the C or B family.

    Raises:
        InvalidInputException: If the family is neither C nor B
    """
    p = digits.prime
    if family not in (FamilyTag.C, FamilyTag.B):
        raise InvalidInputException(f"No spectrum formula for {family.display_name}")
    if family is FamilyTag.B and digits.digit(0) == 1:
        return Fraction(1)
    return sum(
        (Fraction(x_k * (p - 1), p ** (k + 1)) for k, x_k in enumerate(digits.digits)),
        start=Fraction(0),
    )


def periodic_expansion(p: int, y: Fraction) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Canonical base-p expansion of y in [0, 1] as (preperiod, period).

    y = 1 is written with repeating (p - 1)s.
    """
    if y == 1:
        return (), (p - 1,)
    seen: Dict[Fraction, int] = {}
    digits: List[int] = []
    while y and y not in seen:
        seen[y] = len(digits)
        y *= p
        digit = y.numerator // y.denominator
        digits.append(digit)
        y -= digit
    if not y:
        return tuple(digits), ()
    start = seen[y]
    return tuple(digits[:start]), tuple(digits[start:])


def spectrum_membership(p: int, x: Fraction, family: FamilyTag) -> SpectrumMembership:
    """Decide whether x is a measure the C or B family can take.

    Raises:
        OutOfRangeException: If x lies outside [0, 1]
        InvalidInputException: If the family is neither C nor B
    """
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise OutOfRangeException(f"{x} is outside [0, 1]")
    if family not in (FamilyTag.C, FamilyTag.B):
        raise InvalidInputException(f"No spectrum for {family.display_name}")
    preperiod, period = periodic_expansion(p, x / (p - 1))
    if p == 2 and family is FamilyTag.B and x == Fraction(1, 2):
        # 0.1 = 0.0111... in base 2; only the second form has x_0 = 0
        preperiod, period = (0,), (1,)
    binary = all(d in (0, 1) for d in preperiod + period)
    leading = (preperiod + period + (0,))[0]
    member = binary if family is FamilyTag.C else x == 1 or (binary and leading == 0)
    return SpectrumMembership(member, preperiod, period, leading)


# --- multiplicative-set construction -----------------------------------------


def _residue_sets(case: CaseId, p: int, g: int, a: int) -> Tuple[int, ...]:
    if a == p - 1:
        return tuple(range(1, p))
    if case is CaseId.TWO:
        return ()
    if case is CaseId.ONE_MOD_FOUR:
        if a < 4:
            return ()
        residues = {1, pow(g, (p - 1) // 4, p)}
        residues.update(pow(g, i, p) for i in range(2, a // 4 + 1))
    else:
        if a < 2:
            return ()
        residues = {1}
        residues.update(pow(g, i, p) for i in range(2, (a + 2) // 4 + 1))
    return tuple(sorted(residues))


def _remainder(case: CaseId, digits: SpectrumDigits, k: int, K: int) -> Fraction:
    p = digits.prime
    x_k = digits.digit(k)
    tail = digits.tail(k)
    if case is CaseId.THREE_OR_FIVE:
        r = Fraction(x_k % 2)
        if k == K:
            r += tail - Fraction(digits.digit(k + 1), p)
        return r
    if x_k == p - 1:
        return Fraction(0)
    if case is CaseId.THREE_MOD_FOUR:
        if x_k < 2:
            return x_k + tail
        return x_k + tail - 4 * ((x_k - 2) // 4) - 2
    return x_k - 4 * (x_k // 4) + tail


def _schedule_digits(p: int, value: Fraction, depth: int) -> Tuple[int, ...]:
    if not 0 <= value < 1:
        raise InvalidInputException(f"Schedule value {value} is outside [0, 1)")
    digits = []
    for _ in range(depth):
        value *= p
        digit = value.numerator // value.denominator
        digits.append(digit)
        value -= digit
    return tuple(digits)


def theorem2_tables(p: int, digits: SpectrumDigits, depth: int = DEFAULT_DEPTH) -> Case2Tables:
    """Residue sets, remainders and digit schedules for target digits x.

    Digit lists carry implicit zeros, so K always exists.

    Raises:
        InvalidInputException: If p is not prime, the digit base differs or depth < 1
    """
    if not is_prime(p):
        raise InvalidInputException(f"{p} is not prime")
    if digits.prime != p:
        raise InvalidInputException("Digit base differs from the prime")
    if depth < 1:
        raise InvalidInputException(f"Schedule depth must be >= 1, got {depth}")
    case = CaseId.for_prime(p)
    g = construction_generator(p)
    K = 0
    while digits.digit(K) == p - 1:
        K += 1
    last = K + 1 if case is CaseId.THREE_OR_FIVE else K
    divisor = 2 if case is CaseId.TWO else 4
    stages = []
    for k in range(last + 1):
        x_k = digits.digit(k)
        r = _remainder(case, digits, k, K)
        stages.append(
            StageSchedule(
                k=k,
                x_k=x_k,
                residues=_residue_sets(case, p, g, x_k),
                r=r,
                b=_schedule_digits(p, r / divisor, depth),
            )
        )
    logger.debug("Case %d tables for p=%d, x=%s: K=%d, g=%d", case, p, digits, K, g)
    return Case2Tables(
        case_id=case,
        prime=p,
        generator=g,
        K=K,
        digits=digits,
        depth=depth,
        stages=tuple(stages),
    )


def theorem2_psi(tables: Case2Tables) -> Theorem2Rule:
    """Rule ``psi(p^k q) = f_k(q)`` driven by the tables."""
    return Theorem2Rule(tables=tables)


def digits_for_target(p: int, x: Fraction, depth: int) -> SpectrumDigits:
    """Enough canonical digits of x < 1 to build depth-``depth`` schedules.

    Keeps ``K + depth + 2`` digits, K being the length of the leading run of
    (p - 1)s, so the stage-K remainder sees the tail the schedule can resolve.

    Raises:
        OutOfRangeException: If x lies outside [0, 1]
        RepresentsOneException: If x = 1
    """
    length = depth + 2
    while True:
        digits = SpectrumDigits.from_value(p, x, length)
        K = next((k for k, d in enumerate(digits.digits) if d != p - 1), length)
        if K + depth + 2 <= length:
            return digits
        length = K + depth + 2


def theorem2_rule_for(p: int, x: Fraction, depth: int = DEFAULT_DEPTH) -> IPsiRule:
    """Rule realising x in the multiplicative family; x = 1 uses psi(q) = q on primes."""
    x = Fraction(x)
    if x == 1:
        return RealPrimeRule(x=Fraction(1))
    return theorem2_psi(theorem2_tables(p, digits_for_target(p, x, depth), depth))


def witness_cap(tables: Case2Tables, cap: int = DEFAULT_PRIME_CAP) -> int:
    """Search cap large enough for the deepest schedule class."""
    needed = tables.prime ** (tables.depth + 1) * WITNESS_SPAN
    if needed > cap:
        logger.debug("Raising witness search cap from %d to %d", cap, needed)
    return max(cap, needed)


def theorem2_witnesses(tables: Case2Tables, cap: int = DEFAULT_PRIME_CAP) -> List[Witness]:
    """One Dirichlet prime per residue class the schedule switches on.

    Raises:
        SearchCapExceededException: If some class has no prime below the cap
    """
    p, g = tables.prime, tables.generator
    witnesses: List[Witness] = []
    for stage in tables.stages:
        step = p**stage.k
        for m in stage.residues:
            q = dirichlet_prime(m, p, 1, cap)
            witnesses.append(Witness(step * q, stage.k, q, I_CLASS))
        for i in range(1, tables.depth + 1):
            modulus = p ** (i + 1)
            for b_prime in range(1, stage.b_at(i) + 1):
                q = dirichlet_prime((g + b_prime * p**i) % modulus, modulus, 1, cap)
                witnesses.append(Witness(step * q, stage.k, q, f"({i},{b_prime})-class"))
    logger.debug("%d witness stages for p=%d", len(witnesses), p)
    return witnesses


def theorem2_stage_union(
    tables: Case2Tables,
    family: FamilyTag = FamilyTag.FRAK_A,
    cap: int = DEFAULT_PRIME_CAP,
    runner: Optional[IJobRunner] = None,
) -> TailReport:
    """Stage union of ``family`` over the witness stages of the tables."""
    witnesses = theorem2_witnesses(tables, witness_cap(tables, cap))
    return witness_stage_union(
        family, tables.prime, theorem2_psi(tables), [w.n for w in witnesses], runner
    )


def _orbit(modulus: int, residue: int) -> Set[int]:
    inverse = pow(residue, -1, modulus)
    return {residue % modulus, -residue % modulus, inverse, -inverse % modulus}


def truncated_target(tables: Case2Tables) -> Fraction:
    """Measure the construction predicts once schedules stop at the table depth.

    Counts each stage as ``p^-k`` times the I-class orbit mass plus
    ``orbit_factor * b_{k,i} / p^{i+1}`` per schedule digit.
    """
    p = tables.prime
    total = Fraction(0)
    for stage in tables.stages:
        orbits: Set[int] = set()
        for m in stage.residues:
            orbits |= _orbit(p, m)
        mass = Fraction(len(orbits), p)
        mass += sum(
            (Fraction(tables.orbit_factor * d, p ** (i + 1)) for i, d in enumerate(stage.b, 1)),
            start=Fraction(0),
        )
        total += mass / p**stage.k
    return total


def truncation_tolerance(tables: Case2Tables) -> Fraction:
    """Upper bound on ``x - truncated_target(tables)`` for digits from ``digits_for_target``.

    Stages K and K + 1 each lose under ``orbit_factor * p^(-k-depth-1)`` to the
    cut schedule, and the dropped digits weigh under ``p^(-K-depth-2)``.
    """
    return Fraction(2 * tables.orbit_factor, tables.prime ** (tables.K + tables.depth + 1))


# --- real line and the strict family -----------------------------------------


def real_prime_psi(x: Fraction) -> RealPrimeRule:
    """Rule ``psi(q) = q x`` on primes.

    Raises:
        OutOfRangeException: If x lies outside [0, 1]
    """
    return RealPrimeRule(x=Fraction(x))


def prime_square_psi(x: Fraction) -> PrimeSquareRule:
    """Rule ``psi(q^2) = q^2 x`` on prime squares.

    Raises:
        OutOfRangeException: If x lies outside [0, 1]
    """
    return PrimeSquareRule(x=Fraction(x))


def psi_prime_transform(psi: IPsiRule, p: int) -> PrimedRule:
    """Companion psi' with ``psi'(n) = p psi(n)`` exactly when ``psi(n) = n / p^k``."""
    return PrimedRule(base=psi, prime=p)


def critical_level(psi: IPsiRule, p: int) -> Level:
    """Least k with ``psi(n)/n >= p^-k`` for infinitely many n divisible by p^k.

    Returns:
        The level, ``math.inf`` when no k qualifies, or None when it cannot be
        decided from the rule
    """
    if isinstance(psi, (ZeroRule, Theorem1Rule, Theorem2Rule)):
        # every supported n has psi(n)/n <= p^{-v(n)-1}
        return math.inf
    if isinstance(psi, (RealPrimeRule, PrimeSquareRule)):
        return 0 if psi.x == 1 else math.inf
    return None
