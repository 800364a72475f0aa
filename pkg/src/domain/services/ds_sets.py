"""Stage sets of the approximation-set families and their finite tail unions.

Every generator reduces its centers to residues modulo p^M once the radius
fixes the depth M, so a stage set costs one modular inverse per center. The
scan stops early once every residue the centers can reach has been seen.
"""

import logging
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from src.domain.entities.ball_set import BallSet
from src.domain.entities.tail_report import StageMeasure, TailReport
from src.domain.exceptions.domain_exceptions import InvalidInputException
from src.domain.interfaces.job_runner import IJobRunner
from src.domain.interfaces.psi_rule import IPsiRule
from src.domain.services.ball_algebra import union, union_all
from src.domain.services.number_theory import divisors, unitary_splits
from src.domain.services.padic_core import depth_for_radius, integer_valuation
from src.domain.value_objects.family_tag import FamilyTag

logger = logging.getLogger(__name__)

Center = Tuple[int, int]
StageJob = Tuple[FamilyTag, int, int, Fraction, bool]


def _check_stage(n: int, psi_n: Fraction) -> None:
    if n < 1:
        raise InvalidInputException(f"Stage index must be >= 1, got {n}")
    if psi_n < 0:
        raise InvalidInputException(f"psi({n}) = {psi_n} is negative")


def _center_valuation(p: int, num: int, den: int) -> float:
    if num == 0:
        return float("inf")
    return integer_valuation(p, num) - integer_valuation(p, den)


def _collect(
    p: int,
    centers: Iterable[Center],
    radius: Fraction,
    strict: bool = False,
    retain_singletons: bool = False,
    saturation: Optional[int] = None,
) -> BallSet:
    """Union of ``B(num/den, radius)`` intersected with Z_p over the centers.

    Args:
        p: Prime
        centers: Pairs (num, den) with den > 0, not necessarily reduced
        radius: Common radius >= 0
        strict: Use open balls
        retain_singletons: Keep centers of radius-0 balls as null points
        saturation: Number of distinct residues after which no new class can appear
    """
    if radius == 0:
        if strict or not retain_singletons:
            return BallSet.empty(p)
        points = frozenset(
            Fraction(num, den) for num, den in centers if _center_valuation(p, num, den) >= 0
        )
        return BallSet(prime=p, points=points)

    depth = depth_for_radius(p, radius, strict)
    assert depth is not None
    if depth <= 0:
        for num, den in centers:
            if _center_valuation(p, num, den) >= depth:
                return BallSet.full(p)
        return BallSet.empty(p)

    modulus = p**depth
    limit = saturation if saturation is not None else modulus
    residues = set()
    for num, den in centers:
        common = gcd(num, den)
        num, den = num // common, den // common
        if den % p == 0:
            continue
        residues.add(num * pow(den, -1, modulus) % modulus)
        if len(residues) >= limit:
            logger.debug("Saturated %d residues mod %d^%d", limit, p, depth)
            break
    return BallSet.from_classes(p, [(r, depth) for r in sorted(residues)])


def _shell_capacity(p: int, k: int, depth: int) -> int:
    """Number of residues mod p^depth of elements of valuation exactly k."""
    if depth <= k:
        return 1
    return (p - 1) * p ** (depth - k - 1)


def _signed_range(bound: int) -> Iterator[int]:
    """0, 1, -1, 2, -2, ... up to +-bound."""
    yield 0
    for a in range(1, bound + 1):
        yield a
        yield -a


def set_A_n(p: int, n: int, psi_n: Fraction, retain_singletons: bool = False) -> BallSet:
    """Balls ``B(a/n, psi(n)/n)`` over |a| <= n, gcd(a, n) = 1, intersected with Z_p."""
    _check_stage(n, psi_n)
    radius = Fraction(psi_n) / n
    if n % p == 0:
        # every reduced a/n has negative valuation
        depth = depth_for_radius(p, radius) if radius else None
        if depth is not None and depth <= -integer_valuation(p, n):
            return BallSet.full(p)
        return BallSet.empty(p)
    centers = ((a, n) for a in _signed_range(n) if gcd(a, n) == 1)
    return _collect(p, centers, radius, retain_singletons=retain_singletons)


def set_C_n(p: int, n: int, psi_n: Fraction, retain_singletons: bool = False) -> BallSet:
    """Balls ``B(n/a, psi(n)/n)`` over |a| < n, gcd(a, pn) = 1; empty for n = 1."""
    _check_stage(n, psi_n)
    radius = Fraction(psi_n) / n
    centers = ((n, a) if a > 0 else (-n, -a) for a in _signed_range(n - 1) if gcd(a, p * n) == 1)
    saturation = None
    if radius:
        depth = depth_for_radius(p, radius)
        assert depth is not None
        if depth > 0:
            saturation = _shell_capacity(p, integer_valuation(p, n), depth)
    return _collect(p, centers, radius, retain_singletons=retain_singletons, saturation=saturation)


def set_B_n(p: int, n: int, psi_n: Fraction, retain_singletons: bool = False) -> BallSet:
    """Union of the A and C stage sets."""
    return union(
        set_A_n(p, n, psi_n, retain_singletons),
        set_C_n(p, n, psi_n, retain_singletons),
    )


def set_fK_n(p: int, n: int, psi_n: Fraction, retain_singletons: bool = False) -> BallSet:
    """Balls at ``+-a/(n/a)`` for every positive divisor a of n."""
    _check_stage(n, psi_n)
    centers: List[Center] = []
    for a in divisors(n):
        centers.extend([(a * a, n), (-a * a, n)])
    return _collect(p, centers, Fraction(psi_n) / n, retain_singletons=retain_singletons)


def _split_centers(n: int) -> List[Center]:
    centers: List[Center] = []
    for top, bottom in unitary_splits(n):
        centers.extend([(top, bottom), (-top, bottom)])
    return centers


def set_fA_n(p: int, n: int, psi_n: Fraction, retain_singletons: bool = False) -> BallSet:
    """Balls at ``+-top/bottom`` over the unitary splits of n."""
    _check_stage(n, psi_n)
    return _collect(
        p, _split_centers(n), Fraction(psi_n) / n, retain_singletons=retain_singletons
    )


def set_fA_strict_n(p: int, n: int, psi_n: Fraction) -> BallSet:
    """Strict-inequality companion of ``set_fA_n``: open balls, radius 0 gives nothing."""
    _check_stage(n, psi_n)
    return _collect(p, _split_centers(n), Fraction(psi_n) / n, strict=True)


def stage_set(
    family: FamilyTag, p: int, n: int, psi_n: Fraction, retain_singletons: bool = False
) -> BallSet:
    """Dispatch to the generator of ``family``."""
    if family is FamilyTag.FRAK_A_STRICT:
        return set_fA_strict_n(p, n, psi_n)
    generator = {
        FamilyTag.A: set_A_n,
        FamilyTag.C: set_C_n,
        FamilyTag.B: set_B_n,
        FamilyTag.FRAK_K: set_fK_n,
        FamilyTag.FRAK_A: set_fA_n,
    }[family]
    return generator(p, n, psi_n, retain_singletons)


def _stage_job(job: StageJob) -> BallSet:
    family, p, n, psi_n, retain = job
    return stage_set(family, p, n, psi_n, retain)


def _assemble(
    family: FamilyTag,
    p: int,
    rows: Sequence[Tuple[int, Fraction]],
    start: int,
    stop: int,
    runner: Optional[IJobRunner],
    retain_singletons: bool,
) -> TailReport:
    jobs = [(family, p, n, psi_n, retain_singletons) for n, psi_n in rows]
    sets = runner.map(_stage_job, jobs) if runner is not None else [_stage_job(j) for j in jobs]
    stages = tuple(
        StageMeasure(n=n, psi=psi_n, measure=s.measure()) for (n, psi_n), s in zip(rows, sets)
    )
    total = union_all(p, sets)
    series = sum((stage.measure for stage in stages), start=Fraction(0))
    logger.debug(
        "%s over %d stages in [%d, %d]: measure %s, series %s",
        family.display_name,
        len(stages),
        start,
        stop,
        total.measure(),
        series,
    )
    return TailReport(
        family=family,
        prime=p,
        start=start,
        stop=stop,
        union=total,
        measure=total.measure(),
        series=series,
        stages=stages,
    )


def tail_union(
    family: FamilyTag,
    p: int,
    psi: IPsiRule,
    start: int,
    stop: int,
    runner: Optional[IJobRunner] = None,
    retain_singletons: bool = False,
) -> TailReport:
    """Union of the family's stage sets over the support of psi in [start, stop].

    Args:
        family: Stage-set family
        p: Prime
        psi: Approximation rule
        start: N >= 1
        stop: T >= N
        runner: Optional job runner for the per-stage work
        retain_singletons: Keep radius-0 centers as null points

    Raises:
        InvalidInputException: If the range is empty
    """
    if not 1 <= start <= stop:
        raise InvalidInputException(f"Invalid range [{start}, {stop}]")
    rows = [(n, psi_n) for n, psi_n in psi.support(stop) if n >= start]
    return _assemble(family, p, rows, start, stop, runner, retain_singletons)


def witness_stage_union(
    family: FamilyTag,
    p: int,
    psi: IPsiRule,
    stages: Iterable[int],
    runner: Optional[IJobRunner] = None,
) -> TailReport:
    """Union of the family's stage sets over an explicit list of n.

    Stages where psi vanishes are skipped.
    """
    indices = sorted(set(stages))
    rows = [(n, psi.value(n)) for n in indices]
    rows = [(n, psi_n) for n, psi_n in rows if psi_n > 0]
    start = indices[0] if indices else 1
    stop = indices[-1] if indices else 1
    return _assemble(family, p, rows, start, stop, runner, False)
