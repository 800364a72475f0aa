"""Use case for measuring finite tail unions of a stage-set family."""

import logging
import math
from fractions import Fraction
from typing import List, Optional

from src.application.dtos.measure_report_dto import MeasureReportDTO, ShellRowDTO
from src.application.dtos.rule_spec_dto import RuleSpecDTO
from src.application.use_cases.construct_psi_use_case import build_rule
from src.domain.entities.psi_rules import Theorem1Rule, Theorem2Rule
from src.domain.entities.tail_report import TailReport
from src.domain.exceptions.domain_exceptions import InvalidInputException
from src.domain.interfaces.job_runner import IJobRunner
from src.domain.interfaces.psi_rule import IPsiRule
from src.domain.services.constructions import (
    Level,
    critical_level,
    theorem1_witnesses,
    theorem2_witnesses,
    witness_cap,
)
from src.domain.services.ds_sets import tail_union, witness_stage_union
from src.domain.services.number_theory import DEFAULT_PRIME_CAP
from src.domain.services.real_line import real_stage_intervals, union_measure
from src.domain.services.verification import classify_shells, shell_report
from src.domain.value_objects.family_tag import FamilyTag

logger = logging.getLogger(__name__)

REAL_FAMILIES = (FamilyTag.FRAK_A, FamilyTag.FRAK_K)


class MeasureFamilyUseCase:
    """Use case for exact measures of stage-set unions."""

    def __init__(self, runner: Optional[IJobRunner] = None) -> None:
        """Initialize use case with an optional job runner.

        Args:
            runner: Runner for the per-stage work; serial when None
        """
        self._runner = runner

    def execute(
        self,
        family: FamilyTag,
        p: Optional[int],
        spec: RuleSpecDTO,
        start: int,
        stop: int,
        shells: Optional[int] = None,
    ) -> MeasureReportDTO:
        """Measure the union of the family's stage sets for n in [start, stop].

        Args:
            family: Stage-set family
            p: Prime, or None for the real unit interval
            spec: Rule request
            start: First n
            stop: Last n
            shells: Largest shell index to tabulate, if any

        Returns:
            Measure report

        Raises:
            InvalidInputException: If the range is empty or the family has no real version
        """
        rule = build_rule(spec)
        if p is None:
            return self._real(family, rule, start, stop)
        report = tail_union(family, p, rule, start, stop, self._runner)
        return self._to_dto(report, rule, shells)

    def execute_witnesses(
        self,
        family: FamilyTag,
        p: int,
        spec: RuleSpecDTO,
        shells: Optional[int] = None,
        cap: int = DEFAULT_PRIME_CAP,
        count: int = 10,
    ) -> MeasureReportDTO:
        """Measure the union over the witness stages of a construction.

        Args:
            family: Stage-set family
            p: Prime
            spec: A theorem1 or theorem2 rule request
            shells: Largest shell index to tabulate, if any
            cap: Prime search cap for Dirichlet witnesses
            count: Witness primes per shell for the shell rule

        Raises:
            InvalidInputException: If the rule has no witness stages
            SearchCapExceededException: If a witness prime lies beyond the cap
        """
        rule = build_rule(spec)
        if isinstance(rule, Theorem1Rule):
            stages = theorem1_witnesses(p, rule.digits, count)
        elif isinstance(rule, Theorem2Rule):
            tables = rule.tables
            stages = [w.n for w in theorem2_witnesses(tables, witness_cap(tables, cap))]
        else:
            raise InvalidInputException(f"Rule '{spec.variant.value}' has no witness stages")
        logger.info("Measuring %s over %d witness stages", family.display_name, len(stages))
        report = witness_stage_union(family, p, rule, stages, self._runner)
        return self._to_dto(report, rule, shells)

    def _to_dto(
        self, report: TailReport, rule: IPsiRule, shells: Optional[int]
    ) -> MeasureReportDTO:
        rows: List[ShellRowDTO] = []
        residual = None
        if shells is not None:
            rows = [
                ShellRowDTO(r.k, r.measure, r.status)
                for r in classify_shells(report.union, shells)
            ]
            residual = shell_report(report.union, shells).residual
        return MeasureReportDTO(
            family=report.family.value,
            prime=report.prime,
            start=report.start,
            stop=report.stop,
            measure=report.measure,
            series=report.series,
            stage_count=report.stage_count,
            classes=tuple(report.union.classes()),
            shells=tuple(rows),
            residual=residual,
            stages=tuple((s.n, s.psi, s.measure) for s in report.stages),
            critical_level=_level_token(critical_level(rule, report.prime)),
        )

    def _real(
        self, family: FamilyTag, rule: IPsiRule, start: int, stop: int
    ) -> MeasureReportDTO:
        if family not in REAL_FAMILIES:
            raise InvalidInputException(f"{family.display_name} has no real-line version")
        if not 1 <= start <= stop:
            raise InvalidInputException(f"Invalid range [{start}, {stop}]")
        intervals = []
        stages = []
        for n, psi_n in rule.support(stop):
            if n < start:
                continue
            stage = real_stage_intervals(family, n, psi_n)
            intervals.extend(stage)
            stages.append((n, psi_n, union_measure(stage)))
        return MeasureReportDTO(
            family=family.value,
            prime=None,
            start=start,
            stop=stop,
            measure=union_measure(intervals),
            series=sum((m for _, _, m in stages), start=Fraction(0)),
            stage_count=len(stages),
            stages=tuple(stages),
        )


def _level_token(level: Level) -> str:
    if level is None:
        return "unknown"
    return "inf" if level == math.inf else str(level)
