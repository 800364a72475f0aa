"""Use case for running the executable checks."""

import logging
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.application.dtos.check_parameters_dto import CheckParametersDTO
from src.application.dtos.check_report_dto import CheckReportDTO, VerificationSummaryDTO
from src.application.dtos.rule_spec_dto import RuleSpecDTO
from src.application.use_cases.construct_psi_use_case import build_rule
from src.domain.entities.check_report import CheckReport
from src.domain.entities.spectrum_digits import SpectrumDigits
from src.domain.exceptions.domain_exceptions import InvalidInputException
from src.domain.interfaces.job_runner import IJobRunner
from src.domain.services import verification
from src.domain.services.constructions import (
    digits_for_target,
    theorem1_witnesses,
    theorem2_tables,
)
from src.domain.services.number_theory import DEFAULT_PRIME_CAP
from src.domain.value_objects.family_tag import FamilyTag
from src.domain.value_objects.rule_variant import RuleVariant

logger = logging.getLogger(__name__)

SMALL_PRIMES = (2, 3, 5)
MAP_PRIMES = (2, 3, 5, 7)
SPECTRUM_PRIMES = (2, 3, 5, 7, 13)
CASE_TARGETS: Tuple[Tuple[int, Fraction], ...] = (
    (2, Fraction(1, 4)),
    (2, Fraction(3, 8)),
    (3, Fraction(1, 3)),
    (3, Fraction(5, 9)),
    (5, Fraction(2, 5)),
    (7, Fraction(3, 7)),
    (13, Fraction(4, 13)),
)
CASE_DEPTH = 6
REAL_TARGETS = (Fraction(0), Fraction(1, 2), Fraction(1))
REAL_STARTS = (2, 10, 100)
KHINTCHINE_TARGETS = (Fraction(0), Fraction(1, 4), Fraction(1, 2))
DEFAULT_RULE = RuleSpecDTO(variant=RuleVariant.THEOREM1, prime=3, digits="101")

Check = Callable[[CheckParametersDTO], CheckReport]


def _combine(name: str, reports: Sequence[CheckReport]) -> CheckReport:
    """One report for a batch: the first failure, or a pass listing the batch size."""
    for report in reports:
        if not report.passed:
            return report
    return CheckReport.build(name, True, {"runs": len(reports)}, {}, {})


def _to_dto(report: CheckReport) -> CheckReportDTO:
    return CheckReportDTO(
        name=report.name,
        verdict=report.verdict.value,
        parameters=report.parameters,
        quantities=report.quantities,
        witness=report.witness or None,
    )


class VerifyClaimsUseCase:
    """Use case for running one named check, or all of them."""

    def __init__(
        self, runner: Optional[IJobRunner] = None, cap: int = DEFAULT_PRIME_CAP
    ) -> None:
        """Initialize use case.

        Args:
            runner: Runner for stage-union work; serial when None
            cap: Default prime search cap for witness primes
        """
        self._runner = runner
        self._cap = cap
        self._checks: Dict[str, Check] = {
            "arithmetic-identities": self._arithmetic,
            "borel-cantelli": self._borel_cantelli,
            "case-identities": self._case_identities,
            "family-inclusion": self._family_inclusion,
            "generator": self._generator,
            "iota-pushforward": self._iota,
            "khintchine-split": self._khintchine,
            "lemma-haynes": self._lemma_haynes,
            "moebius-count": self._moebius,
            "real-tail": self._real_tail,
            "strict-bridge": self._strict_bridge,
            "tau-image": self._tau_image,
            "tau2-scaling": self._tau2_scaling,
            "theorem1": self._theorem1,
            "theorem2": self._theorem2,
            "unit-inversion": self._unit_inversion,
            "zero-full": self._zero_full,
        }

    @property
    def check_names(self) -> List[str]:
        """Every check name, sorted."""
        return sorted(self._checks)

    def execute(
        self, check: str, parameters: Optional[CheckParametersDTO] = None
    ) -> VerificationSummaryDTO:
        """Run one check, or every check when ``check`` is ``all``.

        Args:
            check: Check name or ``all``
            parameters: Optional per-check flags

        Returns:
            Summary with one entry per check, sorted by name

        Raises:
            InvalidInputException: If the check name is unknown
            PreconditionFailedException: If a check's premise does not hold
        """
        parameters = parameters or CheckParametersDTO()
        if check == "all":
            return self.run_all(parameters)
        if check not in self._checks:
            raise InvalidInputException(
                f"Unknown check '{check}'; choose from {', '.join(self.check_names)} or all"
            )
        logger.info("Running check %s", check)
        return VerificationSummaryDTO(checks=(_to_dto(self._checks[check](parameters)),))

    def run_all(self, parameters: CheckParametersDTO) -> VerificationSummaryDTO:
        """Run every check with its suite defaults, in name order."""
        reports = []
        for name in self.check_names:
            logger.info("Running check %s", name)
            reports.append(_to_dto(self._checks[name](parameters)))
        return VerificationSummaryDTO(checks=tuple(reports))

    def _rule(self, parameters: CheckParametersDTO) -> RuleSpecDTO:
        return parameters.rule or DEFAULT_RULE

    def _rule_prime(self, parameters: CheckParametersDTO) -> int:
        spec = self._rule(parameters)
        p = parameters.p or spec.prime
        if p is None:
            raise InvalidInputException("This check needs --p")
        return p

    def _lemma_haynes(self, parameters: CheckParametersDTO) -> CheckReport:
        if parameters.n is not None:
            if parameters.p is None or parameters.psi is None:
                raise InvalidInputException("A single lemma check needs --p, --n and --psi")
            return verification.lemma_haynes_check(parameters.p, parameters.n, parameters.psi)
        primes = parameters.primes(SMALL_PRIMES)
        return verification.lemma_haynes_suite(primes, parameters.max_n or 200)

    def _moebius(self, parameters: CheckParametersDTO) -> CheckReport:
        return verification.moebius_count_check(
            parameters.primes(SMALL_PRIMES), parameters.max_n or 500, parameters.max_span or 3
        )

    def _iota(self, parameters: CheckParametersDTO) -> CheckReport:
        samples = parameters.samples or 100
        return _combine(
            "iota-pushforward",
            [
                verification.iota_pushforward_check(
                    p, verification.random_class_balls(p, samples, parameters.seed)
                )
                for p in parameters.primes(MAP_PRIMES)
            ],
        )

    def _unit_inversion(self, parameters: CheckParametersDTO) -> CheckReport:
        depth = parameters.max_depth or 5
        return _combine(
            "unit-inversion",
            [verification.unit_inversion_check(p, depth) for p in parameters.primes(MAP_PRIMES)],
        )

    def _tau_image(self, parameters: CheckParametersDTO) -> CheckReport:
        depth = parameters.max_depth or 4
        return _combine(
            "tau-image",
            [verification.tau_ball_image_check(p, depth) for p in parameters.primes(MAP_PRIMES)],
        )

    def _tau2_scaling(self, parameters: CheckParametersDTO) -> CheckReport:
        k = parameters.k if parameters.k is not None else 1
        samples = parameters.samples or 50
        return _combine(
            "tau2-scaling",
            [
                verification.tau2_scaling_check(p, k, samples, parameters.seed)
                for p in parameters.primes(MAP_PRIMES)
            ],
        )

    def _targets(self, parameters: CheckParametersDTO) -> Sequence[Tuple[int, Fraction]]:
        if parameters.p is not None and parameters.x is not None:
            return [(parameters.p, parameters.x)]
        return CASE_TARGETS

    def _case_identities(self, parameters: CheckParametersDTO) -> CheckReport:
        depth = parameters.depth or CASE_DEPTH
        reports = []
        for p, x in self._targets(parameters):
            tables = theorem2_tables(p, digits_for_target(p, x, depth), depth)
            reports.append(verification.case_identity_checks(tables))
        return _combine("case-identities", reports)

    def _theorem1(self, parameters: CheckParametersDTO) -> CheckReport:
        digits = parameters.digits or "101"
        return _combine(
            "theorem1",
            [
                verification.theorem1_acceptance_check(p, SpectrumDigits.parse(p, digits))
                for p in parameters.primes(SPECTRUM_PRIMES)
            ],
        )

    def _theorem2(self, parameters: CheckParametersDTO) -> CheckReport:
        depth = parameters.depth or CASE_DEPTH
        cap = parameters.cap or self._cap
        return _combine(
            "theorem2",
            [
                verification.theorem2_acceptance_check(p, x, depth, cap, self._runner)
                for p, x in self._targets(parameters)
            ],
        )

    def _real_tail(self, parameters: CheckParametersDTO) -> CheckReport:
        targets = (parameters.x,) if parameters.x is not None else REAL_TARGETS
        starts = (parameters.q,) if parameters.q is not None else REAL_STARTS
        return _combine("real-tail", [verification.real_tail_check(x, starts) for x in targets])

    def _khintchine(self, parameters: CheckParametersDTO) -> CheckReport:
        targets = (parameters.x,) if parameters.x is not None else KHINTCHINE_TARGETS
        start = parameters.q or 10
        return _combine(
            "khintchine-split", [verification.khintchine_split_check(x, start) for x in targets]
        )

    def _arithmetic(self, parameters: CheckParametersDTO) -> CheckReport:
        return verification.arithmetic_identity_check(parameters.max_n or 10_000)

    def _strict_bridge(self, parameters: CheckParametersDTO) -> CheckReport:
        return verification.strict_bridge_check(
            self._rule_prime(parameters),
            build_rule(self._rule(parameters)),
            parameters.start,
            parameters.stop or 200,
        )

    def _family_inclusion(self, parameters: CheckParametersDTO) -> CheckReport:
        return verification.family_inclusion_check(
            self._rule_prime(parameters),
            build_rule(self._rule(parameters)),
            parameters.start,
            parameters.stop or 100,
        )

    def _borel_cantelli(self, parameters: CheckParametersDTO) -> CheckReport:
        return verification.borel_cantelli_check(
            FamilyTag.C,
            self._rule_prime(parameters),
            build_rule(self._rule(parameters)),
            parameters.start,
            parameters.stop or 200,
        )

    def _zero_full(self, parameters: CheckParametersDTO) -> CheckReport:
        k_max = parameters.k_max if parameters.k_max is not None else 4
        p = self._rule_prime(parameters)
        spec = self._rule(parameters)
        rule = build_rule(spec)
        if parameters.stop is not None or spec.variant is not RuleVariant.THEOREM1:
            _, report = verification.zero_full_diagnostic(
                p, rule, k_max, stop=parameters.stop or 200, runner=self._runner
            )
            return report
        stages = theorem1_witnesses(p, SpectrumDigits.parse(p, spec.digits or "1"))
        _, report = verification.zero_full_diagnostic(
            p, rule, k_max, stages=stages, runner=self._runner
        )
        return report

    def _generator(self, parameters: CheckParametersDTO) -> CheckReport:
        return _combine(
            "generator",
            [verification.generator_check(p) for p in parameters.primes(SPECTRUM_PRIMES)],
        )

