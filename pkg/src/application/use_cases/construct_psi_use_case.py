"""Use case for building approximation functions and tabulating their support."""

import logging
from typing import List

from src.application.dtos.psi_row_dto import PsiRowDTO
from src.application.dtos.rule_spec_dto import RuleSpecDTO
from src.domain.entities.psi_rules import TableRule, ZeroRule
from src.domain.entities.spectrum_digits import SpectrumDigits
from src.domain.exceptions.domain_exceptions import InvalidInputException
from src.domain.interfaces.psi_rule import IPsiRule
from src.domain.services.constructions import (
    prime_square_psi,
    psi_prime_transform,
    real_prime_psi,
    theorem1_psi,
    theorem2_psi,
    theorem2_rule_for,
    theorem2_tables,
)
from src.domain.value_objects.rule_variant import RuleVariant

logger = logging.getLogger(__name__)


def _require_prime(spec: RuleSpecDTO) -> int:
    if spec.prime is None:
        raise InvalidInputException(f"Rule '{spec.variant.value}' needs a prime")
    return spec.prime


def _digits(spec: RuleSpecDTO, p: int) -> SpectrumDigits:
    if spec.digits is None:
        raise InvalidInputException(f"Rule '{spec.variant.value}' needs digits")
    try:
        return SpectrumDigits.parse(p, spec.digits)
    except ValueError as e:
        raise InvalidInputException(str(e)) from e


def build_rule(spec: RuleSpecDTO) -> IPsiRule:
    """Turn a rule request into a psi rule.

    Args:
        spec: Rule request

    Returns:
        The rule

    Raises:
        InvalidInputException: If a parameter the rule needs is missing
        InvalidDigitsException: If theorem1 digits are not binary
        OutOfRangeException: If x lies outside [0, 1]
    """
    variant = spec.variant
    if variant is RuleVariant.ZERO:
        return ZeroRule()
    if variant is RuleVariant.TABLE:
        return TableRule(entries=spec.table)
    if variant is RuleVariant.THEOREM1:
        p = _require_prime(spec)
        return theorem1_psi(p, _digits(spec, p), spec.full_support)
    if variant is RuleVariant.THEOREM2:
        p = _require_prime(spec)
        if spec.x is not None:
            return theorem2_rule_for(p, spec.x, spec.depth)
        return theorem2_psi(theorem2_tables(p, _digits(spec, p), spec.depth))
    if variant in (RuleVariant.REAL_PRIME, RuleVariant.PRIME_SQUARE):
        if spec.x is None:
            raise InvalidInputException(f"Rule '{variant.value}' needs x")
        if variant is RuleVariant.REAL_PRIME:
            return real_prime_psi(spec.x)
        return prime_square_psi(spec.x)
    if spec.base is None:
        raise InvalidInputException("A primed rule needs a base rule")
    return psi_prime_transform(build_rule(spec.base), _require_prime(spec))


class ConstructPsiUseCase:
    """Use case for tabulating psi on its support."""

    def execute(self, spec: RuleSpecDTO, cap: int) -> List[PsiRowDTO]:
        """Build the rule and list ``(n, psi(n))`` for n <= cap.

        Args:
            spec: Rule request
            cap: Largest n to tabulate

        Returns:
            Rows in increasing n

        Raises:
            InvalidInputException: If the rule cannot be built or cap < 1
        """
        if cap < 1:
            raise InvalidInputException(f"cap must be >= 1, got {cap}")
        rule = build_rule(spec)
        rows = [PsiRowDTO(n=n, psi=psi_n, part=rule.label(n)) for n, psi_n in rule.support(cap)]
        logger.info("%s: %d support rows up to %d", spec.display_name, len(rows), cap)
        return rows
