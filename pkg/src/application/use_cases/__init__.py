"""Application use cases."""

from .construct_psi_use_case import ConstructPsiUseCase, build_rule
from .measure_family_use_case import MeasureFamilyUseCase
from .spectrum_membership_use_case import SpectrumMembershipUseCase
from .verify_claims_use_case import VerifyClaimsUseCase

__all__ = [
    "ConstructPsiUseCase",
    "MeasureFamilyUseCase",
    "SpectrumMembershipUseCase",
    "VerifyClaimsUseCase",
    "build_rule",
]
