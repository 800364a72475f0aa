"""Data Transfer Objects for application layer."""

from .check_parameters_dto import CheckParametersDTO
from .check_report_dto import CheckReportDTO, VerificationSummaryDTO
from .measure_report_dto import MeasureReportDTO, ShellRowDTO
from .psi_row_dto import PsiRowDTO
from .rule_spec_dto import RuleSpecDTO
from .spectrum_dto import SpectrumDTO

__all__ = [
    "CheckParametersDTO",
    "CheckReportDTO",
    "MeasureReportDTO",
    "PsiRowDTO",
    "RuleSpecDTO",
    "ShellRowDTO",
    "SpectrumDTO",
    "VerificationSummaryDTO",
]
