"""Domain interfaces (Protocols)."""

from .job_runner import IJobRunner
from .psi_rule import IPsiRule
from .report_writer import IReportWriter

__all__ = ["IJobRunner", "IPsiRule", "IReportWriter"]
