"""Environment settings and the validated configuration of one command."""

import logging
import os
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Mapping, Optional, Tuple

from src.application.dtos.check_parameters_dto import CheckParametersDTO
from src.application.dtos.rule_spec_dto import RuleSpecDTO
from src.domain.exceptions.domain_exceptions import ConfigurationException
from src.domain.services.number_theory import DEFAULT_PRIME_CAP, is_prime
from src.domain.value_objects.family_tag import FamilyTag

logger = logging.getLogger(__name__)

CAP_VARIABLE = "PADIC_DS_CAP"
DEPTH_VARIABLE = "PADIC_DS_DEPTH"
DEFAULT_SCHEDULE_DEPTH = 8
DEFAULT_TABLE_LIMIT = 100
DEFAULT_RANGE = (1, 100)
REAL_LINE = "inf"
DEFAULT_MEASURE_PRIME = 2

_RATIONAL = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


class OutputFormat(Enum):
    """Rendering of reports on stdout."""

    JSON = "json"
    CSV = "csv"
    TABLE = "table"


def parse_rational(text: str, name: str = "value") -> Fraction:
    """Read an exact ``num/den`` or integer literal.

    Raises:
        ConfigurationException: If the text is not such a literal or den = 0
    """
    match = _RATIONAL.match(text)
    if match is None:
        raise ConfigurationException(f"{name} must be an exact rational num/den, got '{text}'")
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ConfigurationException(f"{name} has a zero denominator: '{text}'")
    return Fraction(int(numerator), int(denominator or 1))


def _env_int(environ: Mapping[str, str], name: str, default: int) -> int:
    raw = environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw.replace("_", ""))
    except ValueError as e:
        raise ConfigurationException(f"{name} must be an integer, got '{raw}'") from e


@dataclass(frozen=True)
class Settings:
    """Defaults read once from the environment."""

    cap: int = DEFAULT_PRIME_CAP
    depth: int = DEFAULT_SCHEDULE_DEPTH

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        """Create settings from ``PADIC_DS_CAP`` and ``PADIC_DS_DEPTH``.

        Raises:
            ConfigurationException: If a variable is not an integer
        """
        environ = os.environ if environ is None else environ
        return cls(
            cap=_env_int(environ, CAP_VARIABLE, DEFAULT_PRIME_CAP),
            depth=_env_int(environ, DEPTH_VARIABLE, DEFAULT_SCHEDULE_DEPTH),
        )


@dataclass(frozen=True)
class Config:
    """Everything one subcommand needs, validated before any computation."""

    command: str
    prime: Optional[int] = None
    family: Optional[FamilyTag] = None
    rule: Optional[RuleSpecDTO] = None
    start: int = DEFAULT_RANGE[0]
    stop: int = DEFAULT_RANGE[1]
    depth: int = DEFAULT_SCHEDULE_DEPTH
    cap: int = DEFAULT_PRIME_CAP
    table_limit: int = DEFAULT_TABLE_LIMIT
    output_format: OutputFormat = OutputFormat.JSON
    parallel: int = 1
    approx: bool = False
    witnesses: bool = False
    shells: Optional[int] = None
    x: Optional[Fraction] = None
    check: str = "all"
    check_parameters: CheckParametersDTO = field(default_factory=CheckParametersDTO)

    def __post_init__(self) -> None:
        """Validate configuration after initialization."""
        if self.prime is not None and (self.prime < 2 or not is_prime(self.prime)):
            raise ConfigurationException(f"--p must be a prime or '{REAL_LINE}', got {self.prime}")
        if not 1 <= self.start <= self.stop:
            raise ConfigurationException(f"--range needs 1 <= N <= T, got {self.start}:{self.stop}")
        if self.depth < 1:
            raise ConfigurationException(f"--depth must be >= 1, got {self.depth}")
        if self.cap < 2 or self.table_limit < 1:
            raise ConfigurationException("--cap must be >= 2")
        if self.parallel < 1:
            raise ConfigurationException(f"--parallel must be >= 1, got {self.parallel}")
        if self.shells is not None and self.shells < 0:
            raise ConfigurationException(f"--shells must be >= 0, got {self.shells}")
        if self.command in ("measure", "spectrum") and self.family is None:
            raise ConfigurationException(f"'{self.command}' needs --family")
        if self.command == "spectrum" and (self.prime is None or self.x is None):
            raise ConfigurationException("'spectrum' needs --p and --x")
        if self.command in ("construct", "measure") and self.rule is None:
            raise ConfigurationException(f"'{self.command}' needs --rule")
        if self.command == "measure" and self.prime is None and self.witnesses:
            raise ConfigurationException("--witnesses needs a finite prime")


def parse_prime(text: Optional[str]) -> Optional[int]:
    """Prime from ``--p``; None when absent or ``inf``."""
    if text is None or text.strip().lower() == REAL_LINE:
        return None
    try:
        return int(text)
    except ValueError as e:
        raise ConfigurationException(f"--p must be a prime or '{REAL_LINE}', got '{text}'") from e


def parse_range(text: Optional[str]) -> Tuple[int, int]:
    """``N:T``, or ``T`` alone for 1:T."""
    if not text:
        return DEFAULT_RANGE
    start, sep, stop = text.partition(":")
    try:
        return (int(start), int(stop)) if sep else (1, int(start))
    except ValueError as e:
        raise ConfigurationException(f"--range must look like N:T, got '{text}'") from e


def parse_table(text: str) -> Tuple[Tuple[int, Fraction], ...]:
    """Entries ``n:psi`` separated by commas."""
    entries = []
    for item in filter(None, (part.strip() for part in text.split(","))):
        n, sep, value = item.partition(":")
        if not sep or not n.strip().isdigit():
            raise ConfigurationException(f"--table entries must look like n:psi, got '{item}'")
        entries.append((int(n), parse_rational(value, f"psi({n})")))
    return tuple(entries)

