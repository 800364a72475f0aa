"""Shared fixtures for the padic-ds test suite."""

from fractions import Fraction

import pytest

from src.domain.entities.psi_rules import Theorem1Rule
from src.domain.entities.spectrum_digits import SpectrumDigits
from src.domain.services.constructions import theorem2_rule_for
from src.infrastructure.parallel.job_runners import SerialJobRunner


@pytest.fixture
def serial_runner() -> SerialJobRunner:
    """Runner that keeps every job in the test process."""
    return SerialJobRunner()


@pytest.fixture
def shell_rule_101() -> Theorem1Rule:
    """Shell rule for p = 3 with digits x_0 = 1, x_1 = 0, x_2 = 1."""
    return Theorem1Rule(prime=3, digits=SpectrumDigits.parse(3, "101"))


@pytest.fixture
def quarter_rule():
    """Multiplicative-set rule realising 1/4 over Z_2."""
    return theorem2_rule_for(2, Fraction(1, 4), 6)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    """Keep PADIC_DS_* variables of the calling shell out of the tests."""
    monkeypatch.delenv("PADIC_DS_CAP", raising=False)
    monkeypatch.delenv("PADIC_DS_DEPTH", raising=False)
