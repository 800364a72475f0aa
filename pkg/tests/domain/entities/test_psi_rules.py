"""Tests for the rule-defined approximation functions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.domain.entities.psi_rules import (
    PrimedRule,
    PrimeSquareRule,
    RealPrimeRule,
    TableRule,
    Theorem1Rule,
    ZeroRule,
    primed_value,
)
from src.domain.entities.spectrum_digits import SpectrumDigits
from src.domain.exceptions.domain_exceptions import (
    InvalidInputException,
    OutOfRangeException,
)


class TestZeroAndTable:
    """Test cases for ZeroRule and TableRule."""

    def test_zero(self) -> None:
        """Test psi = 0 has no support."""
        rule = ZeroRule()

        assert rule.value(10) == 0
        assert list(rule.support(100)) == []

    def test_table_lookup(self) -> None:
        """Test entries, zeros off the table and sorted support."""
        rule = TableRule(entries=((5, Fraction(1, 2)), (3, Fraction(2)), (4, Fraction(0))))

        assert rule.value(5) == Fraction(1, 2)
        assert rule.value(6) == 0
        assert list(rule.support(10)) == [(3, Fraction(2)), (5, Fraction(1, 2))]
        assert list(rule.support(4)) == [(3, Fraction(2))]

    @pytest.mark.parametrize(
        "entries",
        [((0, Fraction(1)),), ((2, Fraction(-1)),), ((2, Fraction(1)), (2, Fraction(2)))],
    )
    def test_table_validation(self, entries: tuple) -> None:
        """Test bad indices, negative values and duplicates."""
        with pytest.raises(InvalidInputException):
            TableRule(entries=entries)

    def test_n_must_be_positive(self) -> None:
        """Test psi is only defined on n >= 1."""
        with pytest.raises(InvalidInputException):
            ZeroRule().value(0)


class TestShellRule:
    """Test cases for Theorem1Rule."""

    @settings(max_examples=50, deadline=None)
    @given(n=st.integers(1, 2_000))
    def test_support_agrees_with_value(self, n: int) -> None:
        """Test n is in the support exactly when psi(n) > 0."""
        rule = Theorem1Rule(prime=3, digits=SpectrumDigits.parse(3, "101"))
        support = dict(rule.support(2_000))

        assert support.get(n, Fraction(0)) == rule.value(n)

    def test_labels(self, shell_rule_101: Theorem1Rule) -> None:
        """Test labels name the shell."""
        assert shell_rule_101.label(45) == "shell-2"

    def test_digit_base_must_match(self) -> None:
        """Test digits in another base are refused."""
        with pytest.raises(InvalidInputException):
            Theorem1Rule(prime=3, digits=SpectrumDigits.parse(5, "1"))


class TestRealRules:
    """Test cases for the real prime and prime-square rules."""

    def test_prime_rule(self) -> None:
        """Test q x on primes only."""
        rule = RealPrimeRule(x=Fraction(1, 3))

        assert rule.value(7) == Fraction(7, 3)
        assert rule.value(9) == 0
        assert [n for n, _ in rule.support(10)] == [2, 3, 5, 7]

    def test_prime_square_rule(self) -> None:
        """Test q^2 x on prime squares only."""
        rule = PrimeSquareRule(x=Fraction(1, 2))

        assert rule.value(49) == Fraction(49, 2)
        assert rule.value(36) == 0
        assert [n for n, _ in rule.support(50)] == [4, 9, 25, 49]

    def test_zero_x_has_no_support(self) -> None:
        """Test x = 0 gives an empty support."""
        assert list(RealPrimeRule(x=Fraction(0)).support(50)) == []
        assert list(PrimeSquareRule(x=Fraction(0)).support(50)) == []

    @pytest.mark.parametrize("rule_type", [RealPrimeRule, PrimeSquareRule])
    def test_range(self, rule_type) -> None:
        """Test x outside [0, 1] is refused."""
        with pytest.raises(OutOfRangeException):
            rule_type(x=Fraction(3, 2))


class TestPrimedRule:
    """Test cases for PrimedRule and primed_value."""

    def test_primed_value(self) -> None:
        """Test the factor p applies to powers of p only."""
        assert primed_value(2, 12, Fraction(3)) == Fraction(6)
        assert primed_value(2, 12, Fraction(4)) == Fraction(4)
        assert primed_value(2, 12, Fraction(0)) == 0

    def test_rule_wraps_base(self) -> None:
        """Test value, support and label follow the base rule."""
        base = TableRule(entries=((6, Fraction(3)), (7, Fraction(2))))
        rule = PrimedRule(base=base, prime=2)

        assert rule.value(6) == Fraction(6)
        assert list(rule.support(10)) == [(6, Fraction(6)), (7, Fraction(2))]
        assert rule.label(6) == "table"
