"""Tests for the measure-realising constructions."""

import math
from fractions import Fraction

import pytest

from src.domain.entities.psi_rules import (
    PrimeSquareRule,
    RealPrimeRule,
    TableRule,
    Theorem1Rule,
    Theorem2Rule,
    ZeroRule,
)
from src.domain.entities.spectrum_digits import SpectrumDigits
from src.domain.exceptions.domain_exceptions import (
    InvalidDigitsException,
    InvalidInputException,
    OutOfRangeException,
)
from src.domain.services.constructions import (
    critical_level,
    digits_for_target,
    periodic_expansion,
    psi_prime_transform,
    spectrum_membership,
    spectrum_value,
    theorem1_psi,
    theorem1_witnesses,
    theorem2_rule_for,
    theorem2_stage_union,
    theorem2_tables,
    theorem2_witnesses,
    truncated_target,
    truncation_tolerance,
    witness_cap,
)
from src.domain.services.ds_sets import tail_union
from src.domain.value_objects.case_id import CaseId
from src.domain.value_objects.family_tag import FamilyTag


def digits(p: int, text: str) -> SpectrumDigits:
    return SpectrumDigits.parse(p, text)


class TestShellRule:
    """Test cases for the shell rule and its spectra."""

    def test_support_rows(self) -> None:
        """Test psi(q) = q/3 on primes q != 3 for digits '10'."""
        rows = list(theorem1_psi(3, digits(3, "10")).support(50))

        assert rows[:3] == [(2, Fraction(2, 3)), (5, Fraction(5, 3)), (7, Fraction(7, 3))]
        assert all(n % 3 for n, _ in rows)

    def test_values_on_higher_shells(self, shell_rule_101: Theorem1Rule) -> None:
        """Test psi(9q) = q/3 and psi vanishes on the switched-off shell."""
        assert shell_rule_101.value(45) == Fraction(5, 3)
        assert shell_rule_101.value(15) == 0
        assert shell_rule_101.value(35) == 0

    def test_full_support(self) -> None:
        """Test the closed formula at composite cofactors."""
        rule = theorem1_psi(3, digits(3, "1"), full_support=True)

        assert rule.value(35) == Fraction(35, 3)
        assert [n for n, _ in rule.support(5)] == [1, 2, 4, 5]

    def test_rejects_non_binary_digits(self) -> None:
        """Test digit 2 is refused."""
        with pytest.raises(InvalidDigitsException):
            theorem1_psi(3, digits(3, "12"))

    def test_witnesses(self) -> None:
        """Test p^k q for switched-on shells and the first primes above p."""
        assert theorem1_witnesses(3, digits(3, "101"), 2) == [5, 7, 45, 63]

    @pytest.mark.parametrize(
        "text, family, expected",
        [
            ("101", FamilyTag.C, Fraction(20, 27)),
            ("101", FamilyTag.B, Fraction(1)),
            ("011", FamilyTag.B, Fraction(8, 27)),
        ],
    )
    def test_spectrum_value(self, text: str, family: FamilyTag, expected: Fraction) -> None:
        """Test sum x_k (p - 1) / p^(k + 1), and 1 for B when x_0 = 1."""
        assert spectrum_value(digits(3, text), family) == expected

    def test_spectrum_value_needs_c_or_b(self) -> None:
        """Test other families have no spectrum formula."""
        with pytest.raises(InvalidInputException):
            spectrum_value(digits(3, "1"), FamilyTag.A)

    def test_tail_union_matches_spectrum(self, shell_rule_101: Theorem1Rule) -> None:
        """Test the C tail union over enough stages reaches the spectrum value."""
        report = tail_union(FamilyTag.C, 3, shell_rule_101, 1, 300)

        assert report.measure == spectrum_value(shell_rule_101.digits, FamilyTag.C)


class TestSpectrumMembership:
    """Test cases for the digit test."""

    def test_periodic_expansion(self) -> None:
        """Test 1/4 = 0.(02) in base 3."""
        assert periodic_expansion(3, Fraction(1, 4)) == ((), (0, 2))

    def test_finite_expansion(self) -> None:
        """Test 1/9 = 0.01 in base 3."""
        assert periodic_expansion(3, Fraction(1, 9)) == ((0, 1), ())

    def test_one(self) -> None:
        """Test 1 is written with repeating p - 1."""
        assert periodic_expansion(5, Fraction(1)) == ((), (4,))

    def test_half_is_not_a_c_measure(self) -> None:
        """Test 1/2 over Z_3 needs digit 2."""
        assert not spectrum_membership(3, Fraction(1, 2), FamilyTag.C).member

    def test_two_thirds(self) -> None:
        """Test 2/3 is a C measure but not a B measure."""
        c = spectrum_membership(3, Fraction(2, 3), FamilyTag.C)
        b = spectrum_membership(3, Fraction(2, 3), FamilyTag.B)

        assert c.member and c.leading_digit == 1
        assert not b.member

    def test_b_members(self) -> None:
        """Test leading digit 0 and the value 1 are B measures, and 1 is also a C measure."""
        assert spectrum_membership(3, Fraction(2, 9), FamilyTag.B).member
        assert spectrum_membership(3, Fraction(1), FamilyTag.B).member
        one = spectrum_membership(3, Fraction(1), FamilyTag.C)
        assert one.member
        assert one.period == (1,)

    def test_every_value_is_a_c_measure_for_p_two(self) -> None:
        """Test base-2 digits are always binary."""
        assert spectrum_membership(2, Fraction(5, 7), FamilyTag.C).member

    def test_half_is_a_b_measure_for_p_two(self) -> None:
        """Test 1/2 = 0.0111... in base 2 has leading digit 0."""
        half = spectrum_membership(2, Fraction(1, 2), FamilyTag.B)

        assert half.member
        assert half.leading_digit == 0
        assert (half.preperiod, half.period) == ((0,), (1,))

    def test_other_base_two_values_keep_leading_digit(self) -> None:
        """Test values above 1/2 still start with digit 1 over Z_2."""
        assert not spectrum_membership(2, Fraction(3, 4), FamilyTag.B).member
        assert spectrum_membership(2, Fraction(1, 2), FamilyTag.C).leading_digit == 1

    def test_out_of_range(self) -> None:
        """Test x > 1 is refused."""
        with pytest.raises(OutOfRangeException):
            spectrum_membership(3, Fraction(4, 3), FamilyTag.C)


class TestMultiplicativeTables:
    """Test cases for the residue-class schedules."""

    def test_quarter_over_Z2(self) -> None:
        """Test the case-3 schedule for x = 1/4."""
        tables = theorem2_tables(2, digits_for_target(2, Fraction(1, 4), 6), 6)

        assert tables.case_id is CaseId.TWO
        assert (tables.K, tables.generator) == (0, 1)
        assert tables.stage(0).r == Fraction(1, 2)
        assert tables.stage(0).b == (0, 1, 0, 0, 0, 0)
        assert tables.orbit_factor == 2

    def test_quarter_rule_values(self, quarter_rule: Theorem2Rule) -> None:
        """Test psi on primes by their class modulo powers of 2."""
        assert quarter_rule.value(5) == Fraction(5, 8)
        assert quarter_rule.value(13) == Fraction(13, 8)
        assert quarter_rule.value(29) == Fraction(29, 8)
        assert quarter_rule.value(7) == 0
        assert quarter_rule.value(10) == 0
        assert quarter_rule.label(5) == "(2,1)-class"

    def test_quarter_support(self, quarter_rule: Theorem2Rule) -> None:
        """Test the first supported stages."""
        rows = list(quarter_rule.support(30))

        assert rows[:3] == [(5, Fraction(5, 8)), (13, Fraction(13, 8)), (29, Fraction(29, 8))]

    def test_four_thirteenths(self) -> None:
        """Test the case-1 residue set {1, g^3} for x_0 = 4 over Z_13."""
        tables = theorem2_tables(13, digits_for_target(13, Fraction(4, 13), 4), 4)
        rule = Theorem2Rule(tables=tables)

        assert tables.case_id is CaseId.ONE_MOD_FOUR
        assert tables.generator == 2
        assert tables.stage(0).residues == (1, 8)
        assert tables.stage(0).r == 0
        assert rule.value(53) == Fraction(53, 13)
        assert rule.label(53) == "I-class"
        assert truncated_target(tables) == Fraction(4, 13)

    def test_witnesses_for_four_thirteenths(self) -> None:
        """Test one Dirichlet prime per switched-on residue."""
        tables = theorem2_tables(13, digits_for_target(13, Fraction(4, 13), 4), 4)

        assert sorted(w.q for w in theorem2_witnesses(tables)) == [47, 53]

    def test_quarter_witness_union(self) -> None:
        """Test the witness union over Z_2 realises 1/4."""
        tables = theorem2_tables(2, digits_for_target(2, Fraction(1, 4), 6), 6)

        witnesses = theorem2_witnesses(tables)
        report = theorem2_stage_union(tables)

        assert [(w.n, w.part) for w in witnesses] == [(5, "(2,1)-class")]
        assert report.measure == Fraction(1, 4)
        assert truncated_target(tables) == Fraction(1, 4)

    @pytest.mark.parametrize(
        "p, x, expected",
        [
            (2, Fraction(1, 4), Fraction(1, 4)),
            (2, Fraction(3, 8), Fraction(3, 8)),
            (3, Fraction(1, 3), Fraction(728, 2187)),
            (3, Fraction(5, 9), Fraction(1214, 2187)),
            (5, Fraction(2, 5), Fraction(2, 5)),
            (7, Fraction(3, 7), Fraction(352946, 823543)),
            (13, Fraction(4, 13), Fraction(4, 13)),
        ],
    )
    def test_depth_six_targets(self, p: int, x: Fraction, expected: Fraction) -> None:
        """Test the exact depth-6 measure and its distance below x."""
        tables = theorem2_tables(p, digits_for_target(p, x, 6), 6)

        target = truncated_target(tables)

        assert target == expected
        assert 0 <= x - target < truncation_tolerance(tables)

    def test_long_leading_run_keeps_tail_digits(self) -> None:
        """Test digits past K + 2 still reach the stage-K remainder."""
        x = digits(3, "2222100011").value

        kept = digits_for_target(3, x, 6)
        tables = theorem2_tables(3, kept, 6)

        assert tables.K == 4
        assert kept.digits == (2, 2, 2, 2, 1, 0, 0, 0, 1, 1, 0, 0)
        assert tables.stage(4).r == Fraction(247, 243)
        assert x - truncated_target(tables) == Fraction(1, 3**11)

    def test_tolerance(self) -> None:
        """Test the tolerance scales with p^-(K + depth + 1)."""
        tables = theorem2_tables(3, digits_for_target(3, Fraction(1, 3), 6), 6)

        assert truncation_tolerance(tables) == Fraction(8, 3**7)

    @pytest.mark.parametrize(
        "p, case",
        [
            (2, CaseId.TWO),
            (3, CaseId.THREE_OR_FIVE),
            (5, CaseId.THREE_OR_FIVE),
            (7, CaseId.THREE_MOD_FOUR),
            (13, CaseId.ONE_MOD_FOUR),
        ],
    )
    def test_case_dispatch(self, p: int, case: CaseId) -> None:
        """Test each prime lands in its case."""
        assert theorem2_tables(p, digits(p, "0"), 2).case_id is case

    def test_invalid_tables(self) -> None:
        """Test non-primes, mismatched digits and zero depth."""
        with pytest.raises(InvalidInputException):
            theorem2_tables(9, SpectrumDigits(prime=9, digits=(1,)), 2)
        with pytest.raises(InvalidInputException):
            theorem2_tables(3, digits(5, "1"), 2)
        with pytest.raises(InvalidInputException):
            theorem2_tables(3, digits(3, "1"), 0)

    def test_one_uses_prime_rule(self) -> None:
        """Test x = 1 falls back to psi(q) = q on primes."""
        assert theorem2_rule_for(5, Fraction(1)) == RealPrimeRule(x=Fraction(1))

    def test_witness_cap_grows_with_depth(self) -> None:
        """Test the cap covers the deepest schedule modulus."""
        tables = theorem2_tables(13, digits(13, "1"), 6)

        assert witness_cap(tables, 100) == 13**7 * 1000
        assert witness_cap(tables, 10**12) == 10**12


class TestPrimedTransform:
    """Test cases for psi -> psi'."""

    @pytest.mark.parametrize(
        "n, psi_n, expected",
        [
            (5, Fraction(5, 3), Fraction(5)),
            (5, Fraction(5), Fraction(15)),
            (5, Fraction(45), Fraction(135)),
            (5, Fraction(5, 2), Fraction(5, 2)),
            (5, Fraction(0), Fraction(0)),
        ],
    )
    def test_values(self, n: int, psi_n: Fraction, expected: Fraction) -> None:
        """Test p psi(n) exactly when psi(n) = n / p^k."""
        primed = psi_prime_transform(TableRule(entries=((n, psi_n),)), 3)

        assert primed.value(n) == expected

    def test_support_follows_base(self, shell_rule_101: Theorem1Rule) -> None:
        """Test the shell rule is multiplied by p on its whole support."""
        primed = psi_prime_transform(shell_rule_101, 3)

        for (n, base), (m, value) in zip(shell_rule_101.support(60), primed.support(60)):
            assert n == m
            assert value == 3 * base


class TestCriticalLevel:
    """Test cases for critical_level."""

    @pytest.mark.parametrize(
        "rule, expected",
        [
            (ZeroRule(), math.inf),
            (Theorem1Rule(prime=3, digits=SpectrumDigits.parse(3, "1")), math.inf),
            (RealPrimeRule(x=Fraction(1)), 0),
            (RealPrimeRule(x=Fraction(1, 2)), math.inf),
            (PrimeSquareRule(x=Fraction(1)), 0),
            (TableRule(entries=((2, Fraction(1)),)), None),
        ],
    )
    def test_levels(self, rule, expected) -> None:
        """Test decidable levels and the undecided table case."""
        assert critical_level(rule, 3) == expected
