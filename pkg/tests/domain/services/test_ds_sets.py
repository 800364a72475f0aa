"""Tests for stage sets and tail unions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.domain.entities.ball_set import BallSet
from src.domain.entities.psi_rules import TableRule, Theorem1Rule, ZeroRule
from src.domain.entities.spectrum_digits import SpectrumDigits
from src.domain.exceptions.domain_exceptions import InvalidInputException
from src.domain.services.ball_algebra import contains, intersect, is_subset, shell, union
from src.domain.services.ds_sets import (
    set_A_n,
    set_B_n,
    set_C_n,
    set_fA_n,
    set_fA_strict_n,
    set_fK_n,
    stage_set,
    tail_union,
    witness_stage_union,
)
from src.domain.services.padic_core import integer_valuation
from src.domain.value_objects.family_tag import FamilyTag

small_primes = st.sampled_from([2, 3, 5])
psi_values = st.fractions(min_value=0, max_value=8, max_denominator=30)


class TestSetA:
    """Test cases for the A stage sets."""

    def test_radius_half_covers_Z2(self) -> None:
        """Test centers 1/3 and 2/3 cover both classes mod 2."""
        assert set_A_n(2, 3, Fraction(3, 2)).is_full

    def test_p_dividing_n_is_empty(self) -> None:
        """Test a/3 has negative 3-adic valuation."""
        assert set_A_n(3, 3, Fraction(1, 3)).is_empty

    def test_units_of_Z3(self) -> None:
        """Test +-1/2 fill the unit shell of Z_3."""
        assert set_A_n(3, 2, Fraction(2, 3)) == shell(3, 0)

    def test_zero_psi_keeps_centers_on_request(self) -> None:
        """Test radius 0 yields null points only when retained."""
        assert set_A_n(3, 2, Fraction(0)).is_empty

        retained = set_A_n(3, 2, Fraction(0), retain_singletons=True)
        assert retained.measure() == 0
        assert contains(retained, Fraction(1, 2))
        assert contains(retained, Fraction(-1, 2))

    def test_invalid_stage(self) -> None:
        """Test n >= 1 and psi >= 0 are enforced."""
        with pytest.raises(InvalidInputException):
            set_A_n(3, 0, Fraction(1))
        with pytest.raises(InvalidInputException):
            set_A_n(3, 2, Fraction(-1))


class TestSetC:
    """Test cases for the C stage sets."""

    def test_units_of_Z3(self) -> None:
        """Test 5/a over the admissible a reaches both unit classes mod 3."""
        assert set_C_n(3, 5, Fraction(5, 3)) == shell(3, 0)

    def test_n_one_is_empty(self) -> None:
        """Test there is no admissible a for n = 1."""
        assert set_C_n(3, 1, Fraction(1)).is_empty

    @settings(max_examples=40, deadline=None)
    @given(p=small_primes, n=st.integers(1, 40), psi_n=psi_values)
    def test_lies_in_the_shell_of_n(self, p: int, n: int, psi_n: Fraction) -> None:
        """Test every center n/a has valuation v(n), so small balls stay in that shell."""
        k = integer_valuation(p, n)
        stage = set_C_n(p, n, psi_n)
        if psi_n / n <= Fraction(1, p ** (k + 1)):
            assert is_subset(stage, shell(p, k))


class TestSetB:
    """Test cases for the B stage sets."""

    @settings(max_examples=40, deadline=None)
    @given(p=small_primes, n=st.integers(1, 40), psi_n=psi_values)
    def test_is_union_of_A_and_C(self, p: int, n: int, psi_n: Fraction) -> None:
        """Test B_n = A_n u C_n."""
        assert set_B_n(p, n, psi_n) == union(set_A_n(p, n, psi_n), set_C_n(p, n, psi_n))


class TestMultiplicativeSets:
    """Test cases for the FrakK and FrakA stage sets."""

    def test_fK_example(self) -> None:
        """Test divisor centers of 4 at radius 1/8."""
        stage = set_fK_n(2, 4, Fraction(1, 2))

        assert set(stage.classes()) == {(1, 3), (4, 3), (7, 3)}
        assert stage.measure() == Fraction(3, 8)

    def test_fA_example(self) -> None:
        """Test +-13 and +-1/13 modulo 8."""
        stage = set_fA_n(2, 13, Fraction(13, 8))

        assert set(stage.classes()) == {(3, 3), (5, 3)}
        assert stage.measure() == Fraction(1, 4)

    @settings(max_examples=40, deadline=None)
    @given(p=small_primes, n=st.integers(1, 60), psi_n=psi_values)
    def test_fA_inside_fK(self, p: int, n: int, psi_n: Fraction) -> None:
        """Test unitary splits are among the divisor centers."""
        assert is_subset(set_fA_n(p, n, psi_n), set_fK_n(p, n, psi_n))

    @settings(max_examples=40, deadline=None)
    @given(p=small_primes, n=st.integers(1, 60), psi_n=psi_values)
    def test_strict_inside_closed(self, p: int, n: int, psi_n: Fraction) -> None:
        """Test open balls lie inside the closed balls of the same radius."""
        assert is_subset(set_fA_strict_n(p, n, psi_n), set_fA_n(p, n, psi_n))

    def test_strict_radius_zero(self) -> None:
        """Test open balls of radius 0 are empty even when points are retained."""
        assert set_fA_strict_n(3, 7, Fraction(0)).is_empty


class TestStageSet:
    """Test cases for the family dispatcher."""

    @pytest.mark.parametrize(
        "family, generator",
        [
            (FamilyTag.A, set_A_n),
            (FamilyTag.C, set_C_n),
            (FamilyTag.B, set_B_n),
            (FamilyTag.FRAK_K, set_fK_n),
            (FamilyTag.FRAK_A, set_fA_n),
        ],
    )
    def test_dispatch(self, family: FamilyTag, generator) -> None:
        """Test each tag reaches its generator."""
        assert stage_set(family, 3, 10, Fraction(7, 2)) == generator(3, 10, Fraction(7, 2))

    def test_dispatch_strict(self) -> None:
        """Test the strict tag reaches the open-ball generator."""
        assert stage_set(FamilyTag.FRAK_A_STRICT, 3, 10, Fraction(7, 2)) == set_fA_strict_n(
            3, 10, Fraction(7, 2)
        )


class TestTailUnion:
    """Test cases for tail_union."""

    def test_shell_rule_fills_units(self) -> None:
        """Test digits '1' give the unit shell of Z_3."""
        rule = Theorem1Rule(prime=3, digits=SpectrumDigits.parse(3, "1"))

        report = tail_union(FamilyTag.C, 3, rule, 1, 50)

        assert report.measure == Fraction(2, 3)
        assert report.union == shell(3, 0)
        assert report.measure <= min(Fraction(1), report.series)

    def test_zero_rule(self) -> None:
        """Test psi = 0 has an empty tail."""
        report = tail_union(FamilyTag.A, 5, ZeroRule(), 1, 30)

        assert report.union.is_empty
        assert report.stage_count == 0
        assert report.series == 0

    def test_start_filters_stages(self) -> None:
        """Test stages below N are left out."""
        rule = TableRule(entries=((2, Fraction(2, 3)), (4, Fraction(4, 9))))

        report = tail_union(FamilyTag.A, 3, rule, 3, 10)

        assert [stage.n for stage in report.stages] == [4]

    @pytest.mark.parametrize("start, stop", [(0, 5), (6, 5)])
    def test_invalid_range(self, start: int, stop: int) -> None:
        """Test 1 <= N <= T is enforced."""
        with pytest.raises(InvalidInputException):
            tail_union(FamilyTag.A, 3, ZeroRule(), start, stop)

    def test_tails_decrease(self, shell_rule_101) -> None:
        """Test later tails are contained in earlier ones."""
        first = tail_union(FamilyTag.C, 3, shell_rule_101, 1, 60).union
        later = tail_union(FamilyTag.C, 3, shell_rule_101, 10, 60).union

        assert is_subset(later, first)

    def test_runner_gives_same_report(self, shell_rule_101, serial_runner) -> None:
        """Test a job runner does not change the result."""
        direct = tail_union(FamilyTag.B, 3, shell_rule_101, 1, 40)
        mapped = tail_union(FamilyTag.B, 3, shell_rule_101, 1, 40, runner=serial_runner)

        assert direct == mapped


class TestWitnessStageUnion:
    """Test cases for witness_stage_union."""

    def test_skips_zero_stages_and_sorts(self, shell_rule_101) -> None:
        """Test stages with psi = 0 contribute nothing."""
        report = witness_stage_union(FamilyTag.C, 3, shell_rule_101, [7, 3, 5, 5])

        assert [stage.n for stage in report.stages] == [5, 7]
        assert (report.start, report.stop) == (3, 7)

    def test_matches_intersection_with_tail(self, shell_rule_101) -> None:
        """Test the witness union lies inside the full tail union."""
        witness = witness_stage_union(FamilyTag.C, 3, shell_rule_101, [5, 7, 45, 63]).union
        tail = tail_union(FamilyTag.C, 3, shell_rule_101, 1, 63).union

        assert intersect(witness, tail) == witness
        assert not witness.is_empty
        assert isinstance(witness, BallSet)
