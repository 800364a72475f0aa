"""Tests for Lebesgue measures on the real unit interval."""

from fractions import Fraction

import pytest

from src.domain.entities.interval import HalfOpenInterval
from src.domain.entities.psi_rules import PrimeSquareRule, RealPrimeRule, ZeroRule
from src.domain.exceptions.domain_exceptions import (
    InvalidInputException,
    OutOfRangeException,
)
from src.domain.services.real_line import (
    clip,
    real_case_tail,
    real_stage_intervals,
    real_tail_measure,
    union_measure,
)
from src.domain.value_objects.family_tag import FamilyTag


def interval(left: str, right: str) -> HalfOpenInterval:
    return HalfOpenInterval(Fraction(left), Fraction(right))


class TestIntervals:
    """Test cases for clipping and union measure."""

    def test_clip(self) -> None:
        """Test clipping to [0, 1), including an empty result."""
        assert clip(Fraction(-1, 2), Fraction(1, 2)) == interval("0", "1/2")
        assert clip(Fraction(3, 2), Fraction(2)).length == 0

    def test_union_measure_merges_overlaps(self) -> None:
        """Test overlapping and touching intervals are counted once."""
        pieces = [
            interval("0", "1/4"),
            interval("1/8", "1/2"),
            interval("1/2", "3/4"),
            interval("7/8", "1"),
        ]

        assert union_measure(pieces) == Fraction(7, 8)

    def test_union_measure_empty(self) -> None:
        """Test no intervals and empty intervals."""
        assert union_measure([]) == 0
        assert union_measure([interval("1/3", "1/3")]) == 0


class TestStageIntervals:
    """Test cases for real stage sets."""

    def test_frak_a_prime(self) -> None:
        """Test the balls around +-1/q and +-q for a prime q."""
        pieces = real_stage_intervals(FamilyTag.FRAK_A, 3, Fraction(3, 2))

        assert union_measure(pieces) == Fraction(5, 6)

    def test_frak_k_adds_one(self) -> None:
        """Test the divisor center 1 of a prime square."""
        pieces = real_stage_intervals(FamilyTag.FRAK_K, 9, Fraction(9, 4))

        assert union_measure(pieces) == Fraction(1, 4) + Fraction(1, 9) + Fraction(1, 4)

    def test_other_families(self) -> None:
        """Test only FrakA and FrakK have real stage sets."""
        with pytest.raises(InvalidInputException):
            real_stage_intervals(FamilyTag.C, 3, Fraction(1))


class TestTailMeasures:
    """Test cases for tail measures."""

    def test_real_prime_rule(self) -> None:
        """Test [0, 1/q + 1/2) is largest at q = 3."""
        measure = real_tail_measure(FamilyTag.FRAK_A, RealPrimeRule(x=Fraction(1, 2)), 3, 50)

        assert measure == Fraction(5, 6)

    def test_prime_square_rule(self) -> None:
        """Test the FrakK tail on prime squares reaches 2x + 1/q0^2."""
        rule = PrimeSquareRule(x=Fraction(1, 4))

        frak_k = real_tail_measure(FamilyTag.FRAK_K, rule, 25, 200)
        frak_a = real_tail_measure(FamilyTag.FRAK_A, rule, 25, 200)

        assert frak_k == Fraction(1, 2) + Fraction(1, 25)
        assert frak_a == Fraction(1, 4) + Fraction(1, 25)

    def test_zero_rule(self) -> None:
        """Test an empty support."""
        assert real_tail_measure(FamilyTag.FRAK_A, ZeroRule(), 1, 10) == 0

    def test_invalid_range(self) -> None:
        """Test N > T is refused."""
        with pytest.raises(InvalidInputException):
            real_tail_measure(FamilyTag.FRAK_A, ZeroRule(), 5, 4)

    @pytest.mark.parametrize(
        "start, expected",
        [(2, Fraction(1)), (10, Fraction(13, 22)), (100, Fraction(1, 2) + Fraction(1, 101))],
    )
    def test_real_case_tail(self, start: int, expected: Fraction) -> None:
        """Test min(1, x + 1/q0) for x = 1/2."""
        tail = real_case_tail(Fraction(1, 2), start)

        assert tail.measure == expected
        assert tail.limit == Fraction(1, 2)

    def test_real_case_tail_first_prime(self) -> None:
        """Test the first prime at or above Q."""
        assert real_case_tail(Fraction(0), 24).first_prime == 29

    def test_real_case_tail_errors(self) -> None:
        """Test x outside [0, 1] and Q < 2."""
        with pytest.raises(OutOfRangeException):
            real_case_tail(Fraction(3, 2), 10)
        with pytest.raises(InvalidInputException):
            real_case_tail(Fraction(1, 2), 1)
