"""Construction case identifier for the multiplicative-set schedules."""

from enum import IntEnum


class CaseId(IntEnum):
    """Which prime family a schedule is built for."""

    ONE_MOD_FOUR = 1
    THREE_MOD_FOUR = 2
    TWO = 3
    THREE_OR_FIVE = 4

    @classmethod
    def for_prime(cls, p: int) -> "CaseId":
        """Dispatch a prime to its case.

        Args:
            p: A prime

        Returns:
            Case 3 for p = 2, case 4 for p in {3, 5}, otherwise case 1 or 2
            according to p mod 4
        """
        if p == 2:
            return cls.TWO
        if p in (3, 5):
            return cls.THREE_OR_FIVE
        return cls.ONE_MOD_FOUR if p % 4 == 1 else cls.THREE_MOD_FOUR
