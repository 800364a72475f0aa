"""Check verdict value object."""

from enum import Enum


class Verdict(Enum):
    """Outcome of an executable check."""

    PASS = "pass"
    FAIL = "fail"

    @property
    def passed(self) -> bool:
        """Check whether the verdict is a pass."""
        return self is Verdict.PASS
