"""Domain entities.

The psi rules live in ``psi_rules`` and are imported from there directly,
since they evaluate through the domain services.
"""

from .ball_set import BallSet
from .case_tables import Case2Tables, StageSchedule
from .check_report import CheckReport
from .digit_vector import DigitVector
from .factorization import Factorization
from .interval import HalfOpenInterval
from .padic_ball import PAdicBall
from .spectrum_digits import SpectrumDigits
from .tail_report import StageMeasure, TailReport

__all__ = [
    "BallSet",
    "Case2Tables",
    "CheckReport",
    "DigitVector",
    "Factorization",
    "HalfOpenInterval",
    "PAdicBall",
    "SpectrumDigits",
    "StageMeasure",
    "StageSchedule",
    "TailReport",
]
