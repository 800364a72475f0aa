"""Value objects."""

from .ball_kind import BallKind
from .case_id import CaseId
from .family_tag import FamilyTag
from .rule_variant import RuleVariant
from .verdict import Verdict

__all__ = ["BallKind", "CaseId", "FamilyTag", "RuleVariant", "Verdict"]
