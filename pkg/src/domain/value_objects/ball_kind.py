"""Ball kind value object."""

from enum import Enum


class BallKind(Enum):
    """Shape of a ball intersected with Z_p."""

    EMPTY = "empty"
    SINGLETON = "singleton"
    CLASS = "class"
