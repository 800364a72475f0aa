"""Job runner interface."""

from typing import Callable, Iterable, List, Protocol, TypeVar

T = TypeVar("T")
R = TypeVar("R")


class IJobRunner(Protocol):
    """Interface for running independent jobs.

    Implementations must return results in job order, whatever order the
    jobs finish in.
    """

    def map(self, fn: Callable[[T], R], jobs: Iterable[T]) -> List[R]:
        """Apply fn to every job.

        Args:
            fn: Picklable module-level function
            jobs: Job arguments

        Returns:
            Results aligned with jobs
        """
        ...
