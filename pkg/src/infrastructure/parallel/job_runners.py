"""Serial and process-pool job runners."""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, TypeVar

from src.domain.interfaces.job_runner import IJobRunner

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class SerialJobRunner:
    """Runs jobs one after another in the calling process."""

    def map(self, fn: Callable[[T], R], jobs: Iterable[T]) -> List[R]:
        """Apply fn to every job in order."""
        return [fn(job) for job in jobs]


class ProcessPoolJobRunner:
    """Runs jobs on a pool of worker processes.

    ``Executor.map`` yields results in submission order, so the output never
    depends on which worker finishes first.
    """

    def __init__(self, workers: int, chunksize: int = 8) -> None:
        """Initialize runner.

        Args:
            workers: Number of worker processes (>= 1)
            chunksize: Jobs handed to a worker at a time
        """
        if workers < 1:
            raise ValueError(f"Worker count must be >= 1, got {workers}")
        self._workers = workers
        self._chunksize = chunksize

    @property
    def workers(self) -> int:
        """Number of worker processes."""
        return self._workers

    def map(self, fn: Callable[[T], R], jobs: Iterable[T]) -> List[R]:
        """Apply fn to every job on the pool, results in job order."""
        batch = list(jobs)
        if len(batch) < 2:
            return [fn(job) for job in batch]
        logger.debug("Dispatching %d jobs to %d workers", len(batch), self._workers)
        with ProcessPoolExecutor(max_workers=self._workers) as executor:
            return list(executor.map(fn, batch, chunksize=self._chunksize))


def runner_for(parallel: int) -> IJobRunner:
    """Serial runner for 1, a process pool otherwise."""
    if parallel <= 1:
        return SerialJobRunner()
    return ProcessPoolJobRunner(parallel)
