"""Job runners for per-stage work."""

from .job_runners import ProcessPoolJobRunner, SerialJobRunner, runner_for

__all__ = ["ProcessPoolJobRunner", "SerialJobRunner", "runner_for"]
