"""
Thermotopo - Worker Pool

Maps independent jobs (sweep points, twist-grid rows) over a joblib pool.
Results always come back in job order.
"""

import time
from typing import Callable, List, Optional, Sequence, TypeVar

import structlog
from joblib import Parallel, delayed

from thermotopo.core.config import settings

logger = structlog.get_logger()

JobT = TypeVar("JobT")
ResultT = TypeVar("ResultT")


def resolve_workers(workers: Optional[int] = None) -> int:
    """Worker count, falling back to DEFAULT_WORKERS; never below 1."""
    value = workers if workers is not None else settings.DEFAULT_WORKERS
    return max(1, int(value))


def run_jobs(
    fn: Callable[[JobT], ResultT],
    jobs: Sequence[JobT],
    workers: Optional[int] = None,
    label: str = "jobs",
) -> List[ResultT]:
    """
    Evaluate fn on every job.

    Args:
        fn: Pure function of one job (must be picklable for workers > 1)
        jobs: Job arguments
        workers: Process count (1 runs inline)
        label: Name used in log events

    Returns:
        Results in the order of jobs
    """
    n_workers = min(resolve_workers(workers), max(len(jobs), 1))
    start = time.perf_counter()
    logger.debug("Running jobs", label=label, jobs=len(jobs), workers=n_workers)

    if n_workers == 1:
        results = [fn(job) for job in jobs]
    else:
        results = Parallel(n_jobs=n_workers)(delayed(fn)(job) for job in jobs)

    logger.debug(
        "Jobs finished",
        label=label,
        jobs=len(jobs),
        elapsed_s=round(time.perf_counter() - start, 3),
    )
    return list(results)
