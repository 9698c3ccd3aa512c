"""Process pool for sweeps.

Tasks are submitted in chunks; workers set Django up once so they share the catalogs and the logging
configuration of the parent. Results are gathered by a single consumer and put back in task order.
"""

import time
from concurrent.futures import ProcessPoolExecutor, as_completed

import django
import psutil
import structlog
from django.conf import settings
from more_itertools import chunked

from .reports import Report
from .tasks import VerificationTask

logger = structlog.get_logger()

type Outcome = tuple[int, Report | None]


def default_jobs() -> int:
    return settings.QDWORK_JOBS or psutil.cpu_count() or 1


def _initialize_worker() -> None:
    django.setup()


def _run_chunk(tasks: list[VerificationTask]) -> list[Outcome]:
    return [(task.index, task.run()) for task in tasks]


def run_tasks(tasks: list[VerificationTask], jobs: int | None = None) -> list[Report | None]:
    """Run every task and return the outcomes in task order; ``None`` marks a skipped dense instance."""
    jobs = jobs or default_jobs()
    started = time.perf_counter()
    outcomes: list[Outcome] = []
    if jobs == 1:
        outcomes = _run_chunk(tasks)
    else:
        chunk_size = max(1, len(tasks) // (jobs * 4))
        with ProcessPoolExecutor(max_workers=jobs, initializer=_initialize_worker) as executor:
            futures = [executor.submit(_run_chunk, list(chunk)) for chunk in chunked(tasks, chunk_size)]
            for future in as_completed(futures):
                outcomes.extend(future.result())
                logger.debug("Chunk finished", done=len(outcomes), total=len(tasks))
    outcomes.sort(key=lambda outcome: outcome[0])
    logger.info("Tasks finished", tasks=len(tasks), jobs=jobs, seconds=round(time.perf_counter() - started, 3))
    return [report for _, report in outcomes]
