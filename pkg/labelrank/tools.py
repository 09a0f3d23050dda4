"""Worker pool helpers shared by the engine, the LPA baseline and the script

The number of workers is capped by the **LABELRANK_THREADS** environment
variable (0 or unset means one worker per CPU).
"""
import os
from concurrent.futures import ThreadPoolExecutor

from labelrank import logger

__all__ = ["worker_count", "run_concurrently", "row_chunks"]


def worker_count(workers=None):
    """Return the number of workers to use

    :param int workers: explicit request. If None, LABELRANK_THREADS is read.
    """
    if workers is None:
        value = os.environ.get("LABELRANK_THREADS", "0").strip() or "0"
        try:
            workers = int(value)
        except ValueError:
            raise ValueError("LABELRANK_THREADS must be an integer. Provided %s" % value)
    if workers < 0:
        raise ValueError("worker count must be positive or 0 (auto). Provided %s" % workers)
    if workers == 0:
        workers = os.cpu_count() or 1
    return workers


def run_concurrently(func, items, workers=None):
    """Apply func to every item, results returned in the order of items"""
    items = list(items)
    workers = min(worker_count(workers), max(len(items), 1))
    if workers == 1:
        return [func(item) for item in items]
    logger.debug("Running %s tasks on %s workers" % (len(items), workers))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def row_chunks(n, workers):
    """Split range(n) into at most workers contiguous (start, stop) slices"""
    workers = max(1, min(workers, n))
    bounds = [n * i // workers for i in range(workers + 1)]
    return [(a, b) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
