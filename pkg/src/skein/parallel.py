"""Process fan-out for batch work.  SKEIN_THREADS caps the worker count;
with one worker everything runs in-process, which keeps tracebacks simple
and results byte-identical either way (task order is preserved)."""

from __future__ import annotations

import multiprocessing
import os


def worker_count():
    cpus = os.cpu_count() or 1
    cap = os.environ.get("SKEIN_THREADS")
    if cap is None:
        return cpus
    try:
        return max(1, min(cpus, int(cap)))
    except ValueError:
        raise ValueError(f"SKEIN_THREADS must be an integer, got {cap!r}") from None


def pmap(fn, tasks, workers=None):
    """Ordered map over tasks; fn must be a module-level function when more
    than one worker is in play."""
    tasks = list(tasks)
    w = worker_count() if workers is None else workers
    if w <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with multiprocessing.Pool(min(w, len(tasks))) as pool:
        return pool.map(fn, tasks)
