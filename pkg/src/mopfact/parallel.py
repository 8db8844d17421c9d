"""Optional thread fan-out, capped by the MOPFACT_THREADS environment variable."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
U = TypeVar("U")


def thread_count() -> int:
    raw = os.environ.get("MOPFACT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def parallel_map(fn: Callable[[T], U], items: Iterable[T]) -> list[U]:
    """Map fn over items, using up to MOPFACT_THREADS worker threads.

    The work items must be independent; results keep input order.
    """
    seq: Sequence[T] = list(items)
    workers = min(thread_count(), len(seq))
    if workers <= 1:
        return [fn(item) for item in seq]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, seq))
