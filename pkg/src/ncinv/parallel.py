"""Optional thread parallelism with deterministic, order-preserving results."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def default_width() -> int:
    """Worker count: NCINV_THREADS if set, else the machine's core count."""
    env = os.environ.get("NCINV_THREADS")
    if env is not None:
        width = int(env)
        if width < 1:
            raise ValueError("NCINV_THREADS must be a positive integer")
        return width
    return os.cpu_count() or 1


def pmap(fn: Callable[[T], R], items: Iterable[T], width: int) -> Sequence[R]:
    """Map preserving input order; results never depend on the width."""
    items = list(items)
    if width <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=width) as pool:
        return list(pool.map(fn, items))
