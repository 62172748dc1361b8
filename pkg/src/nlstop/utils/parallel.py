"""Deterministic fan-out over a thread pool."""

from __future__ import annotations

import os
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

from nlstop.errors import InvalidArgumentError

T = TypeVar("T")
R = TypeVar("R")


def resolve_threads(threads: int | None) -> int:
    """Number of workers to use; ``None`` means every available core."""
    if threads is None:
        return max(os.cpu_count() or 1, 1)
    if threads < 1:
        raise InvalidArgumentError(f"threads must be >= 1, got {threads}")
    return threads


def ordered_map(fn: Callable[[T], R], items: Iterable[T], threads: int | None) -> list[R]:
    """Apply ``fn`` to every item and return results in input order.

    The output never depends on the worker count, only on ``items``.
    """
    work: Sequence[T] = list(items)
    workers = min(resolve_threads(threads), max(len(work), 1))
    if workers == 1:
        return [fn(item) for item in work]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, work))
