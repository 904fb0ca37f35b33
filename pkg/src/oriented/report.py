from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


@dataclass
class SolveReport:
    """A container together with how it was found.

    ``value`` is the objective the solver minimized (radius, area or
    perimeter), ``support`` the hull vertex indices that pin the container,
    ``edge_index`` the hull edge the container was built on, if any.
    """

    container: Any
    objective: str
    value: float
    support: list[int] = field(default_factory=list)
    edge_index: int | None = None
    construction: str = ""
    iterations: int = 0
    tolerances: dict[str, float] = field(default_factory=dict)
    degenerate: bool = False
    notes: dict[str, Any] = field(default_factory=dict)
    trace: Any = None


def worker_count() -> int:
    """Worker cap from ``ORIENTED_THREADS``: unset means serial, 0 means one per CPU."""
    raw = os.environ.get("ORIENTED_THREADS", "").strip()
    if not raw:
        return 1
    n = int(raw)
    return (os.cpu_count() or 1) if n == 0 else max(1, n)


def ordered_map(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """``map`` that may fan out over threads; results always come back in input order."""
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
