"""
Exhaustive generation of finite ordered Gamma-semigroups within size bounds.

The encoding space is cut into a fixed list of tasks (n, g, table prefix), independent of the worker count. Each
task is scanned on its own and results are merged in task order, so the observable output never depends on
parallelism.
"""

import multiprocessing as mp
from dataclasses import dataclass
from functools import partial
from typing import Callable, Iterable, Iterator, List, Optional, Tuple

import numpy as np

from gamma_lab.algebra.structure import FiniteOrderedGammaSemigroup, compatibility_violations
from gamma_lab.enumeration.canonical import is_canonical
from gamma_lab.enumeration.posets import allowed_posets
from gamma_lab.enumeration.tables import associative_tables, split_prefixes, table_count
from gamma_lab.errors import CapacityError, InputError
from gamma_lab.utils.expr import Expr, evaluate

DEFAULT_CAPACITY = 10**8
ORDER_MODES = ("discrete", "all")
SPLIT_DEPTH = 2

Task = Tuple[int, int, Tuple[int, ...]]


@dataclass(frozen=True)
class EnumerationSpec:
    max_m: int
    max_gamma: int
    order_mode: str = "all"
    predicate: Optional[Expr] = None
    dedup: bool = False
    capacity: int = DEFAULT_CAPACITY

    def __post_init__(self):
        if self.max_m < 1 or self.max_gamma < 1:
            raise InputError(f"Need max_m >= 1 and max_gamma >= 1, got {self.max_m}, {self.max_gamma}")
        if self.order_mode not in ORDER_MODES:
            raise InputError(f"Unknown order mode {self.order_mode}; expected one of {ORDER_MODES}")


@dataclass
class ScanStats:
    candidates: int = 0  # (associative table, allowed order) pairs examined
    valid: int = 0
    hits: int = 0

    def __iadd__(self, other: "ScanStats") -> "ScanStats":
        self.candidates += other.candidates
        self.valid += other.valid
        self.hits += other.hits
        return self


def raw_candidate_count(spec: EnumerationSpec) -> int:
    """Sum over n, g of n^(g n^2) times the number of allowed orders; raises CapacityError above the ceiling.

    Shapes are added one at a time and the first shape that pushes a running total past the ceiling raises.
    """
    shapes = [(n, g) for n in range(1, spec.max_m + 1) for g in range(1, spec.max_gamma + 1)]
    # tables alone are checked first, so orders are never generated for hopeless requests
    tables = 0
    for n, g in shapes:
        tables += table_count(n, g)
        if tables > spec.capacity:
            raise CapacityError(f"more than {spec.capacity} raw tables at |M|={n}, |Gamma|={g}")
    total = 0
    for n, g in shapes:
        total += table_count(n, g) * len(allowed_posets(n, spec.order_mode))
        if total > spec.capacity:
            raise CapacityError(f"more than {spec.capacity} raw candidates at |M|={n}, |Gamma|={g}")
    return total


def tasks(spec: EnumerationSpec) -> List[Task]:
    return [
        (n, g, prefix)
        for n in range(1, spec.max_m + 1)
        for g in range(1, spec.max_gamma + 1)
        for prefix in split_prefixes(n, g, SPLIT_DEPTH)
    ]


def scan_task(spec: EnumerationSpec, task: Task, stats: ScanStats) -> Iterator[FiniteOrderedGammaSemigroup]:
    """Yield the valid structures of one task that satisfy the predicate, in encoding order, counting into `stats`."""
    n, g, prefix = task
    orders = allowed_posets(n, spec.order_mode)
    for flat in associative_tables(n, g, prefix):
        table = np.array(flat, dtype=np.int64).reshape(g, n, n)
        for _, leq in orders:
            stats.candidates += 1
            if compatibility_violations(table, leq).any():
                continue
            if spec.dedup and not is_canonical(table, leq):
                continue
            stats.valid += 1
            S = FiniteOrderedGammaSemigroup(table=table, leq=leq)
            if spec.predicate is not None and not evaluate(spec.predicate, S):
                continue
            stats.hits += 1
            yield S


def map_tasks(fn: Callable, items: Iterable, workers: int = 1) -> Iterator:
    """Ordered map, in-process for one worker, over a process pool otherwise."""
    if workers <= 1:
        yield from map(fn, items)
        return
    with mp.Pool(workers) as pool:
        yield from pool.imap(fn, items)


def _list_task(spec: EnumerationSpec, task: Task) -> Tuple[ScanStats, List[Tuple[int, int, int, int]]]:
    stats = ScanStats()
    encodings = [S.encode() for S in scan_task(spec, task, stats)]
    return stats, encodings


def enumerate_structures(
    spec: EnumerationSpec, workers: int = 1, stats: Optional[ScanStats] = None
) -> Iterator[FiniteOrderedGammaSemigroup]:
    """Every valid structure within the bounds, in canonical encoding order.

    The capacity check runs before the stream is returned. Counts accumulate into `stats` as the stream is consumed.
    """
    raw_candidate_count(spec)
    return _stream(spec, workers, stats if stats is not None else ScanStats())


def _stream(spec: EnumerationSpec, workers: int, stats: ScanStats) -> Iterator[FiniteOrderedGammaSemigroup]:
    if workers <= 1:
        for task in tasks(spec):
            yield from scan_task(spec, task, stats)
        return
    for part, encodings in map_tasks(partial(_list_task, spec), tasks(spec), workers):
        stats += part
        for encoding in encodings:
            yield FiniteOrderedGammaSemigroup.decode(encoding)
