"""
Associative Gamma-tables by backtracking over cells (gamma, a, b) in row-major order.

A partial table is abandoned as soon as some completed triple breaks (a gamma b) mu c = a gamma (b mu c), and
tables come out in increasing table-code order.
"""

import itertools
from typing import Iterator, List, Sequence, Tuple


def table_count(n: int, g: int) -> int:
    """Number of raw tables, n^(g n^2)."""
    return n ** (g * n * n)


def _consistent(t: List[List[List[int]]], n: int, g: int) -> bool:
    for x in range(n):
        for gamma in range(g):
            row = t[gamma][x]
            for y in range(n):
                xy = row[y]
                if xy < 0:
                    continue
                for mu in range(g):
                    after = t[mu][y]
                    for z in range(n):
                        yz = after[z]
                        if yz < 0:
                            continue
                        lhs = t[mu][xy][z]
                        rhs = row[yz]
                        if lhs >= 0 and rhs >= 0 and lhs != rhs:
                            return False
    return True


def associative_tables(n: int, g: int, prefix: Sequence[int] = ()) -> Iterator[Tuple[int, ...]]:
    """Yield every associative table (flattened, cells ordered gamma, a, b) whose leading cells equal `prefix`."""
    positions = [(gamma, a, b) for gamma in range(g) for a in range(n) for b in range(n)]
    assert len(prefix) <= len(positions), f"prefix of length {len(prefix)} for {len(positions)} cells"
    t = [[[-1] * n for _ in range(n)] for _ in range(g)]

    def fill(k: int) -> Iterator[Tuple[int, ...]]:
        if k == len(positions):
            yield tuple(v for rows in t for row in rows for v in row)
            return
        gamma, a, b = positions[k]
        values = (prefix[k],) if k < len(prefix) else range(n)
        for v in values:
            t[gamma][a][b] = v
            if _consistent(t, n, g):
                yield from fill(k + 1)
        t[gamma][a][b] = -1

    yield from fill(0)


def split_prefixes(n: int, g: int, depth: int) -> List[Tuple[int, ...]]:
    """Fixed partition of the table-code space into contiguous ranges, one per prefix of `depth` cells."""
    depth = min(depth, g * n * n)
    return list(itertools.product(range(n), repeat=depth))
