from functools import lru_cache
from typing import List, Tuple

import numpy as np


def _order_mask(leq: np.ndarray) -> int:
    n = leq.shape[0]
    return sum(1 << (i * n + j) for i in range(n) for j in range(n) if i != j and leq[i, j])


@lru_cache(maxsize=None)
def posets(n: int) -> List[Tuple[int, np.ndarray]]:
    """All labeled partial orders on n elements as (order_mask, leq), sorted by order mask.

    Filters every reflexive relation for antisymmetry and transitivity.
    """
    off_diagonal = [(i, j) for i in range(n) for j in range(n) if i != j]
    found = []
    for bits in range(1 << len(off_diagonal)):
        leq = np.eye(n, dtype=bool)
        for k, (i, j) in enumerate(off_diagonal):
            if bits >> k & 1:
                leq[i, j] = True
        if np.any(np.triu(leq & leq.T, k=1)):
            continue
        if np.any(leq[:, :, None] & leq[None, :, :] & ~leq[:, None, :]):
            continue
        leq.flags.writeable = False
        found.append((_order_mask(leq), leq))
    return sorted(found, key=lambda item: item[0])


def discrete(n: int) -> List[Tuple[int, np.ndarray]]:
    return [posets(n)[0]]


def allowed_posets(n: int, order_mode: str) -> List[Tuple[int, np.ndarray]]:
    assert order_mode in ("discrete", "all"), f"Unknown order mode {order_mode}"
    return discrete(n) if order_mode == "discrete" else posets(n)
