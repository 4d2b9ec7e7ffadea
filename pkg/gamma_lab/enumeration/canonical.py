import itertools
from typing import Optional

import numpy as np

from gamma_lab.algebra.structure import Encoding, encode_arrays, relabel_arrays


def canonical_encoding(table: np.ndarray, leq: np.ndarray, own: Optional[Encoding] = None) -> Encoding:
    """Minimal encoding over all simultaneous relabelings of M and Gamma."""
    g, n, _ = table.shape
    best = own if own is not None else encode_arrays(table, leq)
    for sigma in itertools.permutations(range(n)):
        for tau in itertools.permutations(range(g)):
            code = encode_arrays(*relabel_arrays(table, leq, sigma, tau))
            if code < best:
                best = code
    return best


def is_canonical(table: np.ndarray, leq: np.ndarray) -> bool:
    own = encode_arrays(table, leq)
    return canonical_encoding(table, leq, own) == own
