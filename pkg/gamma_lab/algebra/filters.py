"""
Subsemigroups, filters and the principal filter N(x).
"""

from typing import List

from gamma_lab.algebra.structure import ElementId, FiniteOrderedGammaSemigroup
from gamma_lab.algebra.subsets import EXHAUSTIVE_MAX_N, Subset, check_ground, members, product_mask, up_mask
from gamma_lab.errors import CapacityError, InputError


def _is_subsemigroup_mask(S: FiniteOrderedGammaSemigroup, mask: int) -> bool:
    return mask != 0 and product_mask(S, mask, mask) & ~mask == 0


def _divisors_of(S: FiniteOrderedGammaSemigroup, mask: int) -> int:
    result = 0
    for c in members(mask):
        result |= S.divisor_masks[c]
    return result


def _is_filter_mask(S: FiniteOrderedGammaSemigroup, mask: int) -> bool:
    if not _is_subsemigroup_mask(S, mask):
        return False
    # divisors range over all of M: a gamma b in F forces a, b in F
    if _divisors_of(S, mask) & ~mask:
        return False
    return up_mask(S, mask) == mask


def is_subsemigroup(S: FiniteOrderedGammaSemigroup, A: Subset) -> bool:
    check_ground(S, A)
    return _is_subsemigroup_mask(S, A.mask)


def is_filter(S: FiniteOrderedGammaSemigroup, F: Subset) -> bool:
    """Subsemigroup, closed under divisors and up-closed."""
    check_ground(S, F)
    return _is_filter_mask(S, F.mask)


def principal_filter_mask(S: FiniteOrderedGammaSemigroup, x: ElementId) -> int:
    current = 1 << x
    while True:
        nxt = current | product_mask(S, current, current)
        nxt |= _divisors_of(S, nxt)
        nxt |= up_mask(S, nxt)
        if nxt == current:
            return current
        current = nxt


def principal_filter(S: FiniteOrderedGammaSemigroup, x: ElementId) -> Subset:
    """N(x), the least filter containing x.

    Each round applies subsemigroup closure, then divisor closure, then up-closure, until nothing is added.
    """
    if not 0 <= x < S.n:
        raise InputError(f"element {x} out of range for n={S.n}")
    return Subset(S.n, principal_filter_mask(S, x))


def enumerate_filters(S: FiniteOrderedGammaSemigroup) -> List[Subset]:
    """All filters in canonical mask order; M is always among them."""
    if S.n > EXHAUSTIVE_MAX_N:
        raise CapacityError(f"n={S.n} exceeds the exhaustive subset bound {EXHAUSTIVE_MAX_N}")
    return [Subset(S.n, mask) for mask in range(1, 1 << S.n) if _is_filter_mask(S, mask)]


def principal_filter_oracle(S: FiniteOrderedGammaSemigroup, x: ElementId) -> Subset:
    """Intersection of every filter containing x, by exhaustive enumeration."""
    if not 0 <= x < S.n:
        raise InputError(f"element {x} out of range for n={S.n}")
    result = S.full_mask
    for F in enumerate_filters(S):
        if F.mask >> x & 1:
            result &= F.mask
    return Subset(S.n, result)
