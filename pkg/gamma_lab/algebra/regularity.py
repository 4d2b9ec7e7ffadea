"""
Intra-, left- and right-regularity.

The strict forms fix gamma at the squaring position, x in (M Gamma x gamma x Gamma M], and hold for every gamma.
The weak forms square with the whole of Gamma, a in (M Gamma a Gamma a Gamma M]. At g = 1 both coincide.
"""

from typing import Optional, Tuple

from gamma_lab.algebra.structure import FiniteOrderedGammaSemigroup
from gamma_lab.algebra.subsets import down_mask, product_mask, square_mask
from gamma_lab.errors import InputError

KINDS = ("intra", "left", "right")


def flank(S: FiniteOrderedGammaSemigroup, kind: str, mask: int) -> int:
    """(M Gamma X Gamma M], (M Gamma X] or (X Gamma M]."""
    full = S.full_mask
    if kind == "intra":
        return down_mask(S, product_mask(S, product_mask(S, full, mask), full))
    if kind == "left":
        return down_mask(S, product_mask(S, full, mask))
    if kind == "right":
        return down_mask(S, product_mask(S, mask, full))
    raise InputError(f"Unknown regularity kind {kind}; expected one of {KINDS}")


def _strict_violation(S: FiniteOrderedGammaSemigroup, kind: str) -> Optional[Tuple[int, int]]:
    for x in range(S.n):
        for gamma in range(S.g):
            if not flank(S, kind, square_mask(S, x, gamma)) >> x & 1:
                return (x, gamma)
    return None


def _weak_violation(S: FiniteOrderedGammaSemigroup, kind: str) -> Optional[int]:
    for x in range(S.n):
        square = product_mask(S, 1 << x, 1 << x)
        if not flank(S, kind, square) >> x & 1:
            return x
    return None


def find_intra_regular_violation(S: FiniteOrderedGammaSemigroup) -> Optional[Tuple[int, int]]:
    """First (x, gamma) with x outside (M Gamma x gamma x Gamma M]."""
    return _strict_violation(S, "intra")


def find_left_regular_violation(S: FiniteOrderedGammaSemigroup) -> Optional[Tuple[int, int]]:
    return _strict_violation(S, "left")


def find_right_regular_violation(S: FiniteOrderedGammaSemigroup) -> Optional[Tuple[int, int]]:
    return _strict_violation(S, "right")


def find_intra_regular_weak_violation(S: FiniteOrderedGammaSemigroup) -> Optional[int]:
    """First x outside (M Gamma x Gamma x Gamma M]."""
    return _weak_violation(S, "intra")


def find_left_regular_weak_violation(S: FiniteOrderedGammaSemigroup) -> Optional[int]:
    return _weak_violation(S, "left")


def find_right_regular_weak_violation(S: FiniteOrderedGammaSemigroup) -> Optional[int]:
    return _weak_violation(S, "right")


def is_intra_regular(S: FiniteOrderedGammaSemigroup) -> bool:
    return _strict_violation(S, "intra") is None


def is_left_regular(S: FiniteOrderedGammaSemigroup) -> bool:
    return _strict_violation(S, "left") is None


def is_right_regular(S: FiniteOrderedGammaSemigroup) -> bool:
    return _strict_violation(S, "right") is None


def is_intra_regular_weak(S: FiniteOrderedGammaSemigroup) -> bool:
    return _weak_violation(S, "intra") is None


def is_left_regular_weak(S: FiniteOrderedGammaSemigroup) -> bool:
    return _weak_violation(S, "left") is None


def is_right_regular_weak(S: FiniteOrderedGammaSemigroup) -> bool:
    return _weak_violation(S, "right") is None


def subset_form_holds(S: FiniteOrderedGammaSemigroup, kind: str) -> bool:
    """A within (M Gamma A Gamma A Gamma M] (resp. (M Gamma A Gamma A], (A Gamma A Gamma M]) for every nonempty A."""
    for mask in range(1, 1 << S.n):
        if mask & ~flank(S, kind, product_mask(S, mask, mask)):
            return False
    return True
