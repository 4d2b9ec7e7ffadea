"""
Left, right and two-sided ideals, generated ideals, semiprime subsets and the duo properties.
"""

from typing import List, Optional, Tuple

from gamma_lab.algebra.structure import ElementId, FiniteOrderedGammaSemigroup
from gamma_lab.algebra.subsets import EXHAUSTIVE_MAX_N, Subset, check_ground, down_mask, least_fixpoint, product_mask
from gamma_lab.errors import CapacityError, InputError

KINDS = ("left", "right", "two-sided")


def _is_down_closed(S: FiniteOrderedGammaSemigroup, mask: int) -> bool:
    return down_mask(S, mask) == mask


def _is_left_ideal_mask(S: FiniteOrderedGammaSemigroup, mask: int) -> bool:
    if mask == 0:
        return False
    return product_mask(S, S.full_mask, mask) & ~mask == 0 and _is_down_closed(S, mask)


def _is_right_ideal_mask(S: FiniteOrderedGammaSemigroup, mask: int) -> bool:
    if mask == 0:
        return False
    return product_mask(S, mask, S.full_mask) & ~mask == 0 and _is_down_closed(S, mask)


def _predicate(kind: str):
    if kind == "left":
        return _is_left_ideal_mask
    if kind == "right":
        return _is_right_ideal_mask
    if kind == "two-sided":
        return lambda S, mask: _is_left_ideal_mask(S, mask) and _is_right_ideal_mask(S, mask)
    raise InputError(f"Unknown ideal kind {kind}; expected one of {KINDS}")


def is_left_ideal(S: FiniteOrderedGammaSemigroup, A: Subset) -> bool:
    """M Gamma A within A and A down-closed; the empty set is never an ideal."""
    check_ground(S, A)
    return _is_left_ideal_mask(S, A.mask)


def is_right_ideal(S: FiniteOrderedGammaSemigroup, A: Subset) -> bool:
    check_ground(S, A)
    return _is_right_ideal_mask(S, A.mask)


def is_ideal(S: FiniteOrderedGammaSemigroup, A: Subset) -> bool:
    check_ground(S, A)
    return _is_left_ideal_mask(S, A.mask) and _is_right_ideal_mask(S, A.mask)


def find_semiprime_violation(S: FiniteOrderedGammaSemigroup, T: Subset) -> Optional[Tuple[int, int]]:
    """First (x, gamma) with x gamma x in T but x outside T."""
    check_ground(S, T)
    for x in range(S.n):
        if T.mask >> x & 1:
            continue
        for gamma in range(S.g):
            if T.mask >> S.cells[gamma][x][x] & 1:
                return (x, gamma)
    return None


def is_semiprime(S: FiniteOrderedGammaSemigroup, T: Subset) -> bool:
    return find_semiprime_violation(S, T) is None


def _check_element(S: FiniteOrderedGammaSemigroup, a: ElementId) -> None:
    if not 0 <= a < S.n:
        raise InputError(f"element {a} out of range for n={S.n}")


# each round absorbs products first, then takes the down-closure
def generated_left_ideal_mask(S: FiniteOrderedGammaSemigroup, start: int) -> int:
    return least_fixpoint(lambda X: down_mask(S, X | product_mask(S, S.full_mask, X)), start)


def generated_right_ideal_mask(S: FiniteOrderedGammaSemigroup, start: int) -> int:
    return least_fixpoint(lambda X: down_mask(S, X | product_mask(S, X, S.full_mask)), start)


def generated_ideal_mask(S: FiniteOrderedGammaSemigroup, start: int) -> int:
    full = S.full_mask
    return least_fixpoint(lambda X: down_mask(S, X | product_mask(S, full, X) | product_mask(S, X, full)), start)


def generated_left_ideal(S: FiniteOrderedGammaSemigroup, a: ElementId) -> Subset:
    """Least left ideal containing a."""
    _check_element(S, a)
    return Subset(S.n, generated_left_ideal_mask(S, 1 << a))


def generated_right_ideal(S: FiniteOrderedGammaSemigroup, a: ElementId) -> Subset:
    _check_element(S, a)
    return Subset(S.n, generated_right_ideal_mask(S, 1 << a))


def generated_ideal(S: FiniteOrderedGammaSemigroup, a: ElementId) -> Subset:
    _check_element(S, a)
    return Subset(S.n, generated_ideal_mask(S, 1 << a))


def enumerate_ideals(S: FiniteOrderedGammaSemigroup, kind: str = "two-sided") -> List[Subset]:
    """All nonempty ideals of the given kind, in canonical mask order."""
    predicate = _predicate(kind)
    if S.n > EXHAUSTIVE_MAX_N:
        raise CapacityError(f"n={S.n} exceeds the exhaustive subset bound {EXHAUSTIVE_MAX_N}")
    return [Subset(S.n, mask) for mask in range(1, 1 << S.n) if predicate(S, mask)]


def find_duo_violation(S: FiniteOrderedGammaSemigroup, side: str = "left") -> Optional[Subset]:
    """First generated one-sided ideal that is not two-sided, or None.

    A left ideal is the union of the left ideals generated by its members, so checking the
    generated ones decides the property for all of them.
    """
    if side == "left":
        generate, other = generated_left_ideal_mask, _is_right_ideal_mask
    elif side == "right":
        generate, other = generated_right_ideal_mask, _is_left_ideal_mask
    else:
        raise InputError(f"side must be 'left' or 'right', got {side}")
    for a in range(S.n):
        mask = generate(S, 1 << a)
        if not other(S, mask):
            return Subset(S.n, mask)
    return None


def is_left_duo(S: FiniteOrderedGammaSemigroup) -> bool:
    return find_duo_violation(S, "left") is None


def is_right_duo(S: FiniteOrderedGammaSemigroup) -> bool:
    return find_duo_violation(S, "right") is None


def is_duo_oracle(S: FiniteOrderedGammaSemigroup, side: str = "left") -> bool:
    """Exhaustive form: every enumerated left (right) ideal is two-sided."""
    other = _is_right_ideal_mask if side == "left" else _is_left_ideal_mask
    return all(other(S, A.mask) for A in enumerate_ideals(S, side))
