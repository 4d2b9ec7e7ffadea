"""
Subsets of M as bitmasks, the Gamma-product A Gamma B and the down-closure (H].
"""

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, List

from gamma_lab.algebra.structure import ElementId, FiniteOrderedGammaSemigroup, GammaId
from gamma_lab.errors import InputError


@dataclass(frozen=True, order=True)
class Subset:
    """A subset of {0, ..., n-1}; bit i of `mask` is set iff i is a member.

    Ordering is the canonical mask order (by n, then by the integer value of the mask).
    """

    n: int
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise InputError(f"mask {self.mask:#b} does not fit a ground set of size {self.n}")

    @classmethod
    def of(cls, n: int, elements: Iterable[int] = ()) -> "Subset":
        mask = 0
        for x in elements:
            if not 0 <= x < n:
                raise InputError(f"element {x} out of range for n={n}")
            mask |= 1 << x
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "Subset":
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n: int) -> "Subset":
        return cls(n, 0)

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.n and bool(self.mask >> x & 1)

    def __iter__(self) -> Iterator[int]:
        return (i for i in range(self.n) if self.mask >> i & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def _same_ground(self, other: "Subset") -> None:
        if self.n != other.n:
            raise InputError(f"ground sets differ: {self.n} vs {other.n}")

    def __or__(self, other: "Subset") -> "Subset":
        self._same_ground(other)
        return Subset(self.n, self.mask | other.mask)

    def __and__(self, other: "Subset") -> "Subset":
        self._same_ground(other)
        return Subset(self.n, self.mask & other.mask)

    def issubset(self, other: "Subset") -> bool:
        self._same_ground(other)
        return self.mask & ~other.mask == 0

    def __str__(self) -> str:
        return "{" + ", ".join(str(i) for i in self) + "}"


def check_ground(S: FiniteOrderedGammaSemigroup, *subsets: Subset) -> None:
    for A in subsets:
        if A.n != S.n:
            raise InputError(f"subset over {A.n} elements used with a structure on {S.n}")


def members(mask: int) -> List[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


# mask-level kernels; the Subset-level operations below wrap them
def product_mask(S: FiniteOrderedGammaSemigroup, a_mask: int, b_mask: int) -> int:
    result = 0
    bs = members(b_mask)
    for rows in S.cells:
        for a in members(a_mask):
            row = rows[a]
            for b in bs:
                result |= 1 << row[b]
    return result


def product_via_mask(S: FiniteOrderedGammaSemigroup, a_mask: int, gamma: GammaId, b_mask: int) -> int:
    result = 0
    rows = S.cells[gamma]
    bs = members(b_mask)
    for a in members(a_mask):
        for b in bs:
            result |= 1 << rows[a][b]
    return result


def down_mask(S: FiniteOrderedGammaSemigroup, h_mask: int) -> int:
    result = 0
    for a in members(h_mask):
        result |= S.down_masks[a]
    return result


def up_mask(S: FiniteOrderedGammaSemigroup, h_mask: int) -> int:
    result = 0
    for a in members(h_mask):
        result |= S.up_masks[a]
    return result


def square_mask(S: FiniteOrderedGammaSemigroup, x: ElementId, gamma: GammaId) -> int:
    return 1 << S.cells[gamma][x][x]


def gamma_product(S: FiniteOrderedGammaSemigroup, A: Subset, B: Subset) -> Subset:
    """A Gamma B = {a gamma b : a in A, gamma in Gamma, b in B}."""
    check_ground(S, A, B)
    return Subset(S.n, product_mask(S, A.mask, B.mask))


def gamma_product_via(S: FiniteOrderedGammaSemigroup, A: Subset, gamma: GammaId, B: Subset) -> Subset:
    """A gamma B for a single gamma."""
    check_ground(S, A, B)
    if not 0 <= gamma < S.g:
        raise InputError(f"gamma {gamma} out of range for g={S.g}")
    return Subset(S.n, product_via_mask(S, A.mask, gamma, B.mask))


def down_closure(S: FiniteOrderedGammaSemigroup, H: Subset) -> Subset:
    """(H] = {t in M : t <= a for some a in H}."""
    check_ground(S, H)
    return Subset(S.n, down_mask(S, H.mask))


def up_closure(S: FiniteOrderedGammaSemigroup, H: Subset) -> Subset:
    check_ground(S, H)
    return Subset(S.n, up_mask(S, H.mask))


def least_fixpoint(step: Callable[[int], int], start: int) -> int:
    """Iterate an inflationary, monotone step on masks until it stops growing."""
    current = start
    while True:
        nxt = step(current) | current
        if nxt == current:
            return current
        current = nxt


EXHAUSTIVE_MAX_N = 16  # largest n for which ideals and filters are enumerated over all 2^n subsets


def all_subsets(n: int, nonempty: bool = True) -> Iterator[Subset]:
    """Every subset of {0, ..., n-1} in canonical mask order."""
    for mask in range(1 if nonempty else 0, 1 << n):
        yield Subset(n, mask)
