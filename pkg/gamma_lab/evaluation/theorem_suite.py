"""
Run each characterization theorem as a biconditional on one finite structure.

Since the theorems are proved, a report with holds=False on a valid structure means a bug in the predicates.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from gamma_lab.algebra import filters, ideals, regularity
from gamma_lab.algebra.structure import FiniteOrderedGammaSemigroup
from gamma_lab.algebra.subsets import Subset, square_mask

THEOREM_TAGS = ("T2", "T3", "P5", "T6", "T7", "T8-left", "T8-right")
DEFAULT_ORACLE_MAX_N = 3


@dataclass(frozen=True)
class Witness:
    side: str
    items: Tuple[Tuple[str, object], ...]

    def __str__(self) -> str:
        return f"{self.side}: " + " ".join(f"{k}={v}" for k, v in self.items)


@dataclass(frozen=True)
class TheoremReport:
    tag: str
    lhs: bool
    rhs: bool
    holds: bool
    witnesses: Tuple[Witness, ...] = ()
    # exhaustive recomputation of the right side, when it was run
    rhs_oracle: Optional[bool] = None


def _report(
    tag: str,
    lhs: bool,
    rhs: bool,
    witnesses: List[Witness],
    implication: bool = False,
    rhs_oracle: Optional[bool] = None,
) -> TheoremReport:
    holds = (not lhs or rhs) if implication else lhs == rhs
    if rhs_oracle is not None and rhs_oracle != rhs:
        holds = False
        witnesses.append(Witness("oracle", (("fast", rhs), ("exhaustive", rhs_oracle))))
    return TheoremReport(tag=tag, lhs=lhs, rhs=rhs, holds=holds, witnesses=tuple(witnesses), rhs_oracle=rhs_oracle)


def _xg(side: str, violation: Tuple[int, int]) -> Witness:
    x, gamma = violation
    return Witness(side, (("x", x), ("gamma", gamma)))


def _filter_formula_mismatch(S: FiniteOrderedGammaSemigroup, kind: str) -> Optional[Witness]:
    """First x where N(x) differs from {y : x in (M Gamma y Gamma M]} (resp. (M Gamma y], (y Gamma M])."""
    for x in range(S.n):
        n_x = filters.principal_filter_mask(S, x)
        formula = 0
        for y in range(S.n):
            if regularity.flank(S, kind, 1 << y) >> x & 1:
                formula |= 1 << y
        if n_x != formula:
            return Witness("rhs", (("x", x), ("N(x)", Subset(S.n, n_x)), ("formula", Subset(S.n, formula))))
    return None


def _semiprime_fast_violation(S: FiniteOrderedGammaSemigroup, generate) -> Optional[Witness]:
    """First (x, gamma) with x outside the ideal generated by x gamma x."""
    for x in range(S.n):
        for gamma in range(S.g):
            generated = generate(S, square_mask(S, x, gamma))
            if not generated >> x & 1:
                return Witness("rhs", (("x", x), ("gamma", gamma), ("ideal", Subset(S.n, generated))))
    return None


def _semiprime_oracle(S: FiniteOrderedGammaSemigroup, kind: str) -> bool:
    return all(ideals.is_semiprime(S, A) for A in ideals.enumerate_ideals(S, kind))


def check_theorem2(S: FiniteOrderedGammaSemigroup) -> TheoremReport:
    """Intra-regular iff N(x) = {y : x in (M Gamma y Gamma M]} for every x."""
    witnesses = []
    violation = regularity.find_intra_regular_violation(S)
    if violation is not None:
        witnesses.append(_xg("lhs", violation))
    mismatch = _filter_formula_mismatch(S, "intra")
    if mismatch is not None:
        witnesses.append(mismatch)
    return _report("T2", violation is None, mismatch is None, witnesses)


def check_theorem3(S: FiniteOrderedGammaSemigroup, oracle_max_n: int = DEFAULT_ORACLE_MAX_N) -> TheoremReport:
    """Intra-regular iff every two-sided ideal is semiprime."""
    witnesses = []
    violation = regularity.find_intra_regular_violation(S)
    if violation is not None:
        witnesses.append(_xg("lhs", violation))
    fast = _semiprime_fast_violation(S, ideals.generated_ideal_mask)
    if fast is not None:
        witnesses.append(fast)
    oracle = _semiprime_oracle(S, "two-sided") if S.n <= oracle_max_n else None
    return _report("T3", violation is None, fast is None, witnesses, rhs_oracle=oracle)


def check_proposition5(S: FiniteOrderedGammaSemigroup) -> TheoremReport:
    """Left regular or right regular implies intra-regular."""
    witnesses = []
    left = regularity.find_left_regular_violation(S)
    right = regularity.find_right_regular_violation(S)
    lhs = left is None or right is None
    if not lhs:
        witnesses.extend([_xg("lhs-left", left), _xg("lhs-right", right)])
    intra = regularity.find_intra_regular_violation(S)
    if intra is not None:
        witnesses.append(_xg("rhs", intra))
    return _report("P5", lhs, intra is None, witnesses, implication=True)


def _check_one_sided_filter(S: FiniteOrderedGammaSemigroup, side: str, tag: str) -> TheoremReport:
    witnesses = []
    if side == "left":
        violation = regularity.find_left_regular_violation(S)
    else:
        violation = regularity.find_right_regular_violation(S)
    if violation is not None:
        witnesses.append(_xg("lhs", violation))
    duo = ideals.find_duo_violation(S, side)
    if duo is not None:
        witnesses.append(Witness("lhs", (("ideal", duo),)))
    mismatch = _filter_formula_mismatch(S, side)
    if mismatch is not None:
        witnesses.append(mismatch)
    return _report(tag, violation is None and duo is None, mismatch is None, witnesses)


def check_theorem6(S: FiniteOrderedGammaSemigroup) -> TheoremReport:
    """Left regular and left duo iff N(x) = {y : x in (M Gamma y]} for every x."""
    return _check_one_sided_filter(S, "left", "T6")


def check_theorem7(S: FiniteOrderedGammaSemigroup) -> TheoremReport:
    """Right regular and right duo iff N(x) = {y : x in (y Gamma M]} for every x."""
    return _check_one_sided_filter(S, "right", "T7")


def check_theorem8(
    S: FiniteOrderedGammaSemigroup, side: str = "left", oracle_max_n: int = DEFAULT_ORACLE_MAX_N
) -> TheoremReport:
    """Left (right) regular iff every left (right) ideal is semiprime."""
    assert side in ("left", "right"), f"side must be 'left' or 'right', got {side}"
    witnesses = []
    if side == "left":
        violation = regularity.find_left_regular_violation(S)
        fast = _semiprime_fast_violation(S, ideals.generated_left_ideal_mask)
    else:
        violation = regularity.find_right_regular_violation(S)
        fast = _semiprime_fast_violation(S, ideals.generated_right_ideal_mask)
    if violation is not None:
        witnesses.append(_xg("lhs", violation))
    if fast is not None:
        witnesses.append(fast)
    oracle = _semiprime_oracle(S, side) if S.n <= oracle_max_n else None
    return _report(f"T8-{side}", violation is None, fast is None, witnesses, rhs_oracle=oracle)


def check_all(S: FiniteOrderedGammaSemigroup, oracle_max_n: int = DEFAULT_ORACLE_MAX_N) -> List[TheoremReport]:
    return [
        check_theorem2(S),
        check_theorem3(S, oracle_max_n),
        check_proposition5(S),
        check_theorem6(S),
        check_theorem7(S),
        check_theorem8(S, "left", oracle_max_n),
        check_theorem8(S, "right", oracle_max_n),
    ]


def filter_oracle_mismatch(S: FiniteOrderedGammaSemigroup) -> Optional[int]:
    """First x where the fixpoint N(x) differs from the intersection of all filters containing x."""
    for x in range(S.n):
        if filters.principal_filter(S, x) != filters.principal_filter_oracle(S, x):
            return x
    return None
