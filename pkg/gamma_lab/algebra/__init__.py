from gamma_lab.algebra.ideals import is_left_duo, is_right_duo
from gamma_lab.algebra.regularity import (
    is_intra_regular,
    is_intra_regular_weak,
    is_left_regular,
    is_left_regular_weak,
    is_right_regular,
    is_right_regular_weak,
)
from gamma_lab.algebra.structure import Candidate, FiniteOrderedGammaSemigroup, ValidationReport, validate
from gamma_lab.algebra.subsets import Subset

# named structure-level predicates, in the fixed order reports use
PREDICATES = {
    "intraRegular": is_intra_regular,
    "intraRegularWeak": is_intra_regular_weak,
    "leftRegular": is_left_regular,
    "rightRegular": is_right_regular,
    "leftRegularWeak": is_left_regular_weak,
    "rightRegularWeak": is_right_regular_weak,
    "leftDuo": is_left_duo,
    "rightDuo": is_right_duo,
}
