import pytest
from hypothesis import given

from gamma_lab.algebra.ideals import is_ideal, is_left_duo, is_left_ideal, is_right_duo, is_right_ideal
from gamma_lab.algebra.regularity import (
    find_intra_regular_violation,
    find_intra_regular_weak_violation,
    find_left_regular_violation,
    find_left_regular_weak_violation,
    find_right_regular_weak_violation,
    flank,
    is_intra_regular,
    is_intra_regular_weak,
    is_left_regular,
    is_left_regular_weak,
    is_right_regular,
    is_right_regular_weak,
    subset_form_holds,
)
from gamma_lab.algebra.subsets import Subset
from gamma_lab.errors import InputError
from tests.strategies import structures


def test_intra_regular(LZ2, N2, S1):
    assert is_intra_regular(LZ2)
    assert not is_intra_regular(N2)
    assert is_intra_regular(S1)
    assert find_intra_regular_violation(N2) == (1, 0)
    assert find_intra_regular_weak_violation(N2) == 1
    assert is_intra_regular_weak(LZ2)
    assert not is_intra_regular_weak(N2)


def test_left_regular(RZ2, LZ2, N2, S1):
    assert is_left_regular(RZ2)
    assert is_left_regular(LZ2)
    assert not is_left_regular(N2)
    assert is_left_regular(S1)
    assert find_left_regular_violation(N2) == (1, 0)
    assert find_left_regular_weak_violation(N2) == 1
    assert find_right_regular_weak_violation(N2) == 1
    assert find_left_regular_weak_violation(RZ2) is None
    assert is_left_regular_weak(RZ2)
    assert not is_left_regular_weak(N2)


def test_right_regular(LZ2, RZ2, N2, S1):
    assert is_right_regular(LZ2)
    assert is_right_regular(RZ2)
    assert not is_right_regular(N2)
    assert is_right_regular(S1)
    assert is_right_regular_weak(RZ2)
    assert not is_right_regular_weak(N2)


def test_unknown_kind(S1):
    with pytest.raises(InputError):
        flank(S1, "middle", 1)


def test_strict_equals_weak_for_one_gamma(small_structures):
    for S in small_structures:
        if S.g != 1:
            continue
        assert is_intra_regular(S) == is_intra_regular_weak(S)
        assert is_left_regular(S) == is_left_regular_weak(S)
        assert is_right_regular(S) == is_right_regular_weak(S)


def test_subset_form_matches_weak(small_structures):
    for S in small_structures:
        assert subset_form_holds(S, "intra") == is_intra_regular_weak(S)
        assert subset_form_holds(S, "left") == is_left_regular_weak(S)
        assert subset_form_holds(S, "right") == is_right_regular_weak(S)


def test_one_sided_regular_implies_intra_regular(small_structures):
    for S in small_structures:
        if is_left_regular(S) or is_right_regular(S):
            assert is_intra_regular(S)


@pytest.mark.slow
def test_one_sided_regular_implies_intra_regular_three_elements(three_element_structures):
    for S in three_element_structures:
        if is_left_regular(S) or is_right_regular(S):
            assert is_intra_regular(S)


@given(structures())
def test_opposite_swaps_sides(S):
    T = S.opposite()
    assert is_left_regular(S) == is_right_regular(T)
    assert is_right_regular(S) == is_left_regular(T)
    assert is_left_duo(S) == is_right_duo(T)
    assert is_intra_regular(S) == is_intra_regular(T)
    assert is_left_regular_weak(S) == is_right_regular_weak(T)


@given(structures())
def test_flanked_squares_are_ideals(S):
    for x in range(S.n):
        for gamma in range(S.g):
            square = 1 << S.entry(x, gamma, x)
            assert is_ideal(S, Subset(S.n, flank(S, "intra", square)))
            assert is_left_ideal(S, Subset(S.n, flank(S, "left", square)))
            assert is_right_ideal(S, Subset(S.n, flank(S, "right", square)))


@given(structures())
def test_regular_elements_sit_in_their_own_flanks(S):
    for x in range(S.n):
        if is_intra_regular(S):
            assert flank(S, "intra", 1 << x) >> x & 1
        if is_left_regular(S):
            assert flank(S, "left", 1 << x) >> x & 1
        if is_right_regular(S):
            assert flank(S, "right", 1 << x) >> x & 1
