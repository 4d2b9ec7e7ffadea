import pytest
from hypothesis import given
from hypothesis import strategies as st

from gamma_lab.algebra.ideals import (
    enumerate_ideals,
    find_duo_violation,
    find_semiprime_violation,
    generated_ideal,
    generated_left_ideal,
    generated_right_ideal,
    is_duo_oracle,
    is_ideal,
    is_left_duo,
    is_left_ideal,
    is_right_duo,
    is_right_ideal,
    is_semiprime,
)
from gamma_lab.algebra.subsets import Subset, all_subsets
from gamma_lab.errors import InputError
from tests.strategies import elements, structures


def test_left_ideals(RZ2, N2):
    assert is_left_ideal(RZ2, Subset.of(2, [0]))
    assert not is_left_ideal(N2, Subset.of(2, [1]))
    assert is_left_ideal(N2, Subset.full(2))


def test_right_ideals(LZ2, N2):
    assert is_right_ideal(LZ2, Subset.of(2, [0]))
    assert not is_right_ideal(N2, Subset.of(2, [1]))
    assert is_right_ideal(LZ2, Subset.full(2))


def test_two_sided_ideals(N2, RZ2, S1):
    assert is_ideal(N2, Subset.of(2, [0]))
    assert not is_ideal(RZ2, Subset.of(2, [0]))
    assert is_ideal(S1, Subset.full(1))


def test_empty_set_is_not_an_ideal(LZ2):
    assert not is_left_ideal(LZ2, Subset.empty(2))
    assert not is_right_ideal(LZ2, Subset.empty(2))
    assert not is_ideal(LZ2, Subset.empty(2))


def test_semiprime(N2, LZ2):
    assert not is_semiprime(N2, Subset.of(2, [0]))
    assert find_semiprime_violation(N2, Subset.of(2, [0])) == (1, 0)
    assert is_semiprime(LZ2, Subset.of(2, [0]))
    assert is_semiprime(N2, Subset.full(2))


def test_generated_left_ideal(RZ2, LZ2, S1):
    assert generated_left_ideal(RZ2, 0) == Subset.of(2, [0])
    assert generated_left_ideal(LZ2, 0) == Subset.full(2)
    assert generated_left_ideal(S1, 0) == Subset.full(1)


def test_generated_right_ideal(RZ2, LZ2, S1):
    assert generated_right_ideal(LZ2, 0) == Subset.of(2, [0])
    assert generated_right_ideal(RZ2, 0) == Subset.full(2)
    assert generated_right_ideal(S1, 0) == Subset.full(1)


def test_generated_ideal(N2, S1):
    assert generated_ideal(N2, 0) == Subset.of(2, [0])
    assert generated_ideal(N2, 1) == Subset.full(2)
    assert generated_ideal(S1, 0) == Subset.full(1)
    with pytest.raises(InputError):
        generated_ideal(N2, 2)


def test_enumerate_ideals(N2, RZ2, S1):
    assert enumerate_ideals(N2, "two-sided") == [Subset.of(2, [0]), Subset.full(2)]
    assert enumerate_ideals(RZ2, "left") == list(all_subsets(2))
    assert enumerate_ideals(S1) == [Subset.full(1)]
    with pytest.raises(InputError):
        enumerate_ideals(S1, "middle")


def test_duo(LZ2, RZ2, S1):
    assert is_left_duo(LZ2)
    assert not is_left_duo(RZ2)
    assert find_duo_violation(RZ2, "left") == Subset.of(2, [0])
    assert is_right_duo(RZ2)
    assert not is_right_duo(LZ2)
    assert is_left_duo(S1) and is_right_duo(S1)
    with pytest.raises(InputError):
        find_duo_violation(S1, "up")


def test_duo_matches_oracle(small_structures):
    for S in small_structures:
        assert is_left_duo(S) == is_duo_oracle(S, "left")
        assert is_right_duo(S) == is_duo_oracle(S, "right")


@given(structures(), st.data())
def test_generated_ideals_are_least(S, data):
    a = data.draw(elements(S.n))
    cases = [
        (generated_left_ideal(S, a), enumerate_ideals(S, "left")),
        (generated_right_ideal(S, a), enumerate_ideals(S, "right")),
        (generated_ideal(S, a), enumerate_ideals(S, "two-sided")),
    ]
    for generated, found in cases:
        assert a in generated
        assert generated in found
        for A in found:
            if a in A:
                assert generated.issubset(A)


@given(structures())
def test_whole_set_is_always_an_ideal(S):
    assert is_ideal(S, Subset.full(S.n))
    assert is_semiprime(S, Subset.full(S.n))
