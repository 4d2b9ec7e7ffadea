import pytest
from hypothesis import given
from hypothesis import strategies as st

from gamma_lab.algebra.filters import (
    enumerate_filters,
    is_filter,
    is_subsemigroup,
    principal_filter,
    principal_filter_oracle,
)
from gamma_lab.algebra.subsets import Subset
from gamma_lab.errors import InputError
from tests.strategies import elements, structures


def test_subsemigroups(LZ2, N2):
    assert is_subsemigroup(LZ2, Subset.of(2, [0]))
    assert not is_subsemigroup(N2, Subset.of(2, [1]))
    assert is_subsemigroup(N2, Subset.full(2))
    assert not is_subsemigroup(N2, Subset.empty(2))


def test_filters(LZ2, N2):
    assert not is_filter(LZ2, Subset.of(2, [0]))
    assert is_filter(LZ2, Subset.full(2))
    assert not is_filter(N2, Subset.of(2, [1]))
    assert not is_filter(N2, Subset.empty(2))


def test_principal_filter(LZ2, RZ2, S1, N2):
    assert principal_filter(LZ2, 0) == Subset.full(2)
    assert principal_filter(RZ2, 0) == Subset.full(2)
    assert principal_filter(S1, 0) == Subset.full(1)
    assert principal_filter(N2, 1) == Subset.full(2)
    with pytest.raises(InputError):
        principal_filter(N2, 2)


def test_principal_filter_oracle(fixtures):
    for S in fixtures.values():
        for x in range(S.n):
            assert principal_filter(S, x) == principal_filter_oracle(S, x)
    assert principal_filter_oracle(fixtures["N2"], 1) == Subset.full(2)


def test_enumerate_filters(LZ2, RZ2, S1):
    assert enumerate_filters(LZ2) == [Subset.full(2)]
    assert enumerate_filters(RZ2) == [Subset.full(2)]
    assert enumerate_filters(S1) == [Subset.full(1)]


def test_principal_filter_matches_oracle(small_structures):
    for S in small_structures:
        for x in range(S.n):
            assert principal_filter(S, x) == principal_filter_oracle(S, x)


@pytest.mark.slow
def test_principal_filter_matches_oracle_three_elements(three_element_structures):
    for S in three_element_structures:
        for x in range(S.n):
            assert principal_filter(S, x) == principal_filter_oracle(S, x)


@given(structures(), st.data())
def test_principal_filter_is_a_filter(S, data):
    x = data.draw(elements(S.n))
    N = principal_filter(S, x)
    assert x in N
    assert is_filter(S, N)
    assert Subset.full(S.n) in enumerate_filters(S)
