import pytest
from hypothesis import given
from hypothesis import strategies as st

from gamma_lab.algebra.filters import enumerate_filters
from gamma_lab.algebra.ideals import enumerate_ideals
from gamma_lab.algebra.structure import FiniteOrderedGammaSemigroup
from gamma_lab.algebra.subsets import (
    EXHAUSTIVE_MAX_N,
    Subset,
    all_subsets,
    down_closure,
    gamma_product,
    gamma_product_via,
    least_fixpoint,
    members,
    square_mask,
    up_closure,
)
from gamma_lab.errors import CapacityError, InputError
from tests.strategies import structures, subsets


def test_subset_rendering():
    assert str(Subset.of(3, [2, 0])) == "{0, 2}"
    assert str(Subset.empty(2)) == "{}"
    assert list(Subset.full(3)) == [0, 1, 2]
    assert len(Subset.of(4, [1, 3])) == 2


def test_subset_range():
    with pytest.raises(InputError):
        Subset.of(2, [2])
    with pytest.raises(InputError):
        Subset(2, 0b100)
    with pytest.raises(InputError):
        Subset.full(2) | Subset.full(3)


def test_members():
    assert members(0b1011) == [0, 1, 3]
    assert members(0) == []


def test_gamma_product(LZ2, RZ2, S1):
    A, B = Subset.of(2, [0, 1]), Subset.of(2, [1])
    assert gamma_product(LZ2, A, B) == Subset.of(2, [0, 1])
    assert gamma_product(RZ2, A, B) == Subset.of(2, [1])
    assert gamma_product(RZ2, Subset.empty(2), B) == Subset.empty(2)
    assert gamma_product(S1, Subset.full(1), Subset.empty(1)) == Subset.empty(1)


def test_gamma_product_via(LZ2):
    assert gamma_product_via(LZ2, Subset.of(2, [1]), 0, Subset.of(2, [0])) == Subset.of(2, [1])
    assert gamma_product_via(LZ2, Subset.empty(2), 0, Subset.full(2)) == Subset.empty(2)
    with pytest.raises(InputError):
        gamma_product_via(LZ2, Subset.full(2), 1, Subset.full(2))


def test_closures(N2, LZ2):
    assert down_closure(N2, Subset.of(2, [1])) == Subset.full(2)
    assert down_closure(N2, Subset.of(2, [0])) == Subset.of(2, [0])
    assert up_closure(N2, Subset.of(2, [0])) == Subset.full(2)
    assert down_closure(LZ2, Subset.full(2)) == Subset.full(2)


def test_ground_set_mismatch(LZ2):
    with pytest.raises(InputError):
        gamma_product(LZ2, Subset.full(3), Subset.full(2))
    with pytest.raises(InputError):
        down_closure(LZ2, Subset.of(1, [0]))


def test_least_fixpoint():
    # reachability along i -> i + 1 below 5
    step = lambda mask: (mask << 1) & 0b11111
    assert least_fixpoint(step, 0b1) == 0b11111
    assert least_fixpoint(step, 0) == 0


def test_all_subsets():
    assert [A.mask for A in all_subsets(2)] == [1, 2, 3]
    assert [A.mask for A in all_subsets(2, nonempty=False)] == [0, 1, 2, 3]


def _check_closure_identities(S):
    down = lambda A: down_closure(S, A)
    prod = lambda A, B: gamma_product(S, A, B)
    pairs = [(A, B) for A in all_subsets(S.n, nonempty=False) for B in all_subsets(S.n, nonempty=False)]
    for A, B in pairs:
        assert A.issubset(down(A))
        assert down(A) == down(down(A))
        if A.issubset(B):
            assert down(A).issubset(down(B))
        assert prod(down(A), down(B)).issubset(down(prod(A, B)))
        target = down(prod(A, B))
        assert down(prod(down(A), down(B))) == target
        assert down(prod(down(A), B)) == target
        assert down(prod(A, down(B))) == target
    # (A Gamma C] within (B Gamma D] whenever A within B and C within D
    for A, B in pairs:
        if not A.issubset(B):
            continue
        for C, D in pairs:
            if C.issubset(D):
                assert down(prod(A, C)).issubset(down(prod(B, D)))


def test_square_mask(RZ2, N2):
    assert [square_mask(RZ2, x, 0) for x in range(2)] == [0b01, 0b10]
    assert [square_mask(N2, x, 0) for x in range(2)] == [0b01, 0b01]


def test_exhaustive_bound_is_shared():
    n = EXHAUSTIVE_MAX_N + 1
    null = FiniteOrderedGammaSemigroup.from_tables([[[0] * n for _ in range(n)]])
    with pytest.raises(CapacityError, match=f"n={n} exceeds the exhaustive subset bound {EXHAUSTIVE_MAX_N}"):
        enumerate_ideals(null, "left")
    with pytest.raises(CapacityError, match=f"n={n} exceeds the exhaustive subset bound {EXHAUSTIVE_MAX_N}"):
        enumerate_filters(null)


def test_closure_identities_small(small_structures):
    for S in small_structures:
        _check_closure_identities(S)


@pytest.mark.slow
def test_closure_identities_three_elements(three_element_structures):
    for S in three_element_structures:
        _check_closure_identities(S)


@given(structures(), st.data())
def test_set_operations(S, data):
    A = data.draw(subsets(S.n))
    B = data.draw(subsets(S.n))
    assert (A | B).mask == A.mask | B.mask
    assert (A & B).issubset(A)
    assert set(A | B) == set(A) | set(B)
    assert down_closure(S, A | B) == down_closure(S, A) | down_closure(S, B)
    assert gamma_product(S, A | B, Subset.full(S.n)) == gamma_product(S, A, Subset.full(S.n)) | gamma_product(
        S, B, Subset.full(S.n)
    )
