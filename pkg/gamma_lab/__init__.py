from gamma_lab.algebra.structure import FiniteOrderedGammaSemigroup
from gamma_lab.errors import InputError

FIXTURES = [
    "S1",
    "LZ2",
    "RZ2",
    "N2",
]

# tag -> (tables indexed [gamma][a][b], non-reflexive order pairs)
FIXTURE_MAP = {
    "S1": ([[[0]]], []),
    "LZ2": ([[[0, 0], [1, 1]]], []),  # left-zero: a gamma b = a
    "RZ2": ([[[0, 1], [0, 1]]], []),  # right-zero: a gamma b = b
    "N2": ([[[0, 0], [0, 0]]], [(0, 1)]),  # ordered null: a gamma b = 0, 0 <= 1
}


def fixture(name: str) -> FiniteOrderedGammaSemigroup:
    """Returns one of the bundled structures by tag."""
    if name not in FIXTURE_MAP:
        raise InputError(f"Fixture {name} is not bundled. Fixtures: \n {FIXTURES}")
    tables, pairs = FIXTURE_MAP[name]
    return FiniteOrderedGammaSemigroup.from_tables(tables, pairs)
