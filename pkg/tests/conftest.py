from pathlib import Path

import pytest

from gamma_lab import FIXTURES, fixture
from gamma_lab.enumeration import EnumerationSpec, enumerate_structures

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "data" / "fixtures"


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return FIXTURE_DIR


@pytest.fixture(scope="session")
def fixtures():
    return {name: fixture(name) for name in FIXTURES}


@pytest.fixture
def S1():
    return fixture("S1")


@pytest.fixture
def LZ2():
    return fixture("LZ2")


@pytest.fixture
def RZ2():
    return fixture("RZ2")


@pytest.fixture
def N2():
    return fixture("N2")


@pytest.fixture(scope="session")
def small_structures():
    """Every valid structure with |M| <= 2, |Gamma| <= 2, all orders."""
    return list(enumerate_structures(EnumerationSpec(max_m=2, max_gamma=2)))


@pytest.fixture(scope="session")
def three_element_structures():
    """Every valid structure with |M| <= 3, |Gamma| = 1, all orders."""
    return list(enumerate_structures(EnumerationSpec(max_m=3, max_gamma=1)))
