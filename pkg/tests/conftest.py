import sys
from pathlib import Path

import pytest

from colorprob import ColoringProblem, Graph, Matroid, Poset, phi
from colorprob.serialize import load

FIXTURES = Path(__file__).parent / "fixtures"
sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def fixture_path():
    return lambda name: FIXTURES / name


@pytest.fixture
def k2():
    return Graph("ab", [("a", "b")])


@pytest.fixture
def phi_k2(k2):
    return phi(k2)


@pytest.fixture
def chain2():
    return Poset("ab", [("a", "b")])


@pytest.fixture
def u12():
    return Matroid("ab", [["a"], ["b"]])


@pytest.fixture
def four_element():
    return load(FIXTURES / "four_element.json")


def boolean_problem(labels):
    """The stable problem (2^N, Int(2^N))."""
    n = len(labels)
    fam = range(1 << n)
    return ColoringProblem(labels, fam, [(s, t) for t in fam for s in fam if s & ~t == 0])


@pytest.fixture
def stable2():
    return boolean_problem("ab")
