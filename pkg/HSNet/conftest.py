"""
Global pytest fixtures for the HSNet test suite.

Provides reusable graphs, utility specifications and the small-n graph
catalogue used by property tests.
"""
from fractions import Fraction

import pytest

from graph_core.graphs import Graph
from payoff_engine.utilities import builtin_utilities


# ============================
# PYTEST CONFIGURATION
# ============================

@pytest.fixture(autouse=True)
def enable_db_access_for_all_tests(db):
    """
    Automatically enable database access for all tests.
    """
    pass


# ============================
# GRAPH FIXTURES
# ============================

def make_cycle(k):
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def make_path(k):
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


@pytest.fixture
def cycle4():
    """
    Square 0-1-2-3-0.
    """
    return make_cycle(4)


@pytest.fixture
def path4():
    """
    Path 0-1-2-3.
    """
    return make_path(4)


@pytest.fixture
def maximal_cp8():
    """
    Four-cycle core 0..3 with periphery node 4+i attached to core node i.
    """
    edges = [(0, 1), (1, 2), (2, 3), (0, 3)] + [(i, 4 + i) for i in range(4)]
    return Graph.from_edges(8, edges)


@pytest.fixture(scope="session")
def all_graphs_up_to_6():
    """
    Every graph on 1..6 nodes up to isomorphism (208 graphs).
    """
    from oracle.enumeration import enumerate_graphs

    return [g for n in range(1, 7) for g in enumerate_graphs(n)]


# ============================
# UTILITY FIXTURES
# ============================

@pytest.fixture
def identity_u():
    """
    f(x) = x with beta = 0; use .with_beta for other penalties.
    """
    return builtin_utilities("identity")


@pytest.fixture
def square_u():
    """
    f(x) = x^2 with beta = 0.
    """
    return builtin_utilities("square")


@pytest.fixture
def ratio_square_u():
    """
    f(x) = x^2 / (x + 1) with beta = 0.
    """
    return builtin_utilities("ratio_power", {"gamma": 2})


@pytest.fixture
def beta_grid():
    """
    Capture penalties used across the value grids.
    """
    return [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(5), Fraction(50)]


# ============================
# CLI FIXTURES
# ============================

@pytest.fixture
def write_graph(tmp_path):
    """
    Factory writing graph text to a temporary file and returning its path.
    """
    def _write(text, name="graph.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write
