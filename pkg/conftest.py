"""
Shared fixtures for the test suite.
"""

import pytest

from chordal_toolkit.cliquegraph import build_clique_graph
from chordal_toolkit.generators import apex_path_join, fig2_graph, pendant_sun
from chordal_toolkit.graph import Graph

# catalog indices of fig2_graph()
K1, K4, K2, K3 = 0, 1, 2, 3


@pytest.fixture
def fig2():
    return fig2_graph()


@pytest.fixture
def fig2_cg(fig2):
    return build_clique_graph(fig2)


@pytest.fixture
def path3():
    """Path 1-2-3."""
    return Graph([1, 2, 3], [(1, 2), (2, 3)])


@pytest.fixture
def triangle():
    return Graph([1, 2, 3], [(1, 2), (2, 3), (1, 3)])


@pytest.fixture
def square():
    """Chordless 4-cycle 1-2-3-4-1."""
    return Graph([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (1, 4)])


@pytest.fixture
def sun3():
    return pendant_sun(3)


@pytest.fixture
def apex33():
    return apex_path_join(3, 3)
