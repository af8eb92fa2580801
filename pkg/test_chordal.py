"""
Chordality recognition and maximal cliques.
"""

import networkx as nx
import pytest

from chordal_toolkit.chordal import (
    EliminationOrder,
    is_chordal,
    is_peo,
    maximal_cliques,
    mcs_order,
    simplicial_vertices,
)
from chordal_toolkit.errors import InvalidArgumentError, NotChordalError
from chordal_toolkit.generators import complete_graph, random_chordal, RandomModel
from chordal_toolkit.graph import Graph, VertexSet
from chordal_toolkit.oracles import brute_force_maximal_cliques

FIG2_CATALOG = [[1, 2, 3], [2, 3, 4, 5, 8, 9], [2, 3, 4, 6, 8, 9], [2, 3, 5, 7, 8, 9]]


class TestOrders:
    def test_single_vertex(self):
        assert mcs_order(Graph([1])).order == [1]

    def test_triangle_tie_break(self, triangle):
        assert mcs_order(triangle).order == [1, 2, 3]

    def test_square_reverse_is_not_peo(self, square):
        assert not is_peo(square, mcs_order(square).reversed().order)

    def test_is_peo_requires_permutation(self, path3):
        with pytest.raises(InvalidArgumentError):
            is_peo(path3, [1, 2])

    def test_order_model_rejects_repeats(self):
        with pytest.raises(ValueError):
            EliminationOrder(order=[1, 1])

    def test_path_peo(self, path3):
        assert is_peo(path3, [1, 3, 2])
        assert not is_peo(path3, [2, 1, 3])


class TestIsChordal:
    def test_square(self, square):
        assert not is_chordal(square)

    def test_fig2(self, fig2):
        assert is_chordal(fig2)

    def test_k5(self):
        assert is_chordal(complete_graph(5))

    def test_empty(self):
        assert is_chordal(Graph())

    @pytest.mark.parametrize("seed", range(20))
    def test_agrees_with_networkx(self, seed):
        h = nx.gnp_random_graph(8, 0.45, seed=seed)
        assert is_chordal(Graph.from_networkx(h)) == nx.is_chordal(h)


class TestMaximalCliques:
    def test_triangle(self, triangle):
        assert maximal_cliques(triangle).cliques == [VertexSet([1, 2, 3])]

    def test_path(self, path3):
        catalog = maximal_cliques(path3)
        assert catalog.cliques == [VertexSet([1, 2]), VertexSet([2, 3])]
        assert catalog.membership == {1: [0], 2: [0, 1], 3: [1]}

    def test_fig2(self, fig2):
        catalog = maximal_cliques(fig2)
        assert [list(c) for c in catalog.cliques] == FIG2_CATALOG
        assert catalog.containing(8) == [1, 2, 3]
        assert catalog.index([9, 8, 7, 5, 3, 2]) == 3

    def test_index_of_non_clique(self, fig2):
        with pytest.raises(InvalidArgumentError):
            maximal_cliques(fig2).index([1, 2])

    def test_index_containing(self, fig2):
        catalog = maximal_cliques(fig2)
        assert catalog.index_containing([2, 3, 8, 9]) == [1, 2, 3]
        assert catalog.index_containing([4, 5]) == [1]

    def test_not_chordal(self, square):
        with pytest.raises(NotChordalError):
            maximal_cliques(square)

    @pytest.mark.parametrize("seed", range(25))
    def test_matches_brute_force(self, seed):
        model = RandomModel.SUBTREE if seed % 2 else RandomModel.INSERTION
        g = random_chordal(10, density=0.5, seed=seed, model=model)
        catalog = maximal_cliques(g)
        assert catalog.cliques == brute_force_maximal_cliques(g)
        assert len(catalog) <= g.n
        assert all(any(c.issuperset(e) for c in catalog.cliques) for e in g.edges())


def test_simplicial_vertices(fig2, path3):
    assert simplicial_vertices(path3) == VertexSet([1, 3])
    # 1, 6 and 7 each sit in a single clique
    assert simplicial_vertices(fig2) == VertexSet([1, 6, 7])
