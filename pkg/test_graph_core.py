"""
Graph container, vertex sets and separation primitives.
"""

import pytest

from chordal_toolkit.errors import InvalidArgumentError
from chordal_toolkit.graph import (
    Graph,
    SeparatorReport,
    VertexSet,
    connected_components,
    delete_vertices,
    disjoint_union,
    is_connected,
    shortest_avoiding_path,
)


class TestVertexSet:
    def test_sorted_and_deduplicated(self):
        assert VertexSet([3, 1, 3, 2]) == (1, 2, 3)

    def test_set_operators_return_vertex_sets(self):
        a, b = VertexSet([1, 2, 3]), VertexSet([2, 3, 4])
        assert a & b == VertexSet([2, 3])
        assert a | b == VertexSet([1, 2, 3, 4])
        assert a - b == VertexSet([1])
        assert isinstance(a & b, VertexSet)

    def test_subset_relations(self):
        small, big = VertexSet([2, 3]), VertexSet([1, 2, 3])
        assert small.is_proper_subset(big)
        assert not big.is_proper_subset(big)
        assert big.issuperset(small)
        assert VertexSet([1]).isdisjoint([2, 3])

    def test_repr_is_brace_list(self):
        assert repr(VertexSet([9, 2, 8, 3])) == "{2,3,8,9}"

    def test_pydantic_round_trip(self):
        report = SeparatorReport(separator=[3, 1], components=[[5, 4]], component_of={4: 0, 5: 0})
        assert report.separator == VertexSet([1, 3])
        assert report.model_dump()["separator"] == [1, 3]


class TestGraph:
    def test_edges_sorted_and_symmetric(self):
        g = Graph([], [(3, 1), (2, 1)])
        assert g.vertices == (1, 2, 3)
        assert g.edges() == [(1, 2), (1, 3)]
        assert g.has_edge(3, 1) and g.has_edge(1, 3)
        assert g.edge_count() == 2

    def test_isolated_vertices_kept(self):
        g = Graph([7], [(1, 2)])
        assert g.vertices == (1, 2, 7)
        assert g.degree(7) == 0

    @pytest.mark.parametrize("edges", [[(1, 1)], [(-1, 2)], [("a", 2)], [(True, 2)]])
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(InvalidArgumentError):
            Graph([], edges)

    def test_equality_ignores_construction_order(self):
        assert Graph([], [(1, 2), (2, 3)]) == Graph([3, 2, 1], [(3, 2), (2, 1)])
        assert hash(Graph([], [(1, 2)])) == hash(Graph([2, 1], [(2, 1)]))

    def test_is_clique(self, triangle, path3):
        assert triangle.is_clique([1, 2, 3])
        assert not path3.is_clique([1, 2, 3])
        assert path3.is_clique([])
        assert not path3.is_clique([1, 99])

    def test_induced_subgraph(self, fig2):
        sub = fig2.induced_subgraph([1, 2, 3, 4])
        assert sub.edges() == [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]
        with pytest.raises(InvalidArgumentError):
            fig2.induced_subgraph([1, 42])

    def test_networkx_round_trip(self, fig2):
        assert Graph.from_networkx(fig2.to_networkx()) == fig2

    def test_disjoint_union_shifts_second_graph(self, path3, triangle):
        union, shift = disjoint_union(path3, triangle)
        assert shift == {1: 4, 2: 5, 3: 6}
        assert union.n == 6
        assert union.edge_count() == 5
        assert not is_connected(union)


class TestComponents:
    def test_empty_graph(self):
        g = Graph()
        assert connected_components(g) == []
        assert is_connected(g)

    def test_two_edges(self):
        assert connected_components(Graph([], [(1, 2), (3, 4)])) == [VertexSet([1, 2]), VertexSet([3, 4])]

    def test_fig2_connected(self, fig2):
        assert connected_components(fig2) == [VertexSet(range(1, 10))]


class TestDeleteVertices:
    def test_cut_vertex_of_path(self, path3):
        report = delete_vertices(path3, [2])
        assert report.components == [VertexSet([1]), VertexSet([3])]
        assert not report.same_side(1, 3)

    def test_fig2_separator(self, fig2):
        report = delete_vertices(fig2, [2, 3])
        assert report.components == [VertexSet([1]), VertexSet([4, 5, 6, 7, 8, 9])]

    def test_empty_separator_is_identity(self, fig2):
        assert delete_vertices(fig2, []).components == connected_components(fig2)

    def test_unknown_separator_vertex(self, path3):
        with pytest.raises(InvalidArgumentError):
            delete_vertices(path3, [5])

    def test_component_containing(self, fig2):
        report = delete_vertices(fig2, [2, 3])
        assert report.component_containing([2, 4, 6]) == 1
        assert report.component_containing([1, 4]) is None
        assert report.component_containing([2, 3]) is None


class TestShortestAvoidingPath:
    def test_unique_path(self, path3):
        assert shortest_avoiding_path(path3, [], [1], [3]) == [1, 2, 3]

    def test_fig2_direct_edge(self, fig2):
        assert shortest_avoiding_path(fig2, [2, 3, 8, 9], [4, 6], [5, 7]) == [4, 5]

    def test_blocked(self, path3):
        assert shortest_avoiding_path(path3, [2], [1], [3]) is None

    def test_shared_endpoint(self, path3):
        assert shortest_avoiding_path(path3, [], [1, 2], [2, 3]) == [2]

    def test_empty_end_set(self, path3):
        with pytest.raises(InvalidArgumentError):
            shortest_avoiding_path(path3, [], [], [3])

    def test_interior_avoids_end_sets(self):
        # 1-2-3 and a longer detour 1-4-5-3; 2 belongs to the source side
        g = Graph([], [(1, 2), (2, 3), (1, 4), (4, 5), (5, 3)])
        assert shortest_avoiding_path(g, [], [1, 2], [3]) == [2, 3]
        assert shortest_avoiding_path(g, [2], [1], [3]) == [1, 4, 5, 3]
