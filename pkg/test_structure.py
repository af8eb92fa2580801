"""
Induced cycles, the trichotomy around minimal edges, the spanning-tree
characterisation and isomorphism certificates.
"""

import random

import pytest

from chordal_toolkit.cliquegraph import build_clique_graph
from chordal_toolkit.errors import InvalidArgumentError, TooLargeError
from chordal_toolkit.generators import (
    complete_graph,
    cycle_graph,
    path_graph,
    pendant_sun,
    random_chordal,
    wheel_graph,
    wheel_host,
)
from chordal_toolkit.graph import Graph, VertexSet
from chordal_toolkit.structure import (
    InducedCycle,
    TrichotomyCase,
    canonical_form,
    graphs_isomorphic,
    induced_cycles,
    is_cycle_graph,
    minimal_edges,
    nontheorem_witnesses,
    sb_check,
    verify_trichotomy,
)

K1, K4, K2, K3 = 0, 1, 2, 3


class TestInducedCycles:
    def test_square(self, square):
        assert [c.nodes for c in induced_cycles(square, 4)] == [[1, 2, 3, 4]]

    def test_tree_has_none(self):
        for k in range(3, 6):
            assert induced_cycles(path_graph(5), k) == []

    def test_fig2_reduced_has_triangles_only(self, fig2_cg):
        crg = fig2_cg.reduced()
        assert induced_cycles(crg, 4) == []
        assert [c.nodes for c in induced_cycles(crg, 3)] == [[0, 1, 2], [0, 1, 3]]

    def test_chord_blocks_cycle(self):
        assert induced_cycles(complete_graph(4), 4) == []

    def test_wheel_rim(self):
        assert [c.nodes for c in induced_cycles(wheel_graph(5), 5)] == [[1, 2, 3, 4, 5]]

    def test_pendant_sun_six_cycle(self, sun3):
        cycles = induced_cycles(build_clique_graph(sun3).reduced(), 6)
        assert [c.nodes for c in cycles] == [[1, 3, 2, 6, 4, 5]]

    def test_pendant_sun_eight_cycle(self):
        crg = build_clique_graph(pendant_sun(4)).reduced()
        assert len(induced_cycles(crg, 8)) == 1
        assert induced_cycles(crg, 5) == []

    def test_apex_path_join_four_cycle(self, apex33):
        cycles = induced_cycles(build_clique_graph(apex33).reduced(), 4)
        assert [c.nodes for c in cycles] == [[0, 3, 2, 5]]

    def test_k_too_small(self, square):
        with pytest.raises(InvalidArgumentError):
            induced_cycles(square, 2)

    def test_cycle_model(self):
        cycle = InducedCycle(nodes=[0, 3, 2, 5])
        assert cycle.length == 4
        assert cycle.edges() == [(0, 3), (3, 2), (2, 5), (5, 0)]
        with pytest.raises(ValueError):
            InducedCycle(nodes=[1, 2])


class TestMinimalEdges:
    def test_all_equal(self, apex33):
        cg = build_clique_graph(apex33)
        (cycle,) = induced_cycles(cg.reduced(), 4)
        assert minimal_edges(cg, cycle) == [0, 1, 2, 3]

    def test_not_induced(self, fig2_cg):
        with pytest.raises(InvalidArgumentError):
            minimal_edges(fig2_cg, InducedCycle(nodes=[K1, K2, K4, K3]))


class TestTrichotomy:
    def test_pendant_sun_case_one(self, sun3):
        cg = build_clique_graph(sun3)
        (cycle,) = induced_cycles(cg.reduced(), 6)
        verdict = verify_trichotomy(sun3, cg, cycle)
        assert verdict.case == TrichotomyCase.I
        assert verdict.minimal_edge == (1, 3)
        assert verdict.s == VertexSet([0])
        assert verdict.h1 == VertexSet([6])
        assert verdict.cycle[:2] == [1, 3]

    def test_apex_path_join_alternates(self, apex33):
        cg = build_clique_graph(apex33)
        (cycle,) = induced_cycles(cg.reduced(), 4)
        verdict = verify_trichotomy(apex33, cg, cycle)
        assert verdict.case == TrichotomyCase.III
        assert verdict.minimal_edge == (0, 3)
        assert verdict.s == VertexSet([8])
        assert verdict.h0 == VertexSet([0, 1, 2, 3])
        assert verdict.h1 == VertexSet([4, 5, 6, 7])

    def test_pendant_sun_eight_cycle_is_not_alternating(self):
        g = pendant_sun(4)
        cg = build_clique_graph(g)
        (cycle,) = induced_cycles(cg.reduced(), 8)
        assert verify_trichotomy(g, cg, cycle).case in (TrichotomyCase.I, TrichotomyCase.II)

    def test_triangle_rejected(self, fig2, fig2_cg):
        with pytest.raises(InvalidArgumentError):
            verify_trichotomy(fig2, fig2_cg, InducedCycle(nodes=[0, 1, 2]))


class TestCycleGraph:
    def test_cycle(self):
        assert is_cycle_graph(cycle_graph(5)) == 5

    def test_path(self, path3):
        assert is_cycle_graph(path3) is None

    def test_fig2_reduced(self, fig2_cg):
        assert is_cycle_graph(fig2_cg.reduced()) is None

    def test_two_triangles(self):
        g = Graph([], [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert is_cycle_graph(g) is None


class TestCliqueGraphCharacterisation:
    def test_wheel(self):
        assert sb_check(wheel_graph(5))

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_long_cycles_rejected(self, n):
        assert not sb_check(cycle_graph(n))

    def test_complete(self):
        assert sb_check(complete_graph(4))

    def test_triangle_is_a_clique_graph(self):
        assert sb_check(cycle_graph(3))


class TestIsomorphism:
    def test_relabelled_triangle(self, triangle):
        assert graphs_isomorphic(triangle, triangle.relabel({1: 7, 2: 5, 3: 9}))

    def test_square_vs_path(self, square, path3):
        assert not graphs_isomorphic(square, path3)

    def test_wheel_host_clique_graph(self):
        assert graphs_isomorphic(build_clique_graph(wheel_host(5)), wheel_graph(5))

    def test_guard(self):
        with pytest.raises(TooLargeError):
            graphs_isomorphic(path_graph(20), path_graph(20))

    @pytest.mark.parametrize("seed", range(10))
    def test_certificate_ignores_labels(self, seed):
        g = random_chordal(9, density=0.5, seed=seed)
        labels = list(range(100, 109))
        random.Random(seed).shuffle(labels)
        assert canonical_form(g) == canonical_form(g.relabel(dict(zip(g.vertices, labels))))

    def test_same_degrees_different_graphs(self):
        # C6 and two triangles are both 2-regular on six vertices
        two_triangles = Graph([], [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not graphs_isomorphic(cycle_graph(6), two_triangles)


class TestNonTheoremWitnesses:
    def test_fig2(self, fig2, fig2_cg):
        witnesses = nontheorem_witnesses(fig2, fig2_cg)
        assert [(w.path, w.vertex) for w in witnesses] == [([K2, K1, K3], 8), ([K2, K1, K3], 9)]
        assert all(w.extra_cliques == [VertexSet([2, 3, 4, 5, 8, 9])] for w in witnesses)

    def test_path_has_none(self, path3):
        assert nontheorem_witnesses(path3) == []
