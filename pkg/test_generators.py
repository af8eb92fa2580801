"""
Fixed instances, parametrised families and the random/exhaustive corpora.
"""

import pytest

from chordal_toolkit.chordal import is_chordal, maximal_cliques
from chordal_toolkit.cliquegraph import build_clique_graph, is_separating_pair
from chordal_toolkit.errors import InvalidArgumentError, TooLargeError
from chordal_toolkit.generators import (
    GeneratorFamily,
    GeneratorSpec,
    RandomModel,
    apex_path_join,
    complete_graph,
    corpus_instance,
    exhaustive_chordal,
    exhaustive_corpus,
    fig2_graph,
    fig3_graph,
    generate,
    join_product,
    path_graph,
    pendant_sun,
    random_chordal,
    wheel_graph,
    wheel_host,
)
from chordal_toolkit.graph import Graph, VertexSet, is_connected
from chordal_toolkit.structure import graphs_isomorphic


class TestFixedInstances:
    def test_fig2_catalog(self):
        cliques = maximal_cliques(fig2_graph()).cliques
        assert [list(c) for c in cliques] == [
            [1, 2, 3], [2, 3, 4, 5, 8, 9], [2, 3, 4, 6, 8, 9], [2, 3, 5, 7, 8, 9]
        ]

    def test_fig2_vertex_eight(self):
        k1, k2, k3 = VertexSet([1, 2, 3]), VertexSet([2, 3, 4, 6, 8, 9]), VertexSet([2, 3, 5, 7, 8, 9])
        assert 8 in (k2 & k3) and 8 not in k1
        assert not is_separating_pair(fig2_graph(), k2, k3)

    def test_fig3(self):
        g = fig3_graph()
        cg = build_clique_graph(g)
        assert cg.catalog[0] & cg.catalog[3] == VertexSet([3])
        assert not cg.reduced().is_adjacent(0, 3)


class TestFamilies:
    def test_wheel_host_three(self):
        g = wheel_host(3)
        assert g.n == 7
        assert [list(c) for c in maximal_cliques(g).cliques] == [[0, 1, 2, 3], [0, 1, 4], [0, 2, 6], [1, 2, 5]]

    def test_wheel_host_eight(self):
        assert build_clique_graph(wheel_host(8)).node_count == 9

    def test_wheel_host_too_small(self):
        with pytest.raises(InvalidArgumentError):
            wheel_host(2)

    def test_wheel(self):
        w = wheel_graph(4)
        assert w.n == 5
        assert w.degree(0) == 4
        assert w.edge_count() == 8

    def test_apex_path_join_small(self):
        g = apex_path_join(1, 1)
        assert g.n == 5
        assert [list(c) for c in maximal_cliques(g).cliques] == [[0, 1, 4], [2, 3, 4]]

    def test_apex_path_join_bad_args(self):
        with pytest.raises(InvalidArgumentError):
            apex_path_join(0, 2)

    def test_join_of_single_vertices(self):
        assert join_product(path_graph(0), path_graph(0)).edges() == [(0, 1)]

    def test_join_of_edges_is_k4(self):
        assert join_product(path_graph(1), path_graph(1)) == complete_graph(4)

    def test_join_of_two_edge_paths(self):
        g = join_product(path_graph(2), path_graph(2))
        assert g.n == 6
        assert g.edge_count() == 2 + 2 + 9

    @pytest.mark.parametrize("m,n", [(1, 1), (2, 3), (3, 3), (4, 2)])
    def test_apex_path_join_reduces_to_path_join(self, m, n):
        crg = build_clique_graph(apex_path_join(m, n)).reduced()
        assert graphs_isomorphic(crg, join_product(path_graph(m - 1), path_graph(n - 1)))

    def test_pendant_sun_catalog(self):
        assert [list(c) for c in maximal_cliques(pendant_sun(3)).cliques] == [
            [0, 1, 2], [0, 1, 3], [0, 2, 5], [0, 6], [1, 2, 4], [1, 7], [2, 8]
        ]


class TestRandom:
    def test_single_vertex(self):
        assert random_chordal(1, seed=3) == Graph([0])

    @pytest.mark.parametrize("model", list(RandomModel))
    def test_deterministic(self, model):
        assert random_chordal(10, 0.5, seed=99, model=model) == random_chordal(10, 0.5, seed=99, model=model)

    @pytest.mark.parametrize("model", list(RandomModel))
    def test_connected_and_chordal(self, model):
        for seed in range(40):
            g = random_chordal(12, 0.4, seed=seed, model=model)
            assert g.vertices == tuple(range(12))
            assert is_connected(g)
            assert is_chordal(g)

    def test_bad_density(self):
        with pytest.raises(InvalidArgumentError):
            random_chordal(5, density=1.5)

    def test_corpus_instance_is_index_local(self):
        first = [corpus_instance(7, i) for i in range(5)]
        assert corpus_instance(7, 3) == first[3]

    def test_corpus_size_range(self):
        sizes = {corpus_instance(1, i, max_n=6, min_n=4).n for i in range(50)}
        assert sizes <= {4, 5, 6}

    def test_corpus_has_clique_spread(self):
        models = [RandomModel.SUBTREE, RandomModel.INSERTION]
        corpus = [corpus_instance(20240501, i, 11, models[i % 2], min_n=4) for i in range(200)]
        counts = [len(maximal_cliques(g)) for g in corpus]
        non_separating = sum(
            1 for g in corpus if any(not e.separating for e in build_clique_graph(g).edges)
        )
        assert counts.count(1) <= 0.3 * len(corpus)
        assert max(counts) >= 4
        assert non_separating >= 0.1 * len(corpus)

    def test_subtree_model_is_not_mostly_complete(self):
        corpus = [corpus_instance(20240501, i, 11, RandomModel.SUBTREE, min_n=4) for i in range(100)]
        assert sum(1 for g in corpus if len(maximal_cliques(g)) == 1) <= 30


class TestExhaustive:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 5), (5, 15)])
    def test_counts(self, n, count):
        assert len(list(exhaustive_chordal(n))) == count

    @pytest.mark.slow
    def test_six_vertices(self):
        assert len(list(exhaustive_chordal(6))) == 58

    def test_three_vertices_are_path_and_triangle(self):
        edge_counts = sorted(g.edge_count() for g in exhaustive_chordal(3))
        assert edge_counts == [2, 3]

    def test_guard(self):
        with pytest.raises(TooLargeError):
            list(exhaustive_chordal(7))

    def test_corpus_members_connected_chordal(self):
        for g in exhaustive_corpus(4):
            assert is_connected(g) and is_chordal(g)


class TestGenerate:
    def test_fig2(self):
        assert generate(GeneratorSpec(family="fig2")) == fig2_graph()

    def test_wheel_host(self):
        assert generate(GeneratorSpec(family=GeneratorFamily.WHEEL_HOST, params=[5])) == wheel_host(5)

    def test_join_product(self):
        assert generate(GeneratorSpec(family="join_product", params=[1, 1])) == complete_graph(4)

    def test_exhaustive_index(self):
        g = generate(GeneratorSpec(family="exhaustive_chordal", params=[3, 1]))
        assert g == list(exhaustive_chordal(3))[1]

    def test_exhaustive_index_out_of_range(self):
        with pytest.raises(InvalidArgumentError):
            generate(GeneratorSpec(family="exhaustive_chordal", params=[3, 5]))

    def test_missing_params(self):
        with pytest.raises(InvalidArgumentError):
            generate(GeneratorSpec(family="apex_path_join", params=[2]))

    def test_random_uses_seed(self):
        spec = GeneratorSpec(family="random_chordal", params=[9], seed=4, model="insertion")
        assert generate(spec) == random_chordal(9, 0.5, 4, RandomModel.INSERTION)
