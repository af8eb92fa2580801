"""
Corpus suites, single-instance verification and the cycle search.

Default runs use small corpora; the ``slow`` tests run the acceptance sizes.
"""

import pytest

from chordal_toolkit.cliquegraph import VertexWeightPolicy
from chordal_toolkit.errors import InvalidArgumentError, TooLargeError
from chordal_toolkit.generators import apex_path_join, fig2_graph, pendant_sun
from chordal_toolkit.graph import Graph
from chordal_toolkit.jobs import (
    SUITE_NAMES,
    SUITES,
    _check_theorem2,
    run_suite,
    search_induced_cycles,
    verify_instance,
)
from chordal_toolkit.structure import TrichotomyCase

SEED = 20240501


def _single(name, **kwargs):
    (report,) = run_suite(name, seed=SEED, **kwargs)
    assert report.suite == name
    return report


class TestFixedSuites:
    @pytest.mark.parametrize("name", ["figure2", "wheels", "products"])
    def test_passes(self, name):
        report = _single(name)
        assert report.passed, report.failures
        assert report.checked > 0

    def test_products_count(self):
        assert _single("products").checked == 36

    def test_wheels_count(self):
        # six wheels checked twice, four cycles, one 5-cycle
        assert _single("wheels").checked == 6 * 2 + 4 + 1


class TestCorpusSuites:
    @pytest.mark.parametrize("name,count", [
        ("theorem2", 12),
        ("expansion", 40),
        ("path-laws", 8),
        ("oracles", 20),
        ("connectivity", 30),
    ])
    def test_small_corpus(self, name, count):
        report = _single(name, count=count, max_n=9)
        assert report.passed, report.failures

    def test_no_c5_small(self):
        report = _single("no-c5", count=200)
        assert report.passed, report.failures
        # exhaustive corpus up to six vertices, then the random instances
        assert report.checked == 1 + 1 + 2 + 5 + 15 + 58 + 200

    def test_sharding_is_deterministic(self):
        one = _single("connectivity", count=24, max_n=8, jobs=1)
        three = _single("connectivity", count=24, max_n=8, jobs=3)
        assert (one.checked, one.skipped, one.failures) == (three.checked, three.skipped, three.failures)

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("nonsense")

    def test_zero_jobs_rejected(self):
        with pytest.raises(InvalidArgumentError):
            run_suite("connectivity", count=5, jobs=0)
        with pytest.raises(InvalidArgumentError):
            search_induced_cycles(6, count=5, jobs=0)

    def test_theorem2_runs_both_policies(self):
        report = _single("theorem2", count=40, max_n=9)
        assert report.passed, report.failures
        # two fixed audits plus two policies per corpus instance
        assert report.checked + report.skipped == 2 + 80

    def test_oversized_audit_is_skipped_with_warning(self, caplog, monkeypatch):
        def _too_large(*args, **kwargs):
            raise TooLargeError("too many spanning trees")

        monkeypatch.setattr("chordal_toolkit.jobs.verify_theorem2_instance", _too_large)
        with caplog.at_level("WARNING", logger="chordal_toolkit.jobs"):
            report = _check_theorem2(SEED, 0, 6)
        assert report.checked == 0
        assert report.skipped == 2
        assert report.failures == []
        assert "Skipping theorem2 instance" in caplog.text

    def test_all_covers_every_suite(self):
        assert set(SUITE_NAMES) == set(SUITES) | {"all"}


@pytest.mark.slow
class TestAcceptanceScale:
    @pytest.mark.parametrize("name", ["theorem2", "no-c5", "cycles", "trichotomy", "expansion",
                                      "path-laws", "oracles", "connectivity"])
    def test_default_sizes(self, name):
        report = _single(name, jobs=4)
        assert report.passed, report.failures[:3]

    def test_search_finds_six_cycle(self, tmp_path):
        report = search_induced_cycles(6, seed=SEED, jobs=4, out_dir=tmp_path)
        assert report.found
        assert list(tmp_path.glob("*.edges"))


class TestVerifyInstance:
    def test_fig2(self):
        report = verify_instance(fig2_graph())
        assert report.passed
        assert report.theorem2.clique_trees == 3
        assert report.five_cycles == []
        assert [(e.a, e.b, e.path) for e in report.expansion] == [(2, 3, [2, 1, 3])]

    def test_fig2_vertex_weights(self):
        weights = VertexWeightPolicy({v: v for v in range(1, 10)})
        assert verify_instance(fig2_graph(), weights).passed

    def test_apex_path_join(self):
        report = verify_instance(apex_path_join(3, 3))
        assert [v.case for v in report.trichotomy] == [TrichotomyCase.III]

    def test_pendant_sun(self):
        report = verify_instance(pendant_sun(3))
        assert report.passed
        assert [v.case for v in report.trichotomy] == [TrichotomyCase.I]

    def test_disconnected_skips_audit(self):
        report = verify_instance(Graph([], [(1, 2), (3, 4)]))
        assert report.theorem2 is None
        assert report.notes
        assert report.passed


class TestSearch:
    def test_no_five_cycles(self):
        report = search_induced_cycles(5, seed=SEED, count=60, max_n=9)
        assert report.examined == 60
        assert not report.found
        assert report.hits == []

    def test_hit_is_confirmed_and_written(self, monkeypatch, tmp_path):
        monkeypatch.setattr("chordal_toolkit.jobs.corpus_instance", lambda *args: pendant_sun(3))
        report = search_induced_cycles(6, seed=SEED, count=5, out_dir=tmp_path, max_hits=2)
        assert [h.index for h in report.hits] == [0, 1]
        assert all(h.oracle_confirmed for h in report.hits)
        assert sorted(p.name for p in tmp_path.iterdir()) == [
            f"crg_c6_seed{SEED}_0.edges", f"crg_c6_seed{SEED}_1.edges"
        ]
        assert report.hits[0].model == "subtree"
        assert report.hits[1].model == "insertion"
