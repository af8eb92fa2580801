"""
Corpus-level verification suites and the induced-cycle search.

Corpus work is split by instance index (shard i takes indices i, i+jobs,
...), so results do not depend on the worker count.
"""

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from .cliquegraph import CardinalityPolicy, VertexWeightPolicy, WeightingPolicy, build_clique_graph
from .cliquetree import crg_expansion_path, edge_separation_check, tree_path_weight_floor
from .chordal import is_chordal, maximal_cliques
from .errors import InvalidArgumentError, LemmaViolationError, ToolkitError, TooLargeError
from .formats import dump_edge_list, graph_document
from .generators import (
    RandomModel,
    apex_path_join,
    corpus_instance,
    cycle_graph,
    exhaustive_corpus,
    fig2_graph,
    join_product,
    path_graph,
    pendant_sun,
    wheel_graph,
    wheel_host,
)
from .graph import Graph, disjoint_union, is_connected
from .models import SearchHit, SearchReport, SuiteReport, Theorem2Report
from .oracles import (
    EnumerationBudget,
    all_clique_trees,
    all_spanning_trees,
    brute_force_is_chordal,
    brute_force_maximal_cliques,
    crg_clique_pairs,
    definition_direct_crg,
    kirchhoff_count,
    verify_theorem2_instance,
)
from .settings import settings
from .structure import (
    InducedCycle,
    TrichotomyVerdict,
    graphs_isomorphic,
    induced_cycles,
    is_cycle_graph,
    nontheorem_witnesses,
    sb_check,
    verify_trichotomy,
)

logger = logging.getLogger(__name__)


def _model_for(index: int) -> RandomModel:
    return RandomModel.SUBTREE if index % 2 == 0 else RandomModel.INSERTION


def _random_weights(g: Graph, seed: int, index: int) -> VertexWeightPolicy:
    rng = random.Random(f"weights:{seed}:{index}")
    return VertexWeightPolicy({v: rng.randint(1, 9) for v in g.vertices})


def _failure(index: Optional[int], what: str, **detail: Any) -> Dict[str, Any]:
    return {"index": index, "check": what, **detail}


# ──────────────────────────────
# Per-instance checks (corpus suites)
# ──────────────────────────────
def _check_theorem2(seed: int, index: int, max_n: int) -> SuiteReport:
    report = SuiteReport(suite="theorem2")
    g = corpus_instance(seed, index, max_n, _model_for(index))
    cliques = len(maximal_cliques(g))
    if cliques > 10:
        logger.warning(f"⚠️ Skipping theorem2 instance {index}: {cliques} cliques is over the enumeration limit")
        report.skipped += 1
        return report
    for policy in (CardinalityPolicy(), _random_weights(g, seed, index)):
        try:
            result = verify_theorem2_instance(g, policy)
        except TooLargeError as e:
            logger.warning(f"⚠️ Skipping theorem2 instance {index} ({policy.name}): {e.message}")
            report.skipped += 1
            continue
        report.checked += 1
        for clause in result.clauses:
            if not clause.passed:
                report.failures.append(_failure(index, f"clause {clause.clause}", policy=policy.name,
                                                graph=graph_document(g).model_dump(), witness=clause.witness))
    return report


def _check_no_c5(seed: int, index: int, max_n: int) -> SuiteReport:
    report = SuiteReport(suite="no-c5", checked=1)
    g = corpus_instance(seed, index, max_n, _model_for(index))
    cycles = induced_cycles(build_clique_graph(g).reduced(), 5)
    if cycles:
        report.failures.append(_failure(index, "induced C5 in C_R", graph=graph_document(g).model_dump(),
                                        cycle=cycles[0].nodes))
    return report


def _trichotomy_failures(g: Graph, index: Optional[int]) -> Tuple[int, List[Dict[str, Any]]]:
    cg = build_clique_graph(g)
    crg = cg.reduced()
    checked, failures = 0, []
    for k in range(4, crg.node_count + 1):
        for cycle in induced_cycles(crg, k):
            checked += 1
            try:
                verify_trichotomy(g, cg, cycle)
            except LemmaViolationError as e:
                failures.append(_failure(index, "trichotomy", graph=graph_document(g).model_dump(),
                                         witness=e.witness))
    return checked, failures


def _check_trichotomy(seed: int, index: int, max_n: int) -> SuiteReport:
    g = corpus_instance(seed, index, max_n, _model_for(index))
    checked, failures = _trichotomy_failures(g, index)
    return SuiteReport(suite="trichotomy", checked=checked, failures=failures)


def _check_expansion(seed: int, index: int, max_n: int) -> SuiteReport:
    report = SuiteReport(suite="expansion")
    g = corpus_instance(seed, index, max_n, _model_for(index))
    cg = build_clique_graph(g)
    for e in cg.edges:
        if e.separating:
            continue
        report.checked += 1
        try:
            crg_expansion_path(g, cg, e.a, e.b)
        except LemmaViolationError as err:
            report.failures.append(_failure(index, "expansion", pair=[e.a, e.b], witness=err.witness,
                                            graph=graph_document(g).model_dump()))
    return report


def _check_path_laws(seed: int, index: int, max_n: int) -> SuiteReport:
    report = SuiteReport(suite="path-laws")
    g = corpus_instance(seed, index, max_n, _model_for(index))
    cg = build_clique_graph(g)
    try:
        trees = list(all_clique_trees(g, cg=cg))
    except TooLargeError as e:
        logger.warning(f"⚠️ Skipping path-laws instance {index}: {e.message}")
        report.skipped += 1
        return report
    nodes = cg.nodes()
    for t in trees:
        for e in cg.edges:
            report.checked += 1
            try:
                tree_path_weight_floor(g, t, e.a, e.b)
            except LemmaViolationError as err:
                report.failures.append(_failure(index, "path weight floor", witness=err.witness))
        for d, d2 in combinations(nodes, 2):
            path = t.path(d, d2)
            for x, y in zip(path, path[1:]):
                report.checked += 1
                if not edge_separation_check(g, t, (x, y), d, d2):
                    report.failures.append(_failure(index, "edge separation", tree=sorted(t.edge_pairs()),
                                                    edge=[x, y], ends=[d, d2]))
    return report


def _check_oracles(seed: int, index: int, max_n: int) -> SuiteReport:
    report = SuiteReport(suite="oracles")
    g = corpus_instance(seed, index, max_n, _model_for(index))
    cg = build_clique_graph(g)
    detail = {"graph": graph_document(g).model_dump()}

    report.checked += 1
    if definition_direct_crg(g) != crg_clique_pairs(cg):
        report.failures.append(_failure(index, "definition-direct C_R", **detail))

    report.checked += 1
    if brute_force_maximal_cliques(g) != maximal_cliques(g).cliques:
        report.failures.append(_failure(index, "brute-force cliques", **detail))

    for label, h in (("C(G)", cg.as_graph()), ("C_R", cg.reduced().as_graph())):
        expected = kirchhoff_count(h)
        if expected > settings.MAX_TREES or h.n > settings.BUDGET:
            report.skipped += 1
            continue
        report.checked += 1
        counted = sum(1 for _ in all_spanning_trees(h))
        if counted != expected:
            report.failures.append(_failure(index, f"matrix-tree count {label}",
                                            enumerated=counted, kirchhoff=expected, **detail))

    # arbitrary small graphs, chordal or not
    rng = random.Random(f"gnp:{seed}:{index}")
    n = rng.randint(1, 7)
    h = Graph(range(n), [p for p in combinations(range(n), 2) if rng.random() < 0.5])
    report.checked += 1
    if is_chordal(h) != brute_force_is_chordal(h):
        report.failures.append(_failure(index, "chordality oracle", graph=graph_document(h).model_dump()))
    return report


def _check_connectivity(seed: int, index: int, max_n: int) -> SuiteReport:
    report = SuiteReport(suite="connectivity", checked=1)
    g = corpus_instance(seed, index, max_n, _model_for(index))
    if index % 3 == 2:
        g, _ = disjoint_union(g, corpus_instance(seed, index + 1, max_n))
    crg = build_clique_graph(g).reduced().as_graph()
    if is_connected(crg) != is_connected(g):
        report.failures.append(_failure(index, "C_R connectivity", graph=graph_document(g).model_dump()))
    return report


# ──────────────────────────────
# Fixed-instance checks
# ──────────────────────────────
def _fixed_theorem2() -> SuiteReport:
    report = SuiteReport(suite="theorem2")
    g = fig2_graph()
    for policy in (CardinalityPolicy(), VertexWeightPolicy({v: 2 for v in g.vertices})):
        report.checked += 1
        result = verify_theorem2_instance(g, policy)
        if not result.passed:
            report.failures.append(_failure(None, "fig2", policy=policy.name, report=result.model_dump()))
    return report


def _fixed_exhaustive(suite: str, check: Callable[[Graph, Any], Optional[str]]) -> SuiteReport:
    report = SuiteReport(suite=suite)
    for g in exhaustive_corpus(settings.EXHAUSTIVE_GUARD):
        report.checked += 1
        cg = build_clique_graph(g)
        problem = check(g, cg)
        if problem:
            report.failures.append(_failure(None, problem, graph=graph_document(g).model_dump()))
    return report


def _fixed_no_c5() -> SuiteReport:
    return _fixed_exhaustive(
        "no-c5", lambda g, cg: "induced C5 in C_R" if induced_cycles(cg.reduced(), 5) else None
    )


def _fixed_cycles() -> SuiteReport:
    def _check(g: Graph, cg) -> Optional[str]:
        for label, h in (("C(G)", cg.as_graph()), ("C_R", cg.reduced().as_graph())):
            length = is_cycle_graph(h)
            if length is not None and length >= 4:
                return f"{label} is a {length}-cycle"
        if cg.node_count and not sb_check(cg.as_graph()):
            return "C(G) fails the spanning-tree characterisation"
        return None

    return _fixed_exhaustive("cycles", _check)


def _fixed_trichotomy() -> SuiteReport:
    report = SuiteReport(suite="trichotomy")
    fixed = [apex_path_join(3, 3), pendant_sun(3), pendant_sun(4)]
    for g in fixed + list(exhaustive_corpus(settings.EXHAUSTIVE_GUARD)):
        checked, failures = _trichotomy_failures(g, None)
        report.checked += checked
        report.failures.extend(failures)
    return report


def _fixed_wheels() -> SuiteReport:
    report = SuiteReport(suite="wheels")
    for n in range(3, 9):
        report.checked += 2
        if not graphs_isomorphic(build_clique_graph(wheel_host(n)).as_graph(), wheel_graph(n)):
            report.failures.append(_failure(None, f"C(wheel_host({n})) is not the {n}-spoke wheel"))
        if not sb_check(wheel_graph(n)):
            report.failures.append(_failure(None, f"{n}-spoke wheel rejected by the characterisation"))
    for n in range(4, 8):
        report.checked += 1
        if sb_check(cycle_graph(n)):
            report.failures.append(_failure(None, f"C_{n} accepted by the characterisation"))
    # clique graph but not a reduced clique graph
    report.checked += 1
    if not induced_cycles(wheel_graph(5), 5):
        report.failures.append(_failure(None, "5-spoke wheel lost its induced 5-cycle"))
    return report


def _fixed_products() -> SuiteReport:
    report = SuiteReport(suite="products")
    for m in range(1, 7):
        for n in range(1, 7):
            report.checked += 1
            crg = build_clique_graph(apex_path_join(m, n)).reduced().as_graph()
            if not graphs_isomorphic(crg, join_product(path_graph(m - 1), path_graph(n - 1))):
                report.failures.append(_failure(None, f"C_R(apex_path_join({m},{n})) is not a path join"))
    return report


def _fixed_figure2() -> SuiteReport:
    report = SuiteReport(suite="figure2")
    g = fig2_graph()
    cg = build_clique_graph(g)
    k1, k4, k2, k3 = range(4)
    checks = {
        "K2 and K3 meet in {2,3,8,9}": list(cg.edge_between(k2, k3).intersection) == [2, 3, 8, 9],
        "K2 and K3 are not C_R-adjacent": not cg.edge_between(k2, k3).separating,
        "K2-K1-K3 is a C_R path": cg.reduced().is_adjacent(k2, k1) and cg.reduced().is_adjacent(k1, k3),
        "C_R has five edges": len(cg.reduced().edges) == 5,
        "vertex 8 escapes K1": any(
            w.path == [k2, k1, k3] and w.vertex == 8 and [list(c) for c in w.extra_cliques] == [[2, 3, 4, 5, 8, 9]]
            for w in nontheorem_witnesses(g, cg)
        ),
        "expansion of K2-K3 runs through K4": crg_expansion_path(g, cg, k2, k3) == [k2, k4, k3],
    }
    for label, ok in checks.items():
        report.checked += 1
        if not ok:
            report.failures.append(_failure(None, label))
    return report


# ──────────────────────────────
# Suite registry and driver
# ──────────────────────────────
@dataclass(frozen=True)
class Suite:
    name: str
    count: int
    max_n: int
    per_index: Optional[Callable[[int, int, int], SuiteReport]] = None
    fixed: Optional[Callable[[], SuiteReport]] = None


SUITES: Dict[str, Suite] = {
    s.name: s
    for s in [
        Suite("theorem2", 500, 11, _check_theorem2, _fixed_theorem2),
        Suite("no-c5", 10_000, 12, _check_no_c5, _fixed_no_c5),
        Suite("cycles", 0, 6, None, _fixed_cycles),
        Suite("trichotomy", 2_000, 12, _check_trichotomy, _fixed_trichotomy),
        Suite("expansion", 1_000, 12, _check_expansion),
        Suite("path-laws", 200, 10, _check_path_laws),
        Suite("oracles", 300, 12, _check_oracles),
        Suite("connectivity", 500, 10, _check_connectivity),
        Suite("wheels", 0, 0, None, _fixed_wheels),
        Suite("products", 0, 0, None, _fixed_products),
        Suite("figure2", 0, 0, None, _fixed_figure2),
    ]
}
SUITE_NAMES = list(SUITES) + ["all"]


def _run_shard(name: str, seed: int, max_n: int, indices: List[int]) -> SuiteReport:
    suite = SUITES[name]
    report = SuiteReport(suite=name)
    for index in indices:
        try:
            report.absorb(suite.per_index(seed, index, max_n))
        except ToolkitError as e:
            report.failures.append(_failure(index, "error", **e.to_dict()))
    return report


def run_suite(
    name: str,
    seed: Optional[int] = None,
    count: Optional[int] = None,
    max_n: Optional[int] = None,
    jobs: int = 1,
) -> List[SuiteReport]:
    """Run one suite (or every suite for ``all``); returns one report per suite."""
    if jobs < 1:
        raise InvalidArgumentError(f"jobs must be at least 1, got {jobs}")
    if name == "all":
        return [r for suite in SUITES for r in run_suite(suite, seed, count, max_n, jobs)]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")

    suite = SUITES[name]
    seed = settings.SEED if seed is None else seed
    count = suite.count if count is None else count
    max_n = suite.max_n if max_n is None else max_n
    report = SuiteReport(suite=name)

    if suite.fixed is not None:
        report.absorb(suite.fixed())

    if suite.per_index is not None and count > 0:
        shards = [list(range(i, count, jobs)) for i in range(jobs)]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = list(pool.map(_run_shard, [name] * jobs, [seed] * jobs, [max_n] * jobs, shards))
        else:
            parts = [_run_shard(name, seed, max_n, shards[0])]
        for part in parts:
            report.absorb(part)
        report.failures.sort(key=lambda f: (f.get("index") is None, f.get("index") or 0))

    level = logging.INFO if report.passed else logging.WARNING
    icon = "✅" if report.passed else "❌"
    logger.log(level, f"{icon} Suite {name}: {report.checked} checked, {report.skipped} skipped, "
                      f"{len(report.failures)} failures")
    return [report]


# ──────────────────────────────
# Single-instance verification
# ──────────────────────────────
class ExpansionRecord(BaseModel):
    a: int
    b: int
    path: List[int]


class InstanceReport(BaseModel):
    theorem2: Optional[Theorem2Report] = None
    five_cycles: List[InducedCycle] = Field(default_factory=list)
    trichotomy: List[TrichotomyVerdict] = Field(default_factory=list)
    expansion: List[ExpansionRecord] = Field(default_factory=list)
    problems: List[Dict[str, Any]] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        theorem_ok = self.theorem2 is None or self.theorem2.passed
        return theorem_ok and not self.five_cycles and not self.problems


def verify_instance(g: Graph, policy: Optional[WeightingPolicy] = None,
                    budget: Optional[EnumerationBudget] = None) -> InstanceReport:
    report = InstanceReport()
    cg = build_clique_graph(g, policy)
    crg = cg.reduced()

    if is_connected(g):
        try:
            report.theorem2 = verify_theorem2_instance(g, policy, budget)
        except TooLargeError as e:
            report.notes.append(f"clique-tree audit skipped: {e.message}")
    else:
        report.notes.append("graph is disconnected; clique-tree audit skipped")

    report.five_cycles = induced_cycles(crg, 5)
    for k in range(4, crg.node_count + 1):
        for cycle in induced_cycles(crg, k):
            try:
                report.trichotomy.append(verify_trichotomy(g, cg, cycle))
            except LemmaViolationError as e:
                report.problems.append(e.to_dict())

    for e in cg.edges:
        if not e.separating:
            try:
                report.expansion.append(ExpansionRecord(a=e.a, b=e.b, path=crg_expansion_path(g, cg, e.a, e.b)))
            except LemmaViolationError as err:
                report.problems.append(err.to_dict())
    return report


# ──────────────────────────────
# Induced-cycle search
# ──────────────────────────────
def _search_shard(k: int, seed: int, max_n: int, min_n: int, indices: List[int],
                  max_hits: int) -> Tuple[int, List[SearchHit]]:
    hits: List[SearchHit] = []
    examined = 0
    for index in indices:
        examined += 1
        model = _model_for(index)
        g = corpus_instance(seed, index, max_n, model, min_n)
        cg = build_clique_graph(g)
        cycles = induced_cycles(cg.reduced(), k)
        if not cycles:
            continue
        cycle = cycles[0]
        oracle = definition_direct_crg(g, EnumerationBudget(max_nodes=max(g.n, 1)))
        confirmed = oracle == crg_clique_pairs(cg)
        hits.append(SearchHit(
            index=index,
            model=model.value,
            cycle=[cg.catalog[i] for i in cycle.nodes],
            graph=graph_document(g),
            oracle_confirmed=confirmed,
        ))
        logger.info(f"🎯 Induced C{k} at index {index} ({model.value}, n={g.n}, confirmed={confirmed})")
        if len(hits) >= max_hits:
            break
    return examined, hits


def search_induced_cycles(
    k: int,
    seed: Optional[int] = None,
    count: int = 200_000,
    max_n: int = 13,
    min_n: int = 6,
    jobs: int = 1,
    out_dir: Optional[Path] = None,
    max_hits: int = 1,
) -> SearchReport:
    if jobs < 1:
        raise InvalidArgumentError(f"jobs must be at least 1, got {jobs}")
    seed = settings.SEED if seed is None else seed
    shards = [list(range(i, count, jobs)) for i in range(jobs)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_search_shard, [k] * jobs, [seed] * jobs, [max_n] * jobs,
                                  [min_n] * jobs, shards, [max_hits] * jobs))
    else:
        parts = [_search_shard(k, seed, max_n, min_n, shards[0], max_hits)]

    hits = sorted((h for _, part in parts for h in part), key=lambda h: h.index)[:max_hits]
    report = SearchReport(k=k, seed=seed, examined=sum(n for n, _ in parts))

    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
        written = []
        for hit in hits:
            path = out_dir / f"crg_c{k}_seed{seed}_{hit.index}.edges"
            g = Graph(hit.graph.vertices, hit.graph.edges)
            path.write_text(f"# C_R has an induced {k}-cycle: {[list(c) for c in hit.cycle]}\n" + dump_edge_list(g))
            written.append(hit.model_copy(update={"path": str(path)}))
        hits = written

    report.hits = hits
    if not hits:
        logger.warning(f"⚠️ No induced C{k} in {report.examined} instances")
    return report
