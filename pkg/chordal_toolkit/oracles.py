"""
Brute-force reference implementations.

Nothing here reuses the fast paths it audits: cliques come from networkx,
separation from explicit path search, tree counts from the matrix-tree
theorem.
"""

import logging
from itertools import combinations
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple

import networkx as nx
from networkx.utils import UnionFind
from pydantic import BaseModel, ConfigDict, PositiveInt

from .cliquegraph import WeightingPolicy, build_clique_graph
from .cliquetree import CliqueTree, is_clique_tree
from .errors import DisconnectedError, TooLargeError
from .graph import Graph, VertexSet, is_connected
from .models import ClauseResult, Theorem2Report
from .settings import settings

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
TreeEdges = FrozenSet[Pair]


class EnumerationBudget(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_nodes: PositiveInt = settings.BUDGET
    max_trees: PositiveInt = settings.MAX_TREES

    @classmethod
    def from_settings(cls) -> "EnumerationBudget":
        return cls(max_nodes=settings.BUDGET, max_trees=settings.MAX_TREES)


def _budget(budget: Optional[EnumerationBudget]) -> EnumerationBudget:
    return budget or EnumerationBudget.from_settings()


# ──────────────────────────────
# Spanning trees
# ──────────────────────────────
def _bareiss_determinant(matrix: List[List[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    m = [row[:] for row in matrix]
    size = len(m)
    if size == 0:
        return 1
    sign, previous = 1, 1
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // previous
        previous = m[k][k]
    return sign * m[size - 1][size - 1]


def kirchhoff_count(h: Graph) -> int:
    """Number of spanning trees (0 for disconnected or empty graphs)."""
    if h.n == 0:
        return 0
    index = {v: i for i, v in enumerate(h.vertices)}
    laplacian = [[0] * h.n for _ in range(h.n)]
    for u, v in h.edges():
        a, b = index[u], index[v]
        laplacian[a][a] += 1
        laplacian[b][b] += 1
        laplacian[a][b] -= 1
        laplacian[b][a] -= 1
    minor = [row[1:] for row in laplacian[1:]]
    return _bareiss_determinant(minor)


def all_spanning_trees(h: Graph, budget: Optional[EnumerationBudget] = None) -> Iterator[TreeEdges]:
    """Every spanning tree of ``h`` exactly once, by include/exclude on sorted edges."""
    budget = _budget(budget)
    if h.n > budget.max_nodes:
        raise TooLargeError(f"{h.n} nodes exceeds enumeration budget {budget.max_nodes}")
    if h.n == 0:
        return
    if not is_connected(h):
        raise DisconnectedError("spanning trees need a connected graph")
    expected = kirchhoff_count(h)
    if expected > budget.max_trees:
        raise TooLargeError(f"{expected} spanning trees exceeds budget {budget.max_trees}")

    edges = h.edges()
    vertices = h.vertices
    target = h.n - 1

    def _still_spans(chosen: List[Pair], start: int) -> bool:
        forest = UnionFind(vertices)
        for u, v in chosen:
            forest.union(u, v)
        for u, v in edges[start:]:
            forest.union(u, v)
        return len({forest[v] for v in vertices}) == 1

    def _search(i: int, chosen: List[Pair], label: Dict[int, int]) -> Iterator[TreeEdges]:
        if len(chosen) == target:
            yield frozenset(chosen)
            return
        if i == len(edges):
            return
        u, v = edges[i]
        if label[u] != label[v]:
            keep, gone = label[u], label[v]
            merged = {x: (keep if c == gone else c) for x, c in label.items()}
            yield from _search(i + 1, chosen + [(u, v)], merged)
        if _still_spans(chosen, i + 1):
            yield from _search(i + 1, chosen, label)

    yield from _search(0, [], {v: v for v in vertices})


def all_clique_trees(g: Graph, budget: Optional[EnumerationBudget] = None, cg=None) -> Iterator[CliqueTree]:
    budget = _budget(budget)
    cg = cg or build_clique_graph(g)
    if cg.node_count > budget.max_nodes:
        raise TooLargeError(f"{cg.node_count} maximal cliques exceeds budget {budget.max_nodes}")
    for pairs in all_spanning_trees(cg.as_graph(), budget):
        t = CliqueTree(cg, pairs)
        if is_clique_tree(g, t):
            yield t


# ──────────────────────────────
# Definition-direct structures
# ──────────────────────────────
def definition_direct_crg(g: Graph, budget: Optional[EnumerationBudget] = None) -> Set[Tuple[VertexSet, VertexSet]]:
    """C_R edges as clique pairs, found by searching for an explicit S-avoiding path."""
    budget = _budget(budget)
    nxg = g.to_networkx()
    cliques = sorted(VertexSet(c) for c in nx.find_cliques(nxg)) if g.n else []
    if len(cliques) > budget.max_nodes:
        raise TooLargeError(f"{len(cliques)} maximal cliques exceeds budget {budget.max_nodes}")

    reduced: Set[Tuple[VertexSet, VertexSet]] = set()
    for c, c2 in combinations(cliques, 2):
        s = c & c2
        if not s:
            continue
        avoiding = nx.restricted_view(nxg, list(s), [])
        joined = any(
            nx.has_path(avoiding, u, w)
            for u in c - c2
            for w in c2 - c
        )
        if not joined:
            reduced.add((c, c2))
    return reduced


def crg_clique_pairs(cg) -> Set[Tuple[VertexSet, VertexSet]]:
    """Fast-path C_R edges in the same representation as the oracle."""
    cat = cg.catalog
    return {(cat[e.a], cat[e.b]) for e in cg.edges if e.separating}


def brute_force_maximal_cliques(g: Graph, limit: int = 16) -> List[VertexSet]:
    if g.n > limit:
        raise TooLargeError(f"{g.n} vertices exceeds brute-force limit {limit}")
    vertices = g.vertices
    cliques: List[VertexSet] = []
    for mask in range(1, 1 << g.n):
        members = [vertices[i] for i in range(g.n) if mask >> i & 1]
        if not g.is_clique(members):
            continue
        outside = (v for v in vertices if v not in members)
        if any(all(g.has_edge(v, u) for u in members) for v in outside):
            continue
        cliques.append(VertexSet(members))
    return sorted(cliques)


def brute_force_is_chordal(g: Graph, limit: int = 14) -> bool:
    """No vertex subset of size >= 4 induces a connected 2-regular graph."""
    if g.n > limit:
        raise TooLargeError(f"{g.n} vertices exceeds brute-force limit {limit}")
    for size in range(4, g.n + 1):
        for members in combinations(g.vertices, size):
            sub = g.induced_subgraph(members)
            if all(sub.degree(v) == 2 for v in members) and is_connected(sub):
                return False
    return True


# ──────────────────────────────
# Clique-tree characterisation audit
# ──────────────────────────────
def verify_theorem2_instance(
    g: Graph, policy: Optional[WeightingPolicy] = None, budget: Optional[EnumerationBudget] = None
) -> Theorem2Report:
    budget = _budget(budget)
    cg = build_clique_graph(g, policy)
    if not is_connected(g):
        raise DisconnectedError("clique-tree audit needs a connected graph")
    if cg.node_count > budget.max_nodes:
        raise TooLargeError(f"{cg.node_count} maximal cliques exceeds budget {budget.max_nodes}")

    reduced_pairs = {e.pair for e in cg.edges if e.separating}
    weight_of = {e.pair: e.weight for e in cg.edges}

    def _weight(tree: TreeEdges) -> int:
        return sum(weight_of[p] for p in tree)

    spanning = list(all_spanning_trees(cg.as_graph(), budget))
    clique_trees = {tree for tree in spanning if is_clique_tree(g, CliqueTree(cg, tree))}

    best = max(_weight(t) for t in spanning)
    mwst_full = {t for t in spanning if _weight(t) == best}
    within_crg = [t for t in spanning if t <= reduced_pairs]
    best_crg = max(_weight(t) for t in within_crg) if within_crg else None
    mwst_reduced = {t for t in within_crg if _weight(t) == best_crg}

    def _tree_witness(left: Set[TreeEdges], right: Set[TreeEdges]) -> Optional[Dict]:
        diff = sorted(sorted(t) for t in left.symmetric_difference(right))
        return {"tree": diff[0]} if diff else None

    stray = sorted(p for t in clique_trees for p in t if p not in reduced_pairs)
    covered = {p for t in clique_trees for p in t}
    uncovered = sorted(reduced_pairs - covered)
    heavy_stray = sorted(p for t in mwst_full for p in t if p not in reduced_pairs)

    clauses = [
        ClauseResult(
            clause="a", description="clique trees are exactly the maximum-weight spanning trees of C_R",
            passed=clique_trees == mwst_reduced, witness=_tree_witness(clique_trees, mwst_reduced),
        ),
        ClauseResult(
            clause="b", description="clique trees are exactly the maximum-weight spanning trees of C(G)",
            passed=clique_trees == mwst_full, witness=_tree_witness(clique_trees, mwst_full),
        ),
        ClauseResult(
            clause="c", description="every clique-tree edge is a C_R edge",
            passed=not stray, witness={"edges": stray} if stray else None,
        ),
        ClauseResult(
            clause="d", description="every C_R edge lies in some clique tree",
            passed=not uncovered, witness={"edges": uncovered} if uncovered else None,
        ),
        ClauseResult(
            clause="e", description="no non-separating edge lies in a maximum-weight spanning tree of C(G)",
            passed=not heavy_stray, witness={"edges": heavy_stray} if heavy_stray else None,
        ),
    ]
    report = Theorem2Report(
        policy=cg.policy.name,
        cliques=cg.node_count,
        spanning_trees=len(spanning),
        clique_trees=len(clique_trees),
        max_weight=best,
        clauses=clauses,
    )
    if not report.passed:
        logger.warning(f"⚠️ Clique-tree audit failed on {g!r}: {[c.clause for c in clauses if not c.passed]}")
    return report
