"""
Clique trees of chordal graphs.

A spanning tree of C_R(G) is a clique tree exactly when it has maximum
weight under a legitimate weighting, so construction is a greedy maximum
weight spanning tree over the reduced clique graph. The remaining helpers
build the clique sequences and C_R paths used to audit that fact.
"""

import logging
from collections import deque
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Set, Tuple, Union

from networkx.utils import UnionFind

from .cliquegraph import (
    CliqueGraph,
    CliqueGraphEdge,
    CliqueGraphView,
    WeightingPolicy,
    build_clique_graph,
    is_separating_pair,
)
from .errors import DisconnectedError, InvalidArgumentError, LemmaViolationError, NoPathError
from .graph import Graph, VertexSet, is_connected, shortest_avoiding_path, delete_vertices

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
AnyCliqueGraph = Union[CliqueGraph, CliqueGraphView]


def _base(cg: AnyCliqueGraph) -> CliqueGraph:
    return cg.parent if isinstance(cg, CliqueGraphView) else cg


def _pair(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


class CliqueTree:
    """Spanning tree over clique indices, edges drawn from C(G)."""

    def __init__(self, cg: AnyCliqueGraph, pairs: Iterable[Pair]):
        self.cg = _base(cg)
        edges: Dict[Pair, CliqueGraphEdge] = {}
        for a, b in pairs:
            edge = self.cg.edge_between(a, b)
            if edge is None:
                raise InvalidArgumentError(f"cliques {a} and {b} are not adjacent in the clique graph")
            edges[edge.pair] = edge
        self.tree_edges: List[CliqueGraphEdge] = [edges[p] for p in sorted(edges)]
        self.total_weight: int = sum(e.weight for e in self.tree_edges)
        self._adj: Dict[int, List[int]] = {i: [] for i in self.cg.nodes()}
        for e in self.tree_edges:
            self._adj[e.a].append(e.b)
            self._adj[e.b].append(e.a)

    def edge_pairs(self) -> FrozenSet[Pair]:
        return frozenset(e.pair for e in self.tree_edges)

    def is_spanning(self) -> bool:
        k = self.cg.node_count
        if len(self.tree_edges) != max(k - 1, 0):
            return False
        return k == 0 or len(self._reach(0)) == k

    def _reach(self, start: int) -> Dict[int, Optional[int]]:
        parent: Dict[int, Optional[int]] = {start: None}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in sorted(self._adj[x]):
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
        return parent

    def path(self, a: int, b: int) -> List[int]:
        parent = self._reach(a)
        if b not in parent:
            raise InvalidArgumentError(f"cliques {a} and {b} are not connected in the tree")
        nodes = [b]
        while nodes[-1] != a:
            nodes.append(parent[nodes[-1]])
        return nodes[::-1]

    def path_edges(self, a: int, b: int) -> List[CliqueGraphEdge]:
        nodes = self.path(a, b)
        return [self.cg.edge_between(x, y) for x, y in zip(nodes, nodes[1:])]

    @cached_property
    def vertex_verdicts(self) -> Dict[int, bool]:
        """For each host vertex: do the cliques containing it induce a subtree?"""
        verdicts: Dict[int, bool] = {}
        for v, holders in self.cg.catalog.membership.items():
            # an induced sub-forest is connected iff it has one edge fewer than nodes
            inside = sum(1 for e in self.tree_edges if v in e.intersection)
            verdicts[v] = inside == len(holders) - 1
        return verdicts

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CliqueTree):
            return NotImplemented
        return self.cg is other.cg and self.edge_pairs() == other.edge_pairs()

    def __hash__(self) -> int:
        return hash(self.edge_pairs())

    def __repr__(self) -> str:
        return f"CliqueTree(edges={[e.pair for e in self.tree_edges]}, weight={self.total_weight})"


def tree_text(t: CliqueTree) -> str:
    """Indented rendering rooted at clique 0, one clique per line."""
    if not t.cg.node_count:
        return ""
    lines: List[str] = []
    seen: Set[int] = set()

    def _walk(node: int, depth: int, weight: Optional[int]) -> None:
        seen.add(node)
        label = f"[{node}] {t.cg.catalog[node]!r}"
        if weight is not None:
            label += f"  (w={weight})"
        lines.append("  " * depth + label)
        for child in sorted(t._adj[node]):
            if child not in seen:
                _walk(child, depth + 1, t.cg.edge_between(node, child).weight)

    for root in t.cg.nodes():
        if root not in seen:
            _walk(root, 0, None)
    return "\n".join(lines)


# ──────────────────────────────
# Recognition and construction
# ──────────────────────────────
def is_clique_tree(g: Graph, t: CliqueTree) -> bool:
    if not t.is_spanning():
        raise InvalidArgumentError("tree does not span the clique catalog")
    if g != t.cg.host:
        raise InvalidArgumentError("tree was built for a different graph")
    return all(t.vertex_verdicts.values())


def max_weight_spanning_tree(cg: AnyCliqueGraph, reduced_only: bool = False) -> CliqueTree:
    source: AnyCliqueGraph = cg.reduced() if reduced_only and isinstance(cg, CliqueGraph) else cg
    k = source.node_count
    if k == 0:
        raise DisconnectedError("graph has no cliques")

    forest = UnionFind(range(k))
    chosen: List[Pair] = []
    for e in sorted(source.edges, key=lambda e: (-e.weight, e.a, e.b)):
        if forest[e.a] != forest[e.b]:
            forest.union(e.a, e.b)
            chosen.append(e.pair)
    if len(chosen) != k - 1:
        raise DisconnectedError(
            f"clique graph is disconnected: spanning forest has {len(chosen)} of {k - 1} edges"
        )
    return CliqueTree(source, chosen)


def clique_tree(g: Graph, policy: Optional[WeightingPolicy] = None) -> CliqueTree:
    cg = build_clique_graph(g, policy)
    if not is_connected(g):
        raise DisconnectedError("a clique tree needs a connected graph")
    t = max_weight_spanning_tree(cg, reduced_only=True)
    if not is_clique_tree(g, t):
        bad = sorted(v for v, ok in t.vertex_verdicts.items() if not ok)
        raise LemmaViolationError(
            "maximum-weight spanning tree of C_R is not a clique tree",
            witness={"tree": sorted(t.edge_pairs()), "vertices": bad},
        )
    logger.debug(f"Clique tree of weight {t.total_weight} over {cg.node_count} cliques")
    return t


# ──────────────────────────────
# Constructive path laws
# ──────────────────────────────
def clique_sequence(g: Graph, c: Iterable[int], c2: Iterable[int], s: Iterable[int]) -> List[VertexSet]:
    c, c2, s = VertexSet(c), VertexSet(c2), VertexSet(s)
    # validates maximality and distinctness
    is_separating_pair(g, c, c2)
    common = c & c2
    if not common.issubset(s):
        raise InvalidArgumentError(f"{s!r} must contain the intersection {common!r}")

    path = shortest_avoiding_path(g, s, c - c2, c2 - c)
    if path is None:
        raise NoPathError(f"no {s!r}-avoiding path from {c - c2!r} to {c2 - c!r}")

    sequence = [common | (path[i], path[i + 1]) for i in range(len(path) - 1)]
    for members in sequence:
        if not g.is_clique(members):
            raise LemmaViolationError(
                f"{members!r} along a shortest avoiding path is not a clique",
                witness={"path": path, "set": list(members)},
            )
    return sequence


def _loop_erase(walk: List[int]) -> List[int]:
    path: List[int] = []
    where: Dict[int, int] = {}
    for node in walk:
        if node in where:
            cut = where[node]
            for dropped in path[cut + 1:]:
                del where[dropped]
            path = path[:cut + 1]
        else:
            where[node] = len(path)
            path.append(node)
    return path


def crg_expansion_path(g: Graph, cg: AnyCliqueGraph, a: int, b: int) -> List[int]:
    """C_R path from ``a`` to ``b`` whose consecutive intersections all
    properly contain ``cliques[a] & cliques[b]``.

    Requires the two cliques to intersect without being C_R-adjacent.
    """
    base = _base(cg)
    edge = base.edge_between(a, b) if a != b else None
    if edge is None:
        raise InvalidArgumentError(f"cliques {a} and {b} must be distinct and intersect")
    if edge.separating:
        raise InvalidArgumentError(f"cliques {a} and {b} are already adjacent in C_R")

    catalog = base.catalog

    def _expand(x: int, y: int, depth: int) -> List[int]:
        if depth > g.n:
            raise LemmaViolationError(
                f"expansion recursion exceeded {g.n} levels", witness={"pair": [x, y]}
            )
        cx, cy = catalog[x], catalog[y]
        s = cx & cy
        steps = shortest_avoiding_path(g, s, cx - cy, cy - cx)
        if steps is None:
            raise LemmaViolationError(
                f"non-adjacent cliques {x} and {y} have no avoiding path", witness={"pair": [x, y]}
            )
        chain = [x]
        for u, v in zip(steps, steps[1:]):
            chain.append(min(catalog.index_containing(s | (u, v))))
        chain.append(y)

        walk = [x]
        for d, d2 in zip(chain, chain[1:]):
            if d == d2:
                continue
            if base.edge_between(d, d2).separating:
                walk.append(d2)
            else:
                logger.debug(f"Expanding {d}-{d2} at depth {depth + 1}")
                walk.extend(_expand(d, d2, depth + 1)[1:])
        return _loop_erase(walk)

    result = _expand(a, b, 0)
    floor = edge.intersection
    for x, y in zip(result, result[1:]):
        step = base.edge_between(x, y)
        if step is None or not step.separating or not floor.is_proper_subset(step.intersection):
            raise LemmaViolationError(
                f"expansion path {result} breaks containment of {floor!r}",
                witness={"path": result, "step": [x, y]},
            )
    return result


class PathWeightFloor(NamedTuple):
    min_weight: int
    attains_sigma: bool


def _require_clique_tree(g: Graph, t: CliqueTree) -> None:
    if not t.is_spanning() or not is_clique_tree(g, t):
        raise InvalidArgumentError("argument is not a clique tree of the graph")


def tree_path_weight_floor(g: Graph, t: CliqueTree, a: int, b: int) -> PathWeightFloor:
    _require_clique_tree(g, t)
    edge = t.cg.edge_between(a, b) if a != b else None
    if edge is None:
        raise InvalidArgumentError(f"cliques {a} and {b} are not adjacent in C(G)")

    lowest = min(e.weight for e in t.path_edges(a, b))
    floor = PathWeightFloor(min_weight=lowest, attains_sigma=lowest == edge.weight)
    if floor.min_weight < edge.weight or (edge.separating and not floor.attains_sigma):
        raise LemmaViolationError(
            f"tree path {a}->{b} has minimum weight {floor.min_weight}, sigma is {edge.weight}",
            witness={"tree": sorted(t.edge_pairs()), "pair": [a, b]},
        )
    return floor


def edge_separation_check(
    g: Graph, t: CliqueTree, e: Union[Pair, CliqueGraphEdge], d: int, d2: int
) -> bool:
    """Do ``d - S`` and ``d2 - S`` fall in different components of ``G - S``,
    where S is the intersection on tree edge ``e``?"""
    _require_clique_tree(g, t)
    pair = e.pair if isinstance(e, CliqueGraphEdge) else _pair(*e)
    if pair not in t.edge_pairs():
        raise InvalidArgumentError(f"{pair} is not an edge of the tree")
    nodes = t.path(d, d2)
    used = {_pair(x, y) for x, y in zip(nodes, nodes[1:])}
    if pair not in used:
        raise InvalidArgumentError(f"tree path {d}->{d2} does not use edge {pair}")

    s = t.cg.edge_between(*pair).intersection
    report = delete_vertices(g, s)
    left = {report.component_of[v] for v in t.cg.catalog[d] - s}
    right = {report.component_of[v] for v in t.cg.catalog[d2] - s}
    return left.isdisjoint(right)


def union_of_clique_trees(g: Graph, budget=None) -> FrozenSet[Pair]:
    # Import here to avoid circular imports
    from .oracles import all_clique_trees

    union: Set[Pair] = set()
    for t in all_clique_trees(g, budget):
        union.update(t.edge_pairs())
    return frozenset(union)
