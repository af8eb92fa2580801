"""
Structural analysis of (reduced) clique graphs: induced cycles, minimal
edges and the component trichotomy around them, the spanning-tree
characterisation of clique graphs, canonical forms for small graphs, and
the paths on which the "every C_R path is a clique path" claim breaks.
"""

import logging
from enum import Enum
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple, Union

import networkx as nx
from pydantic import BaseModel, ConfigDict, field_validator

from .chordal import maximal_cliques
from .cliquegraph import CliqueGraph, CliqueGraphView, build_clique_graph
from .errors import InvalidArgumentError, LemmaViolationError, TooLargeError
from .graph import Graph, VertexSet, delete_vertices, is_connected
from .oracles import EnumerationBudget, all_spanning_trees
from .settings import settings

logger = logging.getLogger(__name__)

GraphLike = Union[Graph, CliqueGraph, CliqueGraphView]


def _as_graph(h: GraphLike) -> Graph:
    return h if isinstance(h, Graph) else h.as_graph()


def _reduced(cg: Union[CliqueGraph, CliqueGraphView]) -> CliqueGraphView:
    return cg if isinstance(cg, CliqueGraphView) else cg.reduced()


# ──────────────────────────────
# Induced cycles
# ──────────────────────────────
class InducedCycle(BaseModel):
    model_config = ConfigDict(frozen=True)

    nodes: List[int]

    @field_validator("nodes")
    @classmethod
    def _long_enough(cls, value: List[int]) -> List[int]:
        if len(value) < 3 or len(set(value)) != len(value):
            raise ValueError("a cycle needs at least three distinct nodes")
        return value

    @property
    def length(self) -> int:
        return len(self.nodes)

    def edges(self) -> List[Tuple[int, int]]:
        n = len(self.nodes)
        return [(self.nodes[i], self.nodes[(i + 1) % n]) for i in range(n)]


def induced_cycles(h: GraphLike, k: int) -> List[InducedCycle]:
    """All induced k-cycles, each once: lowest node first, smaller neighbour second."""
    if k < 3:
        raise InvalidArgumentError(f"cycle length must be at least 3, got {k}")
    graph = _as_graph(h)
    found: List[InducedCycle] = []

    def _extend(path: List[int]) -> None:
        start, pos = path[0], len(path)
        for w in sorted(graph.neighbor_set(path[-1])):
            if w <= start or w in path:
                continue
            # no chords back into the path interior
            if any(graph.has_edge(w, x) for x in path[1:-1]):
                continue
            closes = graph.has_edge(w, start)
            if pos == k - 1:
                if closes and path[1] < w:
                    found.append(InducedCycle(nodes=path + [w]))
            elif not closes:
                _extend(path + [w])

    for s in graph.vertices:
        for first in sorted(graph.neighbor_set(s)):
            if first > s:
                _extend([s, first])
    return sorted(found, key=lambda c: c.nodes)


def _check_induced(crg: CliqueGraphView, cycle: InducedCycle) -> None:
    nodes = cycle.nodes
    n = len(nodes)
    for i, j in combinations(range(n), 2):
        consecutive = j == i + 1 or (i == 0 and j == n - 1)
        if crg.is_adjacent(nodes[i], nodes[j]) != consecutive:
            raise InvalidArgumentError(f"{nodes} is not an induced cycle of C_R")


def minimal_edges(cg: Union[CliqueGraph, CliqueGraphView], cycle: InducedCycle) -> List[int]:
    """Positions i whose edge (nodes[i], nodes[i+1]) has the smallest intersection."""
    crg = _reduced(cg)
    _check_induced(crg, cycle)
    sizes = [len(crg.edge_between(a, b).intersection) for a, b in cycle.edges()]
    floor = min(sizes)
    return [i for i, size in enumerate(sizes) if size == floor]


class TrichotomyCase(str, Enum):
    I = "i"
    II = "ii"
    III = "iii"


class TrichotomyVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    case: TrichotomyCase
    minimal_edge: Tuple[int, int]
    s: VertexSet
    h0: VertexSet
    h1: VertexSet
    cycle: List[int]


def verify_trichotomy(g: Graph, cg: Union[CliqueGraph, CliqueGraphView], cycle: InducedCycle) -> TrichotomyVerdict:
    """Classify an induced C_R cycle around its first minimal edge.

    With S the intersection on that edge, every C_i - S lies in the
    component of G - S holding C_0 - S or the one holding C_1 - S, and the
    split is one of three shapes (the alternating one only for 4-cycles).
    """
    if cycle.length < 4:
        raise InvalidArgumentError("the trichotomy concerns cycles of length at least 4")
    edges = cycle.edges()
    positions = minimal_edges(cg, cycle)
    c0, c1 = min(tuple(sorted(edges[i])) for i in positions)

    # orient so that nodes start c0, c1
    nodes = list(cycle.nodes)
    at = nodes.index(c0)
    nodes = nodes[at:] + nodes[:at]
    if nodes[1] != c1:
        nodes = [nodes[0]] + nodes[1:][::-1]

    catalog = _reduced(cg).catalog
    s = catalog[c0] & catalog[c1]
    report = delete_vertices(g, s)
    witness = {"cycle": nodes, "s": list(s)}

    sides: List[int] = []
    home: List[int] = []
    for node in nodes:
        index = report.component_containing(catalog[node] - s)
        if index is None:
            raise LemmaViolationError(f"clique {node} minus S is split or empty", witness=witness)
        home.append(index)
    h0, h1 = home[0], home[1]
    if h0 == h1:
        raise LemmaViolationError("minimal edge is not separating", witness=witness)
    for node, index in zip(nodes, home):
        if index not in (h0, h1):
            raise LemmaViolationError(f"clique {node} lies outside both components", witness=witness)
        sides.append(0 if index == h0 else 1)

    rest = sides[2:]
    if all(side == 0 for side in rest):
        case = TrichotomyCase.I
    elif all(side == 1 for side in rest):
        case = TrichotomyCase.II
    elif len(nodes) == 4 and sides == [0, 1, 0, 1]:
        case = TrichotomyCase.III
    else:
        raise LemmaViolationError(f"component pattern {sides} matches no case", witness=witness)

    return TrichotomyVerdict(
        case=case, minimal_edge=(c0, c1), s=s,
        h0=report.components[h0], h1=report.components[h1], cycle=nodes,
    )


def is_cycle_graph(h: GraphLike) -> Optional[int]:
    graph = _as_graph(h)
    if graph.n < 3 or any(graph.degree(v) != 2 for v in graph.vertices):
        return None
    return graph.n if is_connected(graph) else None


# ──────────────────────────────
# Clique-graph characterisation
# ──────────────────────────────
def _tree_path(adj: Dict[int, List[int]], u: int, v: int) -> List[int]:
    parent = {u: None}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            break
        for y in adj[x]:
            if y not in parent:
                parent[y] = x
                stack.append(y)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return path


def sb_check(h: Graph, budget: Optional[EnumerationBudget] = None) -> bool:
    """Is there a spanning tree whose path between any two adjacent
    vertices induces a clique? (brute force over all spanning trees)"""
    for tree in all_spanning_trees(h, budget):
        adj: Dict[int, List[int]] = {v: [] for v in h.vertices}
        for a, b in tree:
            adj[a].append(b)
            adj[b].append(a)
        if all(h.is_clique(_tree_path(adj, u, v)) for u, v in h.edges()):
            return True
    return False


# ──────────────────────────────
# Canonical forms
# ──────────────────────────────
def _refine(graph: Graph, colors: Dict[int, int]) -> Dict[int, int]:
    while True:
        signature = {
            v: (colors[v], tuple(sorted(colors[w] for w in graph.neighbor_set(v))))
            for v in graph.vertices
        }
        ranks = {sig: i for i, sig in enumerate(sorted(set(signature.values())))}
        refined = {v: ranks[signature[v]] for v in graph.vertices}
        if len(ranks) == len(set(colors.values())):
            return refined
        colors = refined


def _twin_representatives(graph: Graph, cell: List[int]) -> List[int]:
    reps: List[int] = []
    for v in cell:
        nv = graph.neighbor_set(v)
        if not any(nv - {r} == graph.neighbor_set(r) - {v} for r in reps):
            reps.append(v)
    return reps


def canonical_form(h: GraphLike) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
    """Isomorphism-invariant certificate: (n, relabelled sorted edge list)."""
    graph = _as_graph(h)

    def _search(colors: Dict[int, int]) -> Tuple[Tuple[int, int], ...]:
        colors = _refine(graph, colors)
        cells: Dict[int, List[int]] = {}
        for v in graph.vertices:
            cells.setdefault(colors[v], []).append(v)
        open_cells = [(len(members), color) for color, members in cells.items() if len(members) > 1]
        if not open_cells:
            return tuple(sorted(
                (min(colors[u], colors[v]), max(colors[u], colors[v])) for u, v in graph.edges()
            ))
        _, target = min(open_cells)
        best = None
        for v in _twin_representatives(graph, cells[target]):
            split = {w: 2 * c + (0 if w == v else 1) for w, c in colors.items()}
            candidate = _search(split)
            if best is None or candidate < best:
                best = candidate
        return best

    return graph.n, _search({v: 0 for v in graph.vertices})


def graphs_isomorphic(h1: GraphLike, h2: GraphLike, guard: Optional[int] = None) -> bool:
    guard = guard or settings.ISO_GUARD
    a, b = _as_graph(h1), _as_graph(h2)
    if max(a.n, b.n) > guard:
        raise TooLargeError(f"isomorphism test limited to {guard} vertices")
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    if sorted(a.degree(v) for v in a) != sorted(b.degree(v) for v in b):
        return False
    return canonical_form(a) == canonical_form(b)


# ──────────────────────────────
# Where C_R paths fail to be clique paths
# ──────────────────────────────
class NonTheoremWitness(BaseModel):
    model_config = ConfigDict(frozen=True)

    path: List[int]
    vertex: int
    extra_cliques: List[VertexSet]


def nontheorem_witnesses(
    g: Graph, cg: Optional[CliqueGraph] = None, max_length: Optional[int] = None
) -> List[NonTheoremWitness]:
    """C_R paths C_0..C_n between non-adjacent ends where some v in C_0 & C_n
    misses every interior clique; each lists the other maximal cliques of
    G[C_0 | ... | C_n] that contain v."""
    cg = cg or build_clique_graph(g)
    crg = cg.reduced()
    nxg = crg.as_graph().to_networkx()
    catalog = cg.catalog
    witnesses: List[NonTheoremWitness] = []

    for a, b in combinations(cg.nodes(), 2):
        shared = catalog[a] & catalog[b]
        if not shared or crg.is_adjacent(a, b):
            continue
        if not nx.has_path(nxg, a, b):
            continue
        for path in sorted(nx.all_simple_paths(nxg, a, b, cutoff=max_length)):
            interior = [catalog[i] for i in path[1:-1]]
            missing = [v for v in shared if not any(v in c for c in interior)]
            if not missing:
                continue
            union = VertexSet(v for i in path for v in catalog[i])
            local = maximal_cliques(g.induced_subgraph(union)).cliques
            on_path = {catalog[i] for i in path}
            for v in missing:
                extra = [c for c in local if v in c and c not in on_path]
                witnesses.append(NonTheoremWitness(path=path, vertex=v, extra_cliques=extra))
    logger.debug(f"{len(witnesses)} non-clique-path witnesses")
    return witnesses
