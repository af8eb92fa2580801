"""
Clique graph C(G) and reduced clique graph C_R(G).

Every pair of intersecting maximal cliques becomes an edge carrying its
intersection, a separating-pair flag and a weight from the active
weighting policy. The reduced clique graph is the view keeping only the
separating edges.
"""

import logging
from abc import ABC, abstractmethod
from itertools import combinations
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict

from .chordal import CliqueCatalog, maximal_cliques
from .errors import IllegitimateWeightingError, InvalidArgumentError
from .graph import Graph, VertexSet, delete_vertices

logger = logging.getLogger(__name__)


# ──────────────────────────────
# Weighting policies
# ──────────────────────────────
class WeightingPolicy(ABC):
    """Maps clique intersections to non-negative integer weights."""

    name = "policy"

    @abstractmethod
    def evaluate(self, members: VertexSet) -> int:
        ...

    def __call__(self, members: Iterable[int]) -> int:
        return self.evaluate(VertexSet(members))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name})"


class CardinalityPolicy(WeightingPolicy):
    name = "cardinality"

    def evaluate(self, members: VertexSet) -> int:
        return len(members)


class VertexWeightPolicy(WeightingPolicy):
    name = "vertex-weights"

    def __init__(self, weights: Mapping[int, int]):
        for v, w in weights.items():
            if isinstance(w, bool) or not isinstance(w, int) or w <= 0:
                raise InvalidArgumentError(f"weight of vertex {v} must be a positive integer, got {w!r}")
        self.weights: Dict[int, int] = dict(weights)

    def evaluate(self, members: VertexSet) -> int:
        missing = [v for v in members if v not in self.weights]
        if missing:
            raise InvalidArgumentError(f"no weight given for vertices {missing}")
        return sum(self.weights[v] for v in members)


class CallablePolicy(WeightingPolicy):
    def __init__(self, fn: Callable[[VertexSet], int], name: str = "callable"):
        self.fn = fn
        self.name = name

    def evaluate(self, members: VertexSet) -> int:
        return self.fn(members)


def load_vertex_weights(path: Union[str, Path]) -> Dict[int, int]:
    """Read ``vertex weight`` lines; ``#`` starts a comment."""
    weights: Dict[int, int] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidArgumentError(f"{path}:{lineno}: expected 'vertex weight', got {raw!r}")
        try:
            vertex, weight = int(parts[0]), int(parts[1])
        except ValueError:
            raise InvalidArgumentError(f"{path}:{lineno}: non-integer entry {raw!r}")
        if weight <= 0:
            raise InvalidArgumentError(f"{path}:{lineno}: weights must be strictly positive")
        weights[vertex] = weight
    return weights


def policy_from_spec(spec: str) -> WeightingPolicy:
    """Parse ``cardinality`` or ``vertex-weights:<file>``."""
    if spec == "cardinality":
        return CardinalityPolicy()
    if spec.startswith("vertex-weights:"):
        return VertexWeightPolicy(load_vertex_weights(spec.split(":", 1)[1]))
    raise InvalidArgumentError(f"unknown policy {spec!r}")


# ──────────────────────────────
# Legitimacy
# ──────────────────────────────
def weighting_violation(
    catalog: CliqueCatalog, policy: WeightingPolicy
) -> Optional[Tuple[VertexSet, VertexSet]]:
    """First (X, X') breaking legitimacy on the realized intersections, if any."""
    empty = VertexSet()
    domain = {empty}
    for c, c2 in combinations(catalog.cliques, 2):
        domain.add(c & c2)
    values = {x: policy(x) for x in domain}

    if values[empty] != 0:
        return empty, empty
    for x in sorted(domain):
        if values[x] < 0:
            return x, x
    for x in sorted(domain):
        for y in sorted(domain):
            if x.is_proper_subset(y) and values[x] >= values[y]:
                return x, y
    return None


def validate_weighting(catalog: CliqueCatalog, policy: WeightingPolicy) -> bool:
    return weighting_violation(catalog, policy) is None


# ──────────────────────────────
# Separating pairs
# ──────────────────────────────
def _is_maximal_clique(g: Graph, c: VertexSet) -> bool:
    if not c or not g.is_clique(c):
        return False
    outside = set(g.vertices).difference(c)
    return not any(c.issubset(g.neighbor_set(v)) for v in outside)


def _separates(g: Graph, c: VertexSet, c2: VertexSet) -> bool:
    report = delete_vertices(g, c & c2)
    left = {report.component_of[v] for v in c - c2}
    right = {report.component_of[v] for v in c2 - c}
    return left.isdisjoint(right)


def is_separating_pair(g: Graph, c: Iterable[int], c2: Iterable[int]) -> bool:
    c, c2 = VertexSet(c), VertexSet(c2)
    for clique in (c, c2):
        if not _is_maximal_clique(g, clique):
            raise InvalidArgumentError(f"{clique!r} is not a maximal clique")
    if c == c2:
        raise InvalidArgumentError("a separating pair needs two distinct cliques")
    return _separates(g, c, c2)


# ──────────────────────────────
# Clique graph containers
# ──────────────────────────────
class CliqueGraphEdge(BaseModel):
    model_config = ConfigDict(frozen=True)

    a: int
    b: int
    intersection: VertexSet
    separating: bool
    weight: int

    @property
    def pair(self) -> Tuple[int, int]:
        return self.a, self.b


class _CliqueEdgeSet:
    def __init__(self, host: Graph, catalog: CliqueCatalog, edges: List[CliqueGraphEdge],
                 policy: WeightingPolicy):
        self.host = host
        self.catalog = catalog
        self.edges = edges
        self.policy = policy
        self._by_pair: Dict[Tuple[int, int], CliqueGraphEdge] = {e.pair: e for e in edges}

    @property
    def node_count(self) -> int:
        return len(self.catalog)

    def nodes(self) -> List[int]:
        return list(range(len(self.catalog)))

    def edge_between(self, a: int, b: int) -> Optional[CliqueGraphEdge]:
        return self._by_pair.get((min(a, b), max(a, b)))

    def is_adjacent(self, a: int, b: int) -> bool:
        return self.edge_between(a, b) is not None

    def clique_pairs(self) -> List[Tuple[int, int]]:
        return [e.pair for e in self.edges]

    def as_graph(self) -> Graph:
        return Graph(self.nodes(), self.clique_pairs())

    def __repr__(self) -> str:
        return f"{type(self).__name__}(nodes={self.node_count}, edges={len(self.edges)})"


class CliqueGraph(_CliqueEdgeSet):
    """C(G): every non-disjoint clique pair, in (a, b) order."""

    def reduced(self) -> "CliqueGraphView":
        return reduced_subgraph(self)


class CliqueGraphView(_CliqueEdgeSet):
    """C_R(G): the separating edges of a parent clique graph."""

    def __init__(self, parent: CliqueGraph):
        super().__init__(parent.host, parent.catalog,
                         [e for e in parent.edges if e.separating], parent.policy)
        self.parent = parent


def build_clique_graph(g: Graph, policy: Optional[WeightingPolicy] = None) -> CliqueGraph:
    policy = policy or CardinalityPolicy()
    catalog = maximal_cliques(g)

    violation = weighting_violation(catalog, policy)
    if violation is not None:
        x, y = violation
        raise IllegitimateWeightingError(
            f"policy {policy.name} is not a legitimate weighting: "
            f"sigma({x!r})={policy(x)} vs sigma({y!r})={policy(y)}",
            witness={"subset": list(x), "superset": list(y)},
        )

    edges: List[CliqueGraphEdge] = []
    for a, b in combinations(range(len(catalog)), 2):
        c, c2 = catalog[a], catalog[b]
        inter = c & c2
        if not inter:
            continue
        edges.append(CliqueGraphEdge(
            a=a, b=b, intersection=inter,
            separating=_separates(g, c, c2),
            weight=policy(inter),
        ))

    logger.debug(
        f"Built clique graph: {len(catalog)} cliques, {len(edges)} edges, "
        f"{sum(e.separating for e in edges)} separating ({policy.name})"
    )
    return CliqueGraph(g, catalog, edges, policy)


def reduced_subgraph(cg: CliqueGraph) -> CliqueGraphView:
    return CliqueGraphView(cg)
