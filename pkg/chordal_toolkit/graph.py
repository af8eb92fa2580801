"""
Simple undirected graphs over non-negative integer vertex ids, plus the
connectivity and separation primitives the clique machinery is built on.
"""

from collections import deque
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict
from pydantic_core import core_schema

from .errors import InvalidArgumentError

Edge = Tuple[int, int]


class VertexSet(tuple):
    """Sorted, duplicate-free tuple of vertex ids with exact set semantics."""

    def __new__(cls, members: Iterable[int] = ()):
        return super().__new__(cls, sorted(set(members)))

    def __and__(self, other: Iterable[int]) -> "VertexSet":
        return VertexSet(set(self).intersection(other))

    def __or__(self, other: Iterable[int]) -> "VertexSet":
        return VertexSet(set(self).union(other))

    def __sub__(self, other: Iterable[int]) -> "VertexSet":
        return VertexSet(set(self).difference(other))

    def issubset(self, other: Iterable[int]) -> bool:
        return set(self).issubset(other)

    def issuperset(self, other: Iterable[int]) -> bool:
        return set(self).issuperset(other)

    def is_proper_subset(self, other: Iterable[int]) -> bool:
        mine, theirs = set(self), set(other)
        return mine < theirs

    def isdisjoint(self, other: Iterable[int]) -> bool:
        return set(self).isdisjoint(other)

    def __repr__(self) -> str:
        return "{" + ",".join(str(v) for v in self) + "}"

    @classmethod
    def __get_pydantic_core_schema__(cls, source: Any, handler: Any) -> core_schema.CoreSchema:
        return core_schema.no_info_after_validator_function(
            cls,
            core_schema.list_schema(core_schema.int_schema(ge=0)),
            serialization=core_schema.plain_serializer_function_ser_schema(list),
        )


def _check_vertex(v: Any) -> int:
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise InvalidArgumentError(f"vertex ids must be non-negative integers, got {v!r}")
    return v


class Graph:
    """Immutable simple graph.

    Vertices may be sparse; every listing is sorted by id so that two graphs
    built from the same data in any order compare and print identically.
    """

    __slots__ = ("_adj", "_vertices")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Edge] = ()):
        adj: Dict[int, set] = {}
        for v in vertices:
            adj.setdefault(_check_vertex(v), set())
        for u, v in edges:
            _check_vertex(u)
            _check_vertex(v)
            if u == v:
                raise InvalidArgumentError(f"self-loop on vertex {u}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self._adj: Dict[int, FrozenSet[int]] = {v: frozenset(ns) for v, ns in adj.items()}
        self._vertices: Tuple[int, ...] = tuple(sorted(adj))

    # ── basic queries ─────────────────────────────────────────────
    @property
    def vertices(self) -> Tuple[int, ...]:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self._adj[v])

    def neighbor_set(self, v: int) -> FrozenSet[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> List[Edge]:
        return [(u, v) for u in self._vertices for v in sorted(self._adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(len(ns) for ns in self._adj.values()) // 2

    def is_clique(self, members: Iterable[int]) -> bool:
        vs = list(members)
        for i, u in enumerate(vs):
            if u not in self._adj:
                return False
            for v in vs[i + 1:]:
                if v not in self._adj[u]:
                    return False
        return True

    # ── derived graphs ────────────────────────────────────────────
    def induced_subgraph(self, members: Iterable[int]) -> "Graph":
        keep = set(members)
        missing = keep.difference(self._adj)
        if missing:
            raise InvalidArgumentError(f"vertices {sorted(missing)} are not in the graph")
        return Graph(keep, ((u, v) for u, v in self.edges() if u in keep and v in keep))

    def relabel(self, mapping: Mapping[int, int]) -> "Graph":
        images = [mapping[v] for v in self._vertices]
        if len(set(images)) != len(images):
            raise InvalidArgumentError("relabel mapping is not injective")
        return Graph(images, ((mapping[u], mapping[v]) for u, v in self.edges()))

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(self._vertices)
        h.add_edges_from(self.edges())
        return h

    @classmethod
    def from_networkx(cls, h: nx.Graph) -> "Graph":
        return cls(h.nodes(), h.edges())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(self.edges())))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def disjoint_union(g: Graph, h: Graph) -> Tuple[Graph, Dict[int, int]]:
    """Place h after g; returns the union and the relabelling applied to h."""
    offset = (max(g.vertices) + 1) if g.n else 0
    shift = {v: offset + i for i, v in enumerate(h.vertices)}
    moved = h.relabel(shift)
    return Graph(g.vertices + moved.vertices, g.edges() + moved.edges()), shift


def _bfs(g: Graph, start: int, allowed: Optional[FrozenSet[int]] = None) -> List[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in g.neighbor_set(x):
            if y not in seen and (allowed is None or y in allowed):
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def connected_components(g: Graph) -> List[VertexSet]:
    components: List[VertexSet] = []
    placed: set = set()
    for v in g.vertices:
        if v in placed:
            continue
        comp = _bfs(g, v)
        placed.update(comp)
        components.append(VertexSet(comp))
    return components


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


class SeparatorReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    separator: VertexSet
    components: List[VertexSet]
    component_of: Dict[int, int]

    def same_side(self, u: int, v: int) -> bool:
        return self.component_of[u] == self.component_of[v]

    def component_containing(self, members: Iterable[int]) -> Optional[int]:
        """Index of the single component holding every non-separator member, if any."""
        indices = {self.component_of[v] for v in members if v in self.component_of}
        return indices.pop() if len(indices) == 1 else None


def delete_vertices(g: Graph, s: Iterable[int]) -> SeparatorReport:
    separator = VertexSet(s)
    missing = [v for v in separator if v not in g]
    if missing:
        raise InvalidArgumentError(f"separator vertices {missing} are not in the graph")
    rest = g.induced_subgraph(set(g.vertices).difference(separator))
    components = connected_components(rest)
    component_of = {v: i for i, comp in enumerate(components) for v in comp}
    return SeparatorReport(separator=separator, components=components, component_of=component_of)


def shortest_avoiding_path(
    g: Graph, s: Iterable[int], from_: Iterable[int], to: Iterable[int]
) -> Optional[List[int]]:
    """Lexicographically smallest shortest path from ``from_`` to ``to``.

    Interior vertices avoid ``s`` and both end sets. Endpoints lying in ``s``
    are ignored. Returns None when no such path exists.
    """
    blocked, sources_in, targets_in = VertexSet(s), VertexSet(from_), VertexSet(to)
    if not sources_in or not targets_in:
        raise InvalidArgumentError("path end sets must be non-empty")
    for v in sources_in + targets_in:
        if v not in g:
            raise InvalidArgumentError(f"vertex {v} is not in the graph")

    sources = sources_in - blocked
    targets = targets_in - blocked
    if not sources or not targets:
        return None
    common = sources & targets
    if common:
        return [common[0]]

    interior = frozenset(g.vertices) - set(blocked) - set(sources_in) - set(targets_in)
    target_set = frozenset(targets)

    # distance to the nearest target, walking through interior vertices only
    dist: Dict[int, int] = {t: 0 for t in targets}
    queue = deque(targets)
    while queue:
        x = queue.popleft()
        for y in g.neighbor_set(x):
            if y in interior and y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)

    def _steps_from(u: int) -> Optional[int]:
        best = None
        for y in g.neighbor_set(u):
            if y in target_set or y in interior:
                if y in dist and (best is None or dist[y] + 1 < best):
                    best = dist[y] + 1
        return best

    reach = {u: _steps_from(u) for u in sources}
    finite = [d for d in reach.values() if d is not None]
    if not finite:
        return None
    length = min(finite)
    current = min(u for u, d in reach.items() if d == length)
    path = [current]
    remaining = length
    while remaining > 0:
        remaining -= 1
        if remaining == 0:
            step = min(y for y in g.neighbor_set(current) if y in target_set)
        else:
            step = min(
                y for y in g.neighbor_set(current) if y in interior and dist.get(y) == remaining
            )
        path.append(step)
        current = step
    return path
