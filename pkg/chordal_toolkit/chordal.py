"""
Chordality recognition and maximal-clique extraction.

Maximum cardinality search gives a vertex order whose reverse is a perfect
elimination order exactly when the graph is chordal; the clique sweep then
collects each vertex together with its later neighbours.
"""

import logging
from typing import Dict, Iterable, List, Sequence

from pydantic import BaseModel, ConfigDict, field_validator

from .errors import InvalidArgumentError, NotChordalError
from .graph import Graph, VertexSet

logger = logging.getLogger(__name__)


class EliminationOrder(BaseModel):
    model_config = ConfigDict(frozen=True)

    order: List[int]

    @field_validator("order")
    @classmethod
    def _is_permutation(cls, value: List[int]) -> List[int]:
        if len(set(value)) != len(value):
            raise ValueError("elimination order repeats a vertex")
        return value

    def reversed(self) -> "EliminationOrder":
        return EliminationOrder(order=list(reversed(self.order)))


class CliqueCatalog(BaseModel):
    model_config = ConfigDict(frozen=True)

    cliques: List[VertexSet]
    membership: Dict[int, List[int]]

    def __len__(self) -> int:
        return len(self.cliques)

    def __getitem__(self, index: int) -> VertexSet:
        return self.cliques[index]

    def index(self, clique: Iterable[int]) -> int:
        target = VertexSet(clique)
        try:
            return self.cliques.index(target)
        except ValueError:
            raise InvalidArgumentError(f"{target!r} is not a maximal clique of the graph")

    def containing(self, v: int) -> List[int]:
        return self.membership.get(v, [])

    def index_containing(self, members: Iterable[int]) -> List[int]:
        """Indices of every clique that contains all of ``members``."""
        found = None
        for v in members:
            holders = set(self.containing(v))
            found = holders if found is None else found & holders
        return sorted(found) if found is not None else list(range(len(self.cliques)))


def mcs_order(g: Graph) -> EliminationOrder:
    weight = {v: 0 for v in g.vertices}
    order: List[int] = []
    while weight:
        # highest numbered-neighbour count, smallest id on ties
        v = min(weight, key=lambda u: (-weight[u], u))
        del weight[v]
        order.append(v)
        for w in g.neighbor_set(v):
            if w in weight:
                weight[w] += 1
    return EliminationOrder(order=order)


def is_peo(g: Graph, order: Sequence[int]) -> bool:
    """True iff every vertex's later neighbours in ``order`` form a clique."""
    if sorted(order) != list(g.vertices):
        raise InvalidArgumentError("order must be a permutation of the graph's vertices")
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.neighbor_set(v) if position[w] > position[v]]
        if not g.is_clique(later):
            return False
    return True


def is_chordal(g: Graph) -> bool:
    return is_peo(g, mcs_order(g).reversed().order)


def simplicial_vertices(g: Graph) -> VertexSet:
    return VertexSet(v for v in g.vertices if g.is_clique(g.neighbor_set(v)))


def maximal_cliques(g: Graph) -> CliqueCatalog:
    peo = mcs_order(g).reversed().order
    if not is_peo(g, peo):
        raise NotChordalError("graph is not chordal")

    position = {v: i for i, v in enumerate(peo)}
    candidates = {
        VertexSet([v, *(w for w in g.neighbor_set(v) if position[w] > position[v])])
        for v in peo
    }
    cliques = sorted(
        c for c in candidates
        if not any(c != other and c.issubset(other) for other in candidates)
    )

    membership: Dict[int, List[int]] = {v: [] for v in g.vertices}
    for i, clique in enumerate(cliques):
        for v in clique:
            membership[v].append(i)

    logger.debug(f"{len(cliques)} maximal cliques on {g.n} vertices")
    return CliqueCatalog(cliques=cliques, membership=membership)
