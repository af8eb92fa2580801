"""
Instance families: the fixed counterexample graphs, the wheel and path
constructions, random connected chordal graphs, and the exhaustive small
corpus.
"""

import logging
import random
from enum import Enum
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Sequence, Set

from pydantic import BaseModel, Field

from .chordal import is_chordal, maximal_cliques
from .errors import GenerationFailedError, InvalidArgumentError, LemmaViolationError, TooLargeError
from .graph import Edge, Graph, VertexSet, disjoint_union, is_connected
from .settings import settings

logger = logging.getLogger(__name__)


class GeneratorFamily(str, Enum):
    FIG2 = "fig2"
    FIG3 = "fig3"
    WHEEL_HOST = "wheel_host"
    APEX_PATH_JOIN = "apex_path_join"
    JOIN_PRODUCT = "join_product"
    PATH = "path"
    CYCLE = "cycle"
    WHEEL = "wheel"
    COMPLETE = "complete"
    PENDANT_SUN = "pendant_sun"
    RANDOM_CHORDAL = "random_chordal"
    EXHAUSTIVE_CHORDAL = "exhaustive_chordal"


class RandomModel(str, Enum):
    SUBTREE = "subtree"
    INSERTION = "insertion"


class GeneratorSpec(BaseModel):
    family: GeneratorFamily
    params: List[int] = Field(default_factory=list)
    seed: Optional[int] = None
    density: float = Field(default=0.5, ge=0.0, le=1.0)
    model: RandomModel = RandomModel.SUBTREE


def _clique_edges(cliques: Iterable[Sequence[int]]) -> Set[Edge]:
    return {(min(u, v), max(u, v)) for c in cliques for u, v in combinations(c, 2)}


def _from_cliques(cliques: List[List[int]]) -> Graph:
    g = Graph({v for c in cliques for v in c}, _clique_edges(cliques))
    expected = sorted(VertexSet(c) for c in cliques)
    if maximal_cliques(g).cliques != expected:
        raise LemmaViolationError(
            "construction does not have the intended clique catalog",
            witness={"expected": [list(c) for c in expected]},
        )
    return g


# ──────────────────────────────
# Fixed instances
# ──────────────────────────────
FIG2_CLIQUES = [[1, 2, 3], [2, 3, 4, 6, 8, 9], [2, 3, 5, 7, 8, 9], [2, 3, 4, 5, 8, 9]]
FIG3_CLIQUES = [[1, 2, 3], [2, 3, 4], [3, 4, 5], [3, 5, 7, 8]]


def fig2_graph() -> Graph:
    """Nine vertices, four maximal cliques; two of them meet in {2,3,8,9}
    without forming a separating pair."""
    return _from_cliques(FIG2_CLIQUES)


def fig3_graph() -> Graph:
    return _from_cliques(FIG3_CLIQUES)


# ──────────────────────────────
# Parametrised families
# ──────────────────────────────
def path_graph(length: int) -> Graph:
    """Path with ``length`` edges on vertices 0..length."""
    if length < 0:
        raise InvalidArgumentError("path length must be non-negative")
    return Graph(range(length + 1), ((i, i + 1) for i in range(length)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidArgumentError("a cycle needs at least 3 vertices")
    return Graph(range(n), ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidArgumentError("a complete graph needs at least 1 vertex")
    return Graph(range(n), combinations(range(n), 2))


def wheel_graph(n: int) -> Graph:
    """Hub 0 joined to the rim cycle 1..n."""
    if n < 3:
        raise InvalidArgumentError("a wheel needs at least 3 spokes")
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    return Graph(range(n + 1), rim + [(0, i) for i in range(1, n + 1)])


def wheel_host(n: int) -> Graph:
    """Clique on u_0..u_{n-1}, x (ids 0..n) plus v_i = n+1+i on u_i, u_{i+1}.

    Its clique graph is the wheel with n spokes.
    """
    if n < 3:
        raise InvalidArgumentError("wheel_host needs n >= 3")
    hub = list(range(n + 1))
    rim = [[i, (i + 1) % n, n + 1 + i] for i in range(n)]
    return _from_cliques([hub] + rim)


def apex_path_join(m: int, n: int) -> Graph:
    """Disjoint paths with m and n edges plus an apex on everything."""
    if m < 1 or n < 1:
        raise InvalidArgumentError("apex_path_join needs m, n >= 1")
    apex = m + n + 2
    first = [(i, i + 1) for i in range(m)]
    second = [(m + 1 + i, m + 2 + i) for i in range(n)]
    spokes = [(v, apex) for v in range(apex)]
    g = Graph(range(apex + 1), first + second + spokes)
    if not is_chordal(g):
        raise LemmaViolationError("apex path join is not chordal")
    return g


def join_product(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h with every cross pair joined."""
    union, shift = disjoint_union(g, h)
    moved = list(shift.values())
    cross = [(u, v) for u in g.vertices for v in moved]
    return Graph(union.vertices, union.edges() + cross)


def pendant_sun(m: int) -> Graph:
    """Clique on 0..m-1, ear m+i on i and i+1 (mod m), pendant 2m+i on i.

    Its reduced clique graph alternates ears and pendants around an induced
    cycle of length 2m.
    """
    if m < 3:
        raise InvalidArgumentError("pendant_sun needs m >= 3")
    core = list(range(m))
    ears = [[i, (i + 1) % m, m + i] for i in range(m)]
    pendants = [[i, 2 * m + i] for i in range(m)]
    return _from_cliques([core] + ears + pendants)


# ──────────────────────────────
# Random connected chordal graphs
# ──────────────────────────────
def _subtree_sample(n: int, density: float, rng: random.Random) -> Graph:
    # host tree on about n/2 nodes, subtrees of at most four nodes
    m = max(1, (n + 1) // 2)
    host: List[Set[int]] = [set() for _ in range(m)]
    for node in range(1, m):
        parent = rng.randrange(node)
        host[node].add(parent)
        host[parent].add(node)

    subtrees: List[Set[int]] = []
    for _ in range(n):
        size = 1 + sum(rng.random() < density for _ in range(min(3, m - 1)))
        start = rng.randrange(m)
        grown = {start}
        frontier = set(host[start])
        while len(grown) < size and frontier:
            pick = rng.choice(sorted(frontier))
            grown.add(pick)
            frontier |= host[pick]
            frontier -= grown
        subtrees.append(grown)

    edges = [(u, v) for u, v in combinations(range(n), 2) if subtrees[u] & subtrees[v]]
    return Graph(range(n), edges)


def _insertion_sample(n: int, density: float, rng: random.Random) -> Graph:
    cliques: List[Set[int]] = [{0}]
    edges: List[Edge] = []
    for v in range(1, n):
        slot = rng.randrange(len(cliques))
        base = sorted(cliques[slot])
        chosen = {x for x in base if rng.random() < density} or {rng.choice(base)}
        edges.extend((x, v) for x in chosen)
        if chosen == cliques[slot]:
            cliques[slot] = chosen | {v}
        else:
            cliques.append(chosen | {v})
    return Graph(range(n), edges)


def random_chordal(
    n: int,
    density: float = 0.5,
    seed: Optional[int] = None,
    model: RandomModel = RandomModel.SUBTREE,
    retries: Optional[int] = None,
) -> Graph:
    """Connected chordal graph on vertices 0..n-1.

    ``subtree``: vertices are random subtrees of a random host tree and
    adjacent when they meet. ``insertion``: each new vertex joins a random
    subset of a random current maximal clique.
    """
    if n < 1:
        raise InvalidArgumentError("random_chordal needs n >= 1")
    if not 0.0 <= density <= 1.0:
        raise InvalidArgumentError("density must lie in [0, 1]")
    rng = random.Random(settings.SEED if seed is None else seed)
    retries = retries or settings.GENERATION_RETRIES

    for attempt in range(retries):
        if model == RandomModel.INSERTION:
            g = _insertion_sample(n, density, rng)
        else:
            g = _subtree_sample(n, density, rng)
        if is_connected(g):
            if not is_chordal(g):
                raise LemmaViolationError("intersection model produced a non-chordal graph")
            return g
        logger.debug(f"Resampling disconnected graph (attempt {attempt + 1})")
    raise GenerationFailedError(f"no connected sample after {retries} attempts (n={n}, density={density})")


def corpus_instance(
    seed: int,
    index: int,
    max_n: int = 12,
    model: RandomModel = RandomModel.SUBTREE,
    min_n: int = 1,
) -> Graph:
    """The ``index``-th member of a seeded corpus; independent of any other index."""
    rng = random.Random(f"{seed}:{index}")
    n = rng.randint(min_n, max_n)
    density = rng.uniform(0.3, 0.8)
    try:
        return random_chordal(n, density, rng.getrandbits(64), model)
    except GenerationFailedError:
        return random_chordal(n, density, rng.getrandbits(64), RandomModel.INSERTION)


def random_corpus(
    count: int, seed: int, max_n: int = 12, model: RandomModel = RandomModel.SUBTREE
) -> Iterator[Graph]:
    for index in range(count):
        yield corpus_instance(seed, index, max_n, model)


# ──────────────────────────────
# Exhaustive corpus
# ──────────────────────────────
def exhaustive_chordal(n: int, guard: Optional[int] = None) -> Iterator[Graph]:
    """Connected chordal graphs on 0..n-1, one per isomorphism class."""
    # Import here to avoid circular imports
    from .structure import canonical_form

    guard = guard or settings.EXHAUSTIVE_GUARD
    if n > guard:
        raise TooLargeError(f"exhaustive enumeration limited to {guard} vertices")
    if n < 1:
        raise InvalidArgumentError("exhaustive_chordal needs n >= 1")

    pairs = list(combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if len(edges) < n - 1:
            continue
        g = Graph(range(n), edges)
        if not is_connected(g) or not is_chordal(g):
            continue
        cert = canonical_form(g)
        if cert not in seen:
            seen.add(cert)
            yield g


def exhaustive_corpus(max_n: int, guard: Optional[int] = None) -> Iterator[Graph]:
    for n in range(1, max_n + 1):
        yield from exhaustive_chordal(n, guard)


def generate(spec: GeneratorSpec) -> Graph:
    p = spec.params
    family = spec.family

    def _need(count: int) -> List[int]:
        if len(p) < count:
            raise InvalidArgumentError(f"family {family.value} needs {count} integer parameters")
        return p[:count]

    if family == GeneratorFamily.FIG2:
        return fig2_graph()
    if family == GeneratorFamily.FIG3:
        return fig3_graph()
    if family == GeneratorFamily.WHEEL_HOST:
        return wheel_host(*_need(1))
    if family == GeneratorFamily.APEX_PATH_JOIN:
        return apex_path_join(*_need(2))
    if family == GeneratorFamily.JOIN_PRODUCT:
        m, n = _need(2)
        return join_product(path_graph(m), path_graph(n))
    if family == GeneratorFamily.PATH:
        return path_graph(*_need(1))
    if family == GeneratorFamily.CYCLE:
        return cycle_graph(*_need(1))
    if family == GeneratorFamily.WHEEL:
        return wheel_graph(*_need(1))
    if family == GeneratorFamily.COMPLETE:
        return complete_graph(*_need(1))
    if family == GeneratorFamily.PENDANT_SUN:
        return pendant_sun(*_need(1))
    if family == GeneratorFamily.RANDOM_CHORDAL:
        return random_chordal(_need(1)[0], spec.density, spec.seed, spec.model)
    if family == GeneratorFamily.EXHAUSTIVE_CHORDAL:
        n = _need(1)[0]
        index = p[1] if len(p) > 1 else 0
        for i, g in enumerate(exhaustive_chordal(n)):
            if i == index:
                return g
        raise InvalidArgumentError(f"only {i + 1} connected chordal graphs on {n} vertices")
    raise InvalidArgumentError(f"unknown family {family}")
