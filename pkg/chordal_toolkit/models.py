"""
Pydantic schemas for everything the toolkit reads or prints as JSON.
"""

from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .graph import VertexSet


# Graph documents
class GraphDocument(BaseModel):
    vertices: List[int] = Field(default_factory=list)
    edges: List[Tuple[int, int]] = Field(default_factory=list)


class CliqueEdgeRecord(BaseModel):
    a: int
    b: int
    intersection: VertexSet
    separating: bool
    weight: int


class CliqueGraphDocument(GraphDocument):
    """Clique graph as a graph over clique indices, plus the clique data.

    ``vertices``/``edges`` make the document readable as a plain graph, so
    a clique graph can be fed straight into ``iso``.
    """
    kind: str = "clique-graph"
    policy: str = "cardinality"
    cliques: List[VertexSet] = Field(default_factory=list)
    edge_records: List[CliqueEdgeRecord] = Field(default_factory=list)


# Verification reports
class ClauseResult(BaseModel):
    clause: str
    description: str
    passed: bool
    witness: Optional[Dict[str, Any]] = None


class Theorem2Report(BaseModel):
    policy: str
    cliques: int
    spanning_trees: int
    clique_trees: int
    max_weight: int
    clauses: List[ClauseResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses)


class SuiteReport(BaseModel):
    suite: str
    checked: int = 0
    skipped: int = 0
    failures: List[Dict[str, Any]] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def absorb(self, other: "SuiteReport") -> "SuiteReport":
        self.checked += other.checked
        self.skipped += other.skipped
        self.failures.extend(other.failures)
        return self

    def summary(self) -> Dict[str, Any]:
        return {**self.model_dump(), "passed": self.passed}


class SearchHit(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int
    model: str
    cycle: List[VertexSet]
    graph: GraphDocument
    oracle_confirmed: bool
    path: Optional[str] = None


class SearchReport(BaseModel):
    k: int
    seed: int
    examined: int = 0
    hits: List[SearchHit] = Field(default_factory=list)

    @property
    def found(self) -> bool:
        return any(h.oracle_confirmed for h in self.hits)
