"""
Readers and writers: edge-list text, JSON graph documents, clique-graph
JSON, and Graphviz DOT for clique graphs and clique trees.
"""

import sys
from pathlib import Path
from typing import List, Union

from pydantic import ValidationError

from .cliquegraph import CliqueGraph, CliqueGraphView
from .cliquetree import CliqueTree
from .errors import InvalidArgumentError
from .graph import Graph
from .models import CliqueEdgeRecord, CliqueGraphDocument, GraphDocument


# ── edge lists ────────────────────────────────────────────────
def parse_edge_list(text: str) -> Graph:
    vertices: List[int] = []
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "node" and len(parts) == 2:
                vertices.append(int(parts[1]))
            elif len(parts) == 2:
                edges.append((int(parts[0]), int(parts[1])))
            else:
                raise ValueError
        except ValueError:
            raise InvalidArgumentError(f"line {lineno}: expected 'u v' or 'node u', got {raw!r}")
    return Graph(vertices, edges)


def dump_edge_list(g: Graph) -> str:
    lines = [f"# {g.n} vertices, {g.edge_count()} edges"]
    lines += [f"node {v}" for v in g.vertices if g.degree(v) == 0]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# ── JSON ──────────────────────────────────────────────────────
def graph_document(g: Graph) -> GraphDocument:
    return GraphDocument(vertices=list(g.vertices), edges=g.edges())


def parse_json_graph(text: str) -> Graph:
    try:
        doc = GraphDocument.model_validate_json(text)
    except ValidationError as e:
        raise InvalidArgumentError(f"not a graph document: {e.errors()[0]['msg']}")
    return Graph(doc.vertices, doc.edges)


def dump_json_graph(g: Graph) -> str:
    return graph_document(g).model_dump_json(indent=2)


def parse_graph(text: str) -> Graph:
    """JSON when the first non-blank character is '{', edge list otherwise."""
    if text.lstrip().startswith("{"):
        return parse_json_graph(text)
    return parse_edge_list(text)


def read_graph(source: Union[str, Path]) -> Graph:
    if str(source) == "-":
        return parse_graph(sys.stdin.read())
    path = Path(source)
    if not path.exists():
        raise InvalidArgumentError(f"no such file: {path}")
    return parse_graph(path.read_text())


def clique_graph_document(cg: Union[CliqueGraph, CliqueGraphView]) -> CliqueGraphDocument:
    return CliqueGraphDocument(
        kind="reduced-clique-graph" if isinstance(cg, CliqueGraphView) else "clique-graph",
        policy=cg.policy.name,
        vertices=cg.nodes(),
        edges=cg.clique_pairs(),
        cliques=cg.catalog.cliques,
        edge_records=[CliqueEdgeRecord(**e.model_dump()) for e in cg.edges],
    )


# ── DOT ───────────────────────────────────────────────────────
def _node_lines(cg: Union[CliqueGraph, CliqueGraphView]) -> List[str]:
    return [
        f'  c{i} [label="{i}: {{{",".join(str(v) for v in clique)}}}"];'
        for i, clique in enumerate(cg.catalog.cliques)
    ]


def clique_graph_to_dot(cg: Union[CliqueGraph, CliqueGraphView]) -> str:
    """Every C(G) edge, solid when separating and dashed otherwise, weight labels.

    For a reduced view the non-separating edges stay in as grey context.
    """
    reduced = isinstance(cg, CliqueGraphView)
    full = cg.parent if reduced else cg
    lines = [f"graph {'C_R' if reduced else 'C'} {{"] + _node_lines(full)
    for e in full.edges:
        style = "solid" if e.separating else "dashed"
        extra = "" if e.separating or not reduced else ", color=gray"
        lines.append(f'  c{e.a} -- c{e.b} [label="{e.weight}", style={style}{extra}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def clique_tree_to_dot(t: CliqueTree) -> str:
    lines = ["graph T {"] + _node_lines(t.cg)
    for e in t.tree_edges:
        lines.append(f'  c{e.a} -- c{e.b} [label="{e.weight}"];')
    lines.append(f'  label="total weight {t.total_weight}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
