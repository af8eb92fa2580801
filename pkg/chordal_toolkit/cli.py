"""
crt: command-line front end.

    crt check graph.edges
    crt gen --family fig2 | crt crg --format dot
    crt verify --suite all --jobs 4
    crt search --k 6 --out hits/

Exit status: 0 success, 1 negative result (not chordal, failed
verification, nothing found) or domain error, 2 usage error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, List, Optional

from colorama import Fore, Style, init

from .chordal import is_chordal, maximal_cliques
from .cliquegraph import build_clique_graph, policy_from_spec
from .cliquetree import clique_tree, tree_text
from .errors import InvalidArgumentError, ToolkitError
from .formats import (
    clique_graph_document,
    clique_graph_to_dot,
    clique_tree_to_dot,
    dump_edge_list,
    dump_json_graph,
    read_graph,
)
from .generators import GeneratorFamily, GeneratorSpec, RandomModel, generate
from .jobs import SUITE_NAMES, run_suite, search_induced_cycles, verify_instance
from .settings import settings
from .structure import graphs_isomorphic

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


def _paint(text: str, colour: str) -> str:
    if not sys.stdout.isatty():
        return text
    return f"{colour}{text}{Style.RESET_ALL}"


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(payload: Any) -> None:
    _emit(json.dumps(payload, indent=2, default=list))


def _verdict(ok: bool, yes: str, no: str) -> int:
    if ok:
        _emit(_paint(f"✅ {yes}", Fore.GREEN))
        return EXIT_OK
    _emit(_paint(f"❌ {no}", Fore.RED))
    return EXIT_NEGATIVE


# ──────────────────────────────
# Verbs
# ──────────────────────────────
def cmd_check(args: argparse.Namespace) -> int:
    g = read_graph(args.input)
    return _verdict(is_chordal(g), "chordal", "not chordal")


def cmd_cliques(args: argparse.Namespace) -> int:
    catalog = maximal_cliques(read_graph(args.input))
    if args.format == "json":
        _emit_json([list(c) for c in catalog.cliques])
    else:
        for i, clique in enumerate(catalog.cliques):
            _emit(f"{i}: {clique!r}")
    return EXIT_OK


def _clique_graph_command(args: argparse.Namespace, reduced: bool) -> int:
    cg = build_clique_graph(read_graph(args.input), policy_from_spec(args.policy))
    target = cg.reduced() if reduced else cg
    if args.format == "dot":
        _emit(clique_graph_to_dot(target))
    else:
        _emit(clique_graph_document(target).model_dump_json(indent=2))
    return EXIT_OK


def cmd_cg(args: argparse.Namespace) -> int:
    return _clique_graph_command(args, reduced=False)


def cmd_crg(args: argparse.Namespace) -> int:
    return _clique_graph_command(args, reduced=True)


def cmd_tree(args: argparse.Namespace) -> int:
    t = clique_tree(read_graph(args.input), policy_from_spec(args.policy))
    if args.format == "dot":
        _emit(clique_tree_to_dot(t))
    elif args.format == "json":
        _emit_json({
            "policy": t.cg.policy.name,
            "total_weight": t.total_weight,
            "cliques": [list(c) for c in t.cg.catalog.cliques],
            "edges": [e.model_dump(mode="json") for e in t.tree_edges],
        })
    else:
        _emit(tree_text(t))
        _emit(f"total weight {t.total_weight}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.suite is None:
        if args.input is None:
            raise InvalidArgumentError("verify needs an input graph or --suite")
        report = verify_instance(read_graph(args.input), policy_from_spec(args.policy))
        _emit_json({**report.model_dump(mode="json"), "passed": report.passed})
        return EXIT_OK if report.passed else EXIT_NEGATIVE

    reports = run_suite(args.suite, args.seed, args.count, args.max_n, args.jobs)
    _emit_json([r.summary() for r in reports])
    for r in reports:
        colour = Fore.GREEN if r.passed else Fore.RED
        sys.stderr.write(_paint(f"{r.suite}: {r.checked} checked, {len(r.failures)} failures", colour) + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_NEGATIVE


def cmd_gen(args: argparse.Namespace) -> int:
    params: List[int] = list(args.params or [])
    if not params:
        params = [p for p in (args.m, args.n) if p is not None]
        if args.index is not None:
            params.append(args.index)
    spec = GeneratorSpec(
        family=args.family, params=params, seed=args.seed, density=args.density, model=args.model
    )
    g = generate(spec)
    _emit(dump_json_graph(g) if args.format == "json" else dump_edge_list(g))
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    report = search_induced_cycles(
        args.k,
        seed=args.seed,
        count=args.count,
        max_n=args.max_n,
        min_n=args.min_n,
        jobs=args.jobs,
        out_dir=Path(args.out) if args.out else None,
        max_hits=args.max_hits,
    )
    _emit(report.model_dump_json(indent=2))
    return EXIT_OK if report.found else EXIT_NEGATIVE


def cmd_iso(args: argparse.Namespace) -> int:
    a, b = read_graph(args.first), read_graph(args.second)
    return _verdict(graphs_isomorphic(a, b, args.guard), "isomorphic", "not isomorphic")


# ──────────────────────────────
# Parser
# ──────────────────────────────
def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crt", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    verbs = parser.add_subparsers(dest="verb", required=True)

    def _with_input(name: str, help_text: str) -> argparse.ArgumentParser:
        p = verbs.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", default="-", help="edge-list or JSON graph file ('-' for stdin)")
        return p

    p = _with_input("check", "report whether the graph is chordal")
    p.set_defaults(func=cmd_check)

    p = _with_input("cliques", "list the maximal cliques")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_cliques)

    for name, func, what in (("cg", cmd_cg, "the clique graph C(G)"), ("crg", cmd_crg, "the reduced clique graph C_R(G)")):
        p = _with_input(name, f"emit {what}")
        p.add_argument("--format", choices=["json", "dot"], default="json")
        p.add_argument("--policy", default="cardinality", help="cardinality | vertex-weights:<file>")
        p.set_defaults(func=func)

    p = _with_input("tree", "emit a clique tree with edge weights")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.add_argument("--policy", default="cardinality", help="cardinality | vertex-weights:<file>")
    p.set_defaults(func=cmd_tree)

    p = verbs.add_parser("verify", help="audit one graph, or run a corpus suite")
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--suite", choices=SUITE_NAMES, default=None)
    p.add_argument("--policy", default="cardinality")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--count", type=int, default=None, help="corpus size (suite default when omitted)")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--jobs", type=_positive_int, default=1)
    p.set_defaults(func=cmd_verify)

    p = verbs.add_parser("gen", help="write a graph from a generator family")
    p.add_argument("--family", type=GeneratorFamily, choices=list(GeneratorFamily), required=True,
                   metavar="{" + ",".join(f.value for f in GeneratorFamily) + "}")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--index", type=int, default=None, help="exhaustive_chordal: which graph on n vertices")
    p.add_argument("--params", type=int, nargs="+", default=None, help="raw family parameters")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--model", type=RandomModel, choices=list(RandomModel), default=RandomModel.SUBTREE,
                   metavar="{subtree,insertion}")
    p.add_argument("--format", choices=["edges", "json"], default="edges")
    p.set_defaults(func=cmd_gen)

    p = verbs.add_parser("search", help="hunt for graphs whose C_R has an induced k-cycle")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--count", type=int, default=200_000)
    p.add_argument("--max-n", type=int, default=13)
    p.add_argument("--min-n", type=int, default=6)
    p.add_argument("--jobs", type=_positive_int, default=1)
    p.add_argument("--max-hits", type=int, default=1)
    p.add_argument("--out", default=None, help="directory for hit edge-list files")
    p.set_defaults(func=cmd_search)

    p = verbs.add_parser("iso", help="test two graph files for isomorphism")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--guard", type=int, default=None)
    p.set_defaults(func=cmd_iso)

    return parser


def _configure_logging(verbose: int) -> None:
    level = settings.LOG_LEVEL
    if verbose == 1:
        level = "INFO"
    elif verbose > 1:
        level = "DEBUG"
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if sys.stdout.isatty():
        init()
    _configure_logging(args.verbose)

    try:
        return args.func(args)
    except InvalidArgumentError as e:
        _emit_json(e.to_dict())
        return EXIT_USAGE
    except ToolkitError as e:
        logger.info(f"❌ {e.code}: {e.message}")
        _emit_json(e.to_dict())
        return EXIT_NEGATIVE
