#!/usr/bin/env python3
"""
Chordal Toolkit Local Demo
Walks through the nine-vertex example graph, its clique graphs and a clique
tree, then shows a reduced clique graph with an induced 4-cycle.
"""

import sys
from pathlib import Path

from colorama import Fore, Style, init

# Make the package importable when run from a checkout
sys.path.insert(0, str(Path(__file__).parent))

from chordal_toolkit.cliquegraph import build_clique_graph
from chordal_toolkit.cliquetree import clique_tree, crg_expansion_path, tree_text
from chordal_toolkit.generators import apex_path_join, fig2_graph, wheel_graph, wheel_host
from chordal_toolkit.oracles import verify_theorem2_instance
from chordal_toolkit.structure import graphs_isomorphic, induced_cycles, nontheorem_witnesses, verify_trichotomy

# Initialize colorama for colored output
init(autoreset=True)


def print_header(text):
    print(f"\n{Fore.CYAN}{'='*60}")
    print(f"{Fore.CYAN}{text}")
    print(f"{Fore.CYAN}{'='*60}{Style.RESET_ALL}")


def print_success(text):
    print(f"{Fore.GREEN}✅ {text}{Style.RESET_ALL}")


def print_info(text):
    print(f"{Fore.YELLOW}ℹ️  {text}{Style.RESET_ALL}")


def print_error(text):
    print(f"{Fore.RED}❌ {text}{Style.RESET_ALL}")


def demo_flow():
    g = fig2_graph()
    cg = build_clique_graph(g)
    crg = cg.reduced()

    print_header("Step 1: Maximal cliques")
    for i, clique in enumerate(cg.catalog.cliques):
        print_info(f"K{i}: {list(clique)}")

    print_header("Step 2: Clique graph and reduced clique graph")
    for e in cg.edges:
        marker = "separating" if e.separating else "not separating"
        print_info(f"K{e.a} - K{e.b}  meet in {list(e.intersection)}  weight {e.weight}  ({marker})")
    print_success(f"C(G) has {len(cg.edges)} edges, C_R(G) keeps {len(crg.edges)}")

    print_header("Step 3: A maximum-weight clique tree")
    t = clique_tree(g)
    print(tree_text(t))
    print_success(f"Total weight {t.total_weight}")

    report = verify_theorem2_instance(g)
    for clause in report.clauses:
        (print_success if clause.passed else print_error)(f"Clause {clause.clause}: {clause.description}")
    print_info(f"{report.spanning_trees} spanning trees of C(G), {report.clique_trees} of them clique trees")

    print_header("Step 4: Non-separating pairs")
    for e in cg.edges:
        if not e.separating:
            path = crg_expansion_path(g, cg, e.a, e.b)
            print_info(f"K{e.a} - K{e.b} expands to the C_R path {path}")
    for w in nontheorem_witnesses(g, cg):
        print_info(f"Vertex {w.vertex} on path {w.path} also lies in {[list(c) for c in w.extra_cliques]}")

    print_header("Step 5: Wheels and induced 4-cycles")
    for n in (4, 5, 6):
        if graphs_isomorphic(build_clique_graph(wheel_host(n)).as_graph(), wheel_graph(n)):
            print_success(f"C(wheel_host({n})) is the {n}-spoke wheel")
        else:
            print_error(f"C(wheel_host({n})) is not a wheel")

    h = apex_path_join(3, 3)
    hcg = build_clique_graph(h)
    for cycle in induced_cycles(hcg.reduced(), 4):
        verdict = verify_trichotomy(h, hcg, cycle)
        print_success(f"Induced C4 {cycle.nodes}: minimal edge {verdict.minimal_edge}, "
                      f"separator {list(verdict.s)}, case {verdict.case.value}")


if __name__ == "__main__":
    try:
        demo_flow()
    except KeyboardInterrupt:
        print_error("Demo interrupted")
