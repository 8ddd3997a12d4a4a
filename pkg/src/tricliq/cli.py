"""Command-line front end: generate, trace, clique, oracle, validate.

Exit codes: 0 success, 1 input error, 2 budget exceeded, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .extraction import cliques_per_min_edge, extract_max_clique
from .generators import complete, complete_multipartite, moon_moser
from .graph import Graph, GraphError, check_nonseparable
from .io import format_dimacs, format_edge_list, load_graph
from .oracle import (
    BudgetExceededError,
    enumerate_maximal_cliques,
    maghout_cliques,
    max_clique_exact,
)
from .pruning import MODE_EARLY_STOP, MODE_EXHAUSTIVE, full_trace
from .triangles import edge_weight_vector, enumerate_triangles, vertex_weight_vector


def _emit(text: str, out_path: str | None) -> None:
    if out_path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _warn_if_separable(g: Graph) -> None:
    report = check_nonseparable(g)
    if not report.is_nonseparable:
        print(
            "warning: graph is not nonseparable "
            f"(connected={report.connected}, bridge={report.has_bridge}, "
            f"articulation={report.has_articulation_point}, "
            f"min_degree={report.min_degree}); results may degrade",
            file=sys.stderr,
        )


def cmd_generate(args) -> int:
    if args.family == "complete":
        g = complete(int(args.params))
    elif args.family == "moon-moser":
        g = moon_moser(int(args.params))
    else:
        parts = [int(p) for p in args.params.split(",") if p.strip()]
        g = complete_multipartite(parts)
    text = format_dimacs(g) if args.format == "dimacs" else format_edge_list(g)
    _emit(text, args.out)
    return 0


def cmd_triangles(args) -> int:
    g = load_graph(args.input)
    tris = enumerate_triangles(g)
    if args.json:
        print(json.dumps({
            "count": len(tris),
            "triangles": [{"id": t.id, "vertices": list(t.vertices),
                           "edges": list(t.edges)} for t in tris],
            "edge_weights": edge_weight_vector(g, tris).to_list(),
            "vertex_weights": vertex_weight_vector(g, tris).to_list(),
        }))
        return 0
    print(f"{len(tris)} triangles")
    for t in tris:
        print(f"c{t.id}: vertices {t.vertices} edges {t.edges}")
    return 0


def cmd_trace(args) -> int:
    g = load_graph(args.input)
    _warn_if_separable(g)
    trace = full_trace(g, mode=args.mode)
    if args.json:
        print(json.dumps(trace.to_json_obj()))
        return 0
    if not trace.records:
        print("i  MIN  MAX  surviving  min_edges")
        print("warning: graph has no triangles; nothing to trace",
              file=sys.stderr)
        return 0
    print("i  MIN  MAX  surviving  min_edges")
    for r in trace.records:
        edges = ",".join(map(str, r.min_edges))
        print(f"{r.index}  {r.min_weight}  {r.max_weight}  "
              f"{len(r.surviving)}  {edges}")
    print(f"main iteration: {trace.main_index}")
    return 0


def cmd_clique(args) -> int:
    g = load_graph(args.input)
    _warn_if_separable(g)
    if args.all_min_edges:
        per_edge = cliques_per_min_edge(g, mode=args.mode)
        if args.json:
            print(json.dumps({
                "by_edge": {str(e): r.to_json_obj()
                            for e, r in per_edge.by_edge.items()},
                "distinct": [sorted(s) for s in per_edge.distinct],
            }))
            return 0
        for e, r in per_edge.by_edge.items():
            print(f"edge {e}: size {r.size} {sorted(r.vertices)} "
                  f"verified={r.is_verified_clique}")
        print(f"distinct cliques: {[sorted(s) for s in per_edge.distinct]}")
        return 0
    result = extract_max_clique(g, mode=args.mode)
    if args.json:
        print(json.dumps(result.to_json_obj()))
    else:
        print(f"clique of size {result.size}: {sorted(result.vertices)}")
        print(f"verified={result.is_verified_clique} "
              f"degenerate={result.degenerate} depth={result.recursion_depth} "
              f"seed_edges={list(result.seed_edges)}")
    return 0


def cmd_oracle(args) -> int:
    g = load_graph(args.input)
    if args.method == "maghout":
        cliques = maghout_cliques(g, clause_budget=args.budget)
        payload = {
            "omega": max((len(c) for c in cliques), default=0),
            "count_maximal": len(cliques),
            "method": "maghout",
            "nodes_visited": None,
        }
    else:
        exact = max_clique_exact(g, budget=args.budget)
        cliques = enumerate_maximal_cliques(g, budget=args.budget)
        payload = {
            "omega": exact.omega,
            "count_maximal": len(cliques),
            "method": "branch-and-bound/bron-kerbosch",
            "nodes_visited": exact.nodes_visited,
        }
    if args.json:
        print(json.dumps(payload))
    else:
        print(f"omega={payload['omega']} count_maximal={payload['count_maximal']} "
              f"method={payload['method']} nodes_visited={payload['nodes_visited']}")
    return 0


def cmd_validate(args) -> int:
    g = load_graph(args.input)
    t0 = time.perf_counter()
    heuristic = extract_max_clique(g)
    t_heuristic = time.perf_counter() - t0
    report: dict = {
        "n": g.n,
        "m": g.m,
        "triangles": len(enumerate_triangles(g)),
        "heuristic_size": heuristic.size,
        "heuristic_vertices": sorted(heuristic.vertices),
        "heuristic_verified": heuristic.is_verified_clique,
        "seconds_heuristic": round(t_heuristic, 6),
    }
    budget_hit = False

    t0 = time.perf_counter()
    try:
        exact = max_clique_exact(g, budget=args.budget)
        report["omega"] = exact.omega
        report["nodes_visited"] = exact.nodes_visited
    except BudgetExceededError as exc:
        report["omega"] = None
        report["omega_error"] = str(exc)
        budget_hit = True
    report["seconds_exact"] = round(time.perf_counter() - t0, 6)

    t0 = time.perf_counter()
    try:
        maximal = enumerate_maximal_cliques(g, budget=args.budget)
        report["count_maximal"] = len(maximal)
    except BudgetExceededError as exc:
        report["count_maximal"] = None
        report["count_error"] = str(exc)
        budget_hit = True
    report["seconds_enumeration"] = round(time.perf_counter() - t0, 6)

    try:
        mag = maghout_cliques(g, clause_budget=args.maghout_budget)
        report["count_maghout"] = len(mag)
    except BudgetExceededError as exc:
        report["count_maghout"] = None
        report["maghout_error"] = str(exc)

    if report["omega"] is not None:
        report["agree"] = report["heuristic_size"] == report["omega"]
    else:
        report["agree"] = None

    if args.json:
        print(json.dumps(report))
    else:
        for k, v in report.items():
            print(f"{k}: {v}")
    return 2 if budget_hit else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricliq",
        description="Triangle-weight clique heuristic, exact oracles, "
                    "and graph-family generators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a generated graph")
    p.add_argument("family", choices=["complete", "moon-moser", "multipartite"])
    p.add_argument("params", help="n, k, or comma-separated part sizes")
    p.add_argument("--out", default="-", help="output path (default stdout)")
    p.add_argument("--format", choices=["edges", "dimacs"], default="edges")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("triangles", help="list triangles and weight vectors")
    p.add_argument("input")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_triangles)

    p = sub.add_parser("trace", help="print the pruning iteration table")
    p.add_argument("input")
    p.add_argument("--mode", choices=[MODE_EXHAUSTIVE, MODE_EARLY_STOP],
                   default=MODE_EXHAUSTIVE)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("clique", help="run the heuristic extraction")
    p.add_argument("input")
    p.add_argument("--mode", choices=[MODE_EXHAUSTIVE, MODE_EARLY_STOP],
                   default=MODE_EXHAUSTIVE)
    p.add_argument("--all-min-edges", action="store_true",
                   help="one extraction per minimum-weight edge")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_clique)

    p = sub.add_parser("oracle", help="run an exact method")
    p.add_argument("input")
    p.add_argument("--method", choices=["search", "maghout"], default="search")
    p.add_argument("--budget", type=int, default=10_000_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("validate", help="heuristic vs. exact oracles")
    p.add_argument("input")
    p.add_argument("--budget", type=int, default=10_000_000)
    p.add_argument("--maghout-budget", type=int, default=30)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    except (RuntimeError, AssertionError) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
