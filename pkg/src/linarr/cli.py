"""Command-line interface.

Subcommands: minla, planar-minla, verify, gap, search, claims, render.
Graphs are read from a file path (or '-' for stdin) in edge-list or JSON
format, auto-detected. Every subcommand accepts --json for a stable
machine-readable report. Exit codes: 0 success, 1 validation error,
2 parse/usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .arrangement import Arrangement, cost, crosses, is_planar_arrangement
from .errors import ParseError, ValidationError
from .gap_search import GapReport, compute_gap, search_gap_graphs
from .graphio import (
    GraphDocument,
    emit_arrangement,
    parse_arrangement,
    parse_edge_subset,
    parse_graph,
)
from .render import FORMATS, emit_arc_diagram
from .solvers import (
    SOLVER_BNB,
    check_dominating_edge_claims,
    solve_minla_bnb,
    solve_minla_exhaustive,
    solve_planar_minla,
)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_doc(path: str) -> GraphDocument:
    return parse_graph(_read_text(path))


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _witness_strings(witnesses, labels) -> list[str]:
    return [emit_arrangement(a, labels) for a in witnesses]


def _cmd_minla(args: argparse.Namespace) -> int:
    doc = _load_doc(args.graph)
    solve = solve_minla_exhaustive if args.solver == "exhaustive" else solve_minla_bnb
    result = solve(doc.graph, dedup_reversals=True)
    witness = emit_arrangement(result.best, doc.labels)
    if args.json:
        _print_json({
            "command": "minla",
            "solver": result.solver_id,
            "optimal_cost": result.optimal_cost,
            "witness": witness,
            "witnesses": _witness_strings(result.witnesses, doc.labels),
            "explored": result.explored,
        })
    else:
        print(f"optimal cost: {result.optimal_cost}")
        print(f"witness: {witness}")
        print(f"witnesses up to reversal: {len(result.witnesses)}")
        print(f"explored: {result.explored}")
        print(f"solver: {result.solver_id}")
    return 0


def _cmd_planar_minla(args: argparse.Namespace) -> int:
    doc = _load_doc(args.graph)
    result = solve_planar_minla(doc.graph, dedup_reversals=True)
    if result is None:
        if args.json:
            _print_json({"command": "planar-minla", "planar_arrangement_exists": False})
        else:
            print("no crossing-free arrangement exists")
        return 0
    witness = emit_arrangement(result.best, doc.labels)
    if args.json:
        _print_json({
            "command": "planar-minla",
            "planar_arrangement_exists": True,
            "optimal_cost": result.optimal_cost,
            "witness": witness,
            "witnesses": _witness_strings(result.witnesses, doc.labels),
            "explored": result.explored,
        })
    else:
        print(f"optimal cost: {result.optimal_cost}")
        print(f"witness: {witness}")
        print(f"witnesses up to reversal: {len(result.witnesses)}")
        print(f"explored: {result.explored}")
    return 0


def _crossing_pairs(doc: GraphDocument, arr: Arrangement) -> list[tuple[tuple[str, str], tuple[str, str]]]:
    edges = doc.graph.sorted_edges
    pairs = []
    for i, e1 in enumerate(edges):
        for e2 in edges[i + 1:]:
            if crosses(arr, e1, e2):
                pairs.append((
                    (doc.labels[e1[0]], doc.labels[e1[1]]),
                    (doc.labels[e2[0]], doc.labels[e2[1]]),
                ))
    return pairs


def _cmd_verify(args: argparse.Namespace) -> int:
    doc = _load_doc(args.graph)
    arr = parse_arrangement(args.arrangement, doc)
    total = cost(doc.graph, arr)
    planar = is_planar_arrangement(doc.graph, arr)
    pairs = _crossing_pairs(doc, arr)
    if args.json:
        _print_json({
            "command": "verify",
            "arrangement": emit_arrangement(arr, doc.labels),
            "cost": total,
            "planar": planar,
            "crossings": [[list(a), list(b)] for a, b in pairs],
        })
    else:
        print(f"cost: {total}")
        print(f"planar: {'yes' if planar else 'no'}")
        print(f"crossing pairs: {len(pairs)}")
        for (a1, a2), (b1, b2) in pairs:
            print(f"  {{{a1},{a2}}} x {{{b1},{b2}}}")
    return 0


def _gap_payload(report: GapReport, labels) -> dict:
    return {
        "minla_opt": report.minla_opt,
        "planar_opt": report.planar_opt,
        "gap": report.gap,
        "outerplanar": report.outerplanar,
        "minla_witness": emit_arrangement(report.minla_witness, labels),
        "planar_witness": (
            None if report.planar_witness is None
            else emit_arrangement(report.planar_witness, labels)
        ),
    }


def _cmd_gap(args: argparse.Namespace) -> int:
    doc = _load_doc(args.graph)
    report = compute_gap(doc.graph)
    if args.json:
        _print_json({"command": "gap", **_gap_payload(report, doc.labels)})
    else:
        witness = emit_arrangement(report.minla_witness, doc.labels)
        print(f"minla optimum: {report.minla_opt} (witness {witness})")
        if report.planar_opt is None:
            print("crossing-free optimum: none (no crossing-free arrangement)")
            print("gap: undefined")
        else:
            pw = emit_arrangement(report.planar_witness, doc.labels)
            print(f"crossing-free optimum: {report.planar_opt} (witness {pw})")
            print(f"gap: {report.gap}")
        print(f"outerplanar: {'yes' if report.outerplanar else 'no'}")
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    reports = search_gap_graphs(args.max_order, args.min_gap)
    if args.json:
        results = []
        for report in reports:
            labels = tuple(str(v) for v in range(report.graph.order))
            results.append({
                "order": report.graph.order,
                "edges": [list(e) for e in report.graph.sorted_edges],
                **_gap_payload(report, labels),
            })
        _print_json({
            "command": "search",
            "max_order": args.max_order,
            "min_gap": args.min_gap,
            "count": len(results),
            "results": results,
        })
    else:
        for report in reports:
            edges = ",".join(f"{u}-{v}" for u, v in report.graph.sorted_edges)
            print(
                f"order={report.graph.order} edges={edges} "
                f"minla={report.minla_opt} planar={report.planar_opt} gap={report.gap}"
            )
        print(f"found {len(reports)} graph(s) with gap >= {args.min_gap}")
    return 0


def _cmd_claims(args: argparse.Namespace) -> int:
    doc = _load_doc(args.graph)
    cycle = parse_edge_subset(args.cycle, doc)
    report = check_dominating_edge_claims(doc.graph, cycle)

    def verdict_payload(v) -> dict:
        return {
            "holds": v.holds,
            "witness_arrangement": (
                None if v.witness_arrangement is None
                else emit_arrangement(v.witness_arrangement, doc.labels)
            ),
            "witness_edge": (
                None if v.witness_edge is None
                else [doc.labels[v.witness_edge[0]], doc.labels[v.witness_edge[1]]]
            ),
            "note": v.note,
        }

    if args.json:
        _print_json({
            "command": "claims",
            "arrangements_checked": report.arrangement_count,
            "claim1": verdict_payload(report.claim1),
            "claim2": verdict_payload(report.claim2),
        })
    else:
        print(f"crossing-free arrangements checked: {report.arrangement_count}")
        for name, verdict, text in (
            ("claim 1", report.claim1,
             "each cycle edge contains all other edges or has adjacent endpoints"),
            ("claim 2", report.claim2,
             "exactly one cycle edge contains all other edges"),
        ):
            if verdict.holds:
                print(f"{name} ({text}): holds")
            else:
                arr = emit_arrangement(verdict.witness_arrangement, doc.labels)
                u, v = verdict.witness_edge
                print(
                    f"{name} ({text}): fails at arrangement {arr}, "
                    f"edge {{{doc.labels[u]},{doc.labels[v]}}} ({verdict.note})"
                )
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    doc = _load_doc(args.graph)
    arr = parse_arrangement(args.arrangement, doc)
    text = emit_arc_diagram(doc.graph, arr, args.format, doc.labels)
    if args.json:
        _print_json({"command": "render", "format": args.format, "content": text})
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linarr",
        description="Exact minimum linear arrangement tools for small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="emit a machine-readable report")
        p.set_defaults(func=func)
        return p

    p = add("minla", _cmd_minla, "exact minimum linear arrangement")
    p.add_argument("graph", help="graph file (edge list or JSON), or - for stdin")
    p.add_argument("--solver", choices=["exhaustive", "bnb"], default="bnb")

    p = add("planar-minla", _cmd_planar_minla, "exact minimum over crossing-free arrangements")
    p.add_argument("graph", help="graph file, or - for stdin")

    p = add("verify", _cmd_verify, "cost, planarity verdict and crossing pairs of an arrangement")
    p.add_argument("graph", help="graph file, or - for stdin")
    p.add_argument("arrangement", help="comma-separated labels in position order, e.g. a,e,b,d,c")

    p = add("gap", _cmd_gap, "both optima and their difference for one graph")
    p.add_argument("graph", help="graph file, or - for stdin")

    p = add("search", _cmd_search, "search small connected graphs for gap witnesses")
    p.add_argument("--max-order", type=int, required=True, help="largest vertex count to search")
    p.add_argument("--min-gap", type=int, default=1, help="smallest gap to report (default 1)")

    p = add("claims", _cmd_claims, "check the dominating-edge claims for a cycle")
    p.add_argument("graph", help="graph file, or - for stdin")
    p.add_argument("--cycle", required=True,
                   help="cycle edges as LABEL-LABEL pairs, e.g. a-b,b-c,c-d,d-e,e-a")

    p = add("render", _cmd_render, "emit an arc diagram of an arrangement")
    p.add_argument("graph", help="graph file, or - for stdin")
    p.add_argument("arrangement", help="comma-separated labels in position order")
    p.add_argument("--format", choices=FORMATS, required=True)

    return parser


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
