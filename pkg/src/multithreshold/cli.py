"""Command line front end.

Five verbs over the library: construct, verify, theta, oracle, certify.
Machine output (JSON, or TSV for the theta table) goes to standard out or
--out; diagnostics go to standard error.  All numbers in machine output are
exact rational strings; --verbose may add clearly marked decimal
approximations on the error stream.

Exit codes: 0 success (or no violations), 1 verification or certification
failure, 2 usage error, 3 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .colorings import (
    check_extreme_color_unique,
    check_k4_half_triangle,
    check_lone_color_unique,
    check_no_two_same_color,
    color_table,
)
from .constructions import construct_knx3, construct_knx4, construct_nk3, construct_nk4
from .exactnum import element_to_json
from .graphs import (
    FORMAT_VERSION,
    CompleteMultipartite,
    DisjointCliques,
    GraphSpec,
    Representation,
    family_graph,
    graph_from_json,
    load_representation,
    representation_to_json,
    verify,
    rank_sums,
)
from .oracle import DEFAULT_BUDGET, BudgetExceededError, is_k_threshold
from .report import render_theta_figure, write_theta_table, theta_table_rows, TABLE_COLUMNS
from .theta import THETA_BY_FAMILY

FAMILIES = ("nk3", "knx3", "nk4", "knx4")

_CONSTRUCT = {
    "nk3": construct_nk3,
    "knx3": construct_knx3,
    "nk4": construct_nk4,
    "knx4": construct_knx4,
}

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--out", help="write machine output to this file instead of stdout")
    sub.add_argument(
        "--format", choices=("json", "tsv"), default=None,
        help="output format where both are supported",
    )
    sub.add_argument("--seed", type=int, default=None, help="reserved, currently unused")
    sub.add_argument("--verbose", action="store_true", help="extra notes on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multithreshold",
        description="exact multithreshold representations: build, check, decide",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("construct", help="build an optimal representation for a family graph")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", required=True, type=int, help="number of cliques or parts")
    p.add_argument("--emit-sums", action="store_true",
                   help="include the edge/nonedge rank sum multisets for audit")
    _add_common(p)

    p = subs.add_parser("verify", help="check a representation file against its graph")
    p.add_argument("--rep", required=True, help="representation JSON file")
    p.add_argument("--graph", help="graph JSON file or family spec like nk3:4 "
                                   "(defaults to the graph embedded in the file)")
    _add_common(p)

    p = subs.add_parser("theta", help="closed-form threshold numbers")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--table", type=int, metavar="N",
                   help="tabulate all four families for n = 1..N")
    p.add_argument("--plot", metavar="FILE",
                   help="with --table: also render the staircase figure to FILE")
    _add_common(p)

    p = subs.add_parser("oracle", help="decide k-thresholdness by exhaustive search")
    p.add_argument("--graph", help="graph JSON file or family spec like nk3:2")
    p.add_argument("--family", choices=FAMILIES, help="alternative to --graph")
    p.add_argument("--n", type=int, help="used with --family")
    p.add_argument("--k", type=int, help="test this exact threshold count")
    p.add_argument("--max-k", type=int, dest="max_k",
                   help="scan k = 0..max_k for the threshold number")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="assignment-count guard (default 2^24)")
    p.add_argument("--no-prune", action="store_true",
                   help="disable symmetry pruning (audit mode)")
    p.add_argument("--deterministic", action="store_true",
                   help="accepted for compatibility; the scan is always sequential")
    _add_common(p)

    p = subs.add_parser("certify", help="run the coloring-lemma certifiers on a representation")
    p.add_argument("--rep", required=True, help="representation JSON file")
    p.add_argument("--graph", help="graph JSON file or family spec (defaults to embedded)")
    p.add_argument("--check", action="append", dest="checks",
                   choices=("pairs", "lone", "extreme", "half"),
                   help="restrict to the named checks (default: all that apply)")
    _add_common(p)

    return parser


def _parse_graph_arg(parser: argparse.ArgumentParser, text: str) -> GraphSpec:
    """A graph argument is a JSON file path or a spec like knx4:3."""
    if os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            return graph_from_json(json.load(fh))
    name, sep, count = text.partition(":")
    if sep and name in FAMILIES:
        try:
            return family_graph(name, int(count))
        except ValueError as exc:
            parser.error(str(exc))
    parser.error(f"not a graph file or family spec: {text!r}")
    raise AssertionError  # parser.error exits


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _note(args: argparse.Namespace, message: str) -> None:
    if args.verbose:
        print(message, file=sys.stderr)


def _sorted_sums(values) -> list[dict]:
    return [element_to_json(s) for s in sorted(values)]


def _cmd_construct(args, parser) -> int:
    try:
        rep = _CONSTRUCT[args.family](args.n)
    except ValueError as exc:
        parser.error(str(exc))
    g = family_graph(args.family, args.n)
    report = verify(rep, g)
    if not report.ok:
        print(f"construction failed verification: {len(report.mismatches)} mismatches",
              file=sys.stderr)
        return EXIT_FAILED
    payload = representation_to_json(rep, g)
    if args.emit_sums:
        edge, nonedge = rank_sums(rep, g)
        payload["edge_sums"] = _sorted_sums(edge)
        payload["nonedge_sums"] = _sorted_sums(nonedge)
    _note(args, f"{args.family} n={args.n}: {rep.threshold_count} thresholds, "
                f"{rep.vertex_count} vertices, verified")
    _emit(args, json.dumps(payload, indent=1) + "\n")
    return EXIT_OK


def _cmd_verify(args, parser) -> int:
    rep, g = load_representation(args.rep)
    if args.graph:
        g = _parse_graph_arg(parser, args.graph)
    report = verify(rep, g)
    payload = {
        "format_version": FORMAT_VERSION,
        "ok": report.ok,
        "mismatches": [
            {
                "u": mm.u,
                "v": mm.v,
                "expected_edge": mm.expected_edge,
                "got_edge": mm.got_edge,
                "rank_sum": element_to_json(mm.rank_sum),
            }
            for mm in report.mismatches
        ],
    }
    _emit(args, json.dumps(payload, indent=1) + "\n")
    return EXIT_OK if report.ok else EXIT_FAILED


def _cmd_theta(args, parser) -> int:
    if args.table is not None:
        if args.table < 1:
            parser.error("--table needs N >= 1")
        if args.format == "json":
            rows = theta_table_rows(args.table)
            payload = {
                "format_version": FORMAT_VERSION,
                "columns": list(TABLE_COLUMNS),
                "rows": [list(r) for r in rows],
            }
            _emit(args, json.dumps(payload, indent=1) + "\n")
        else:
            import io

            buf = io.StringIO()
            write_theta_table(buf, args.table)
            _emit(args, buf.getvalue())
        if args.plot:
            render_theta_figure(args.plot, args.table)
            _note(args, f"figure written to {args.plot}")
        return EXIT_OK
    if args.family is None or args.n is None:
        parser.error("theta needs either --family and --n, or --table N")
    try:
        res = THETA_BY_FAMILY[args.family](args.n)
    except ValueError as exc:
        parser.error(str(exc))
    payload = {
        "format_version": FORMAT_VERSION,
        "family": args.family,
        "n": args.n,
        "theta": res.theta,
        "regime": res.regime,
        "m": res.m,
    }
    _emit(args, json.dumps(payload) + "\n")
    return EXIT_OK


def _oracle_graph(args, parser) -> GraphSpec:
    if args.graph and (args.family or args.n is not None):
        parser.error("give either --graph or --family/--n, not both")
    if args.graph:
        return _parse_graph_arg(parser, args.graph)
    if args.family and args.n is not None:
        try:
            return family_graph(args.family, args.n)
        except ValueError as exc:
            parser.error(str(exc))
    parser.error("oracle needs a graph: --graph FILE|SPEC or --family F --n N")
    raise AssertionError


def _witness_payload(rep: Representation, g: GraphSpec) -> dict:
    return representation_to_json(rep, g)


def _cmd_oracle(args, parser) -> int:
    g = _oracle_graph(args, parser)
    if (args.k is None) == (args.max_k is None):
        parser.error("oracle needs exactly one of --k or --max-k")
    prune = not args.no_prune

    if args.k is not None:
        if args.k < 0:
            parser.error("--k must be nonnegative")
        try:
            res = is_k_threshold(g, args.k, budget=args.budget, prune=prune)
        except BudgetExceededError as exc:
            payload = {
                "format_version": FORMAT_VERSION,
                "answer": "unknown",
                "k": args.k,
                "reason": str(exc),
            }
            _emit(args, json.dumps(payload) + "\n")
            return EXIT_BUDGET
        payload = {
            "format_version": FORMAT_VERSION,
            "answer": res.answer,
            "k": args.k,
            "assignments_total": res.assignments_total,
            "assignments_checked": res.assignments_checked,
            "lps_solved": res.lps_solved,
        }
        if res.representation is not None:
            payload["witness"] = _witness_payload(res.representation, g)
        _emit(args, json.dumps(payload) + "\n")
        return EXIT_OK

    if args.max_k < 0:
        parser.error("--max-k must be nonnegative")
    checked = 0
    lps = 0
    for k in range(args.max_k + 1):
        try:
            res = is_k_threshold(g, k, budget=args.budget, prune=prune)
        except BudgetExceededError as exc:
            payload = {
                "format_version": FORMAT_VERSION,
                "answer": "unknown",
                "k": k,
                "reason": str(exc),
                "assignments_checked": checked,
            }
            _emit(args, json.dumps(payload) + "\n")
            return EXIT_BUDGET
        checked += res.assignments_checked
        lps += res.lps_solved
        _note(args, f"k={k}: {res.answer} ({res.assignments_checked} assignments)")
        if res.answer == "yes":
            payload = {
                "format_version": FORMAT_VERSION,
                "answer": "yes",
                "theta": k,
                "assignments_checked": checked,
                "lps_solved": lps,
                "witness": _witness_payload(res.representation, g),
            }
            _emit(args, json.dumps(payload) + "\n")
            return EXIT_OK
    payload = {
        "format_version": FORMAT_VERSION,
        "answer": "no",
        "theta": None,
        "k_max": args.max_k,
        "assignments_checked": checked,
        "lps_solved": lps,
    }
    _emit(args, json.dumps(payload) + "\n")
    return EXIT_OK


def _cmd_certify(args, parser) -> int:
    rep, g = load_representation(args.rep)
    if args.graph:
        g = _parse_graph_arg(parser, args.graph)
    if not isinstance(g, (DisjointCliques, CompleteMultipartite)):
        parser.error("certify needs a disjoint-clique or complete multipartite graph")
    report = verify(rep, g)
    if not report.ok:
        print(f"representation does not verify: {len(report.mismatches)} mismatches",
              file=sys.stderr)
        return EXIT_FAILED

    k = rep.threshold_count
    table = color_table(rep, g)
    is_cliques = isinstance(g, DisjointCliques)
    requested = args.checks

    available = {"pairs", "lone"}
    if (is_cliques and k % 2 == 1) or not is_cliques:
        available.add("extreme")
    if is_cliques and g.clique_size == 4:
        available.add("half")
    selected = set(requested) if requested else available
    not_applicable = selected - available
    if not_applicable:
        parser.error("checks not applicable here: " + ", ".join(sorted(not_applicable)))

    violations = []
    if "pairs" in selected:
        violations += check_no_two_same_color(table, g)
    if "lone" in selected:
        violations += check_lone_color_unique(table, g)
    if "extreme" in selected:
        violations += check_extreme_color_unique(table, g, k)
    if "half" in selected:
        violations += check_k4_half_triangle(table, g, (k + 1) // 2)

    _note(args, f"checks run: {', '.join(sorted(selected))}; "
                f"{len(violations)} violations")
    lines = "".join(json.dumps(v.to_json()) + "\n" for v in violations)
    _emit(args, lines)
    return EXIT_OK if not violations else EXIT_FAILED


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "construct": _cmd_construct,
        "verify": _cmd_verify,
        "theta": _cmd_theta,
        "oracle": _cmd_oracle,
        "certify": _cmd_certify,
    }[args.command]
    return handler(args, parser)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
