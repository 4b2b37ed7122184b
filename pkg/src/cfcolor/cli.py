"""Batch command-line front end.

Subcommands: ``verify`` a coloring file against a graph, ``color`` a graph
with one of the algorithms (re-verifying the output before exiting 0),
``bench`` a suite file into CSV, and ``lower-bound`` for the
unsatisfied-edge machinery on complete graphs.

Exit codes: 0 ok, 1 verification failed, 2 input error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import load_suite, run_suite, to_csv
from .exact import SearchBudgetExceeded, cf_chromatic_index, cf_chromatic_number
from .generators import complete_graph, gnp
from .graph import Graph, GraphInputError, build_graph, parse_edgelist
from .linecf import ROUND_LABEL_STRIDE, RoundFailure, SolverParams, cf_edge_coloring
from .lowerbound import find_unsatisfied_edge, unsat_color_threshold
from .nearregular import (DegreeRatioError, NearRegularParams, RetryCapExceeded,
                          color_near_regular)
from .pseudoforest import PseudoforestError, color_pseudoforest
from .verify import (ColoringInputError, format_coloring, parse_coloring,
                     verify_edge_cf, verify_vertex_cf)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3

_INPUT_ERRORS = (GraphInputError, ColoringInputError, PseudoforestError,
                 DegreeRatioError, ValueError, OSError, json.JSONDecodeError, KeyError)
_RESOURCE_ERRORS = (RetryCapExceeded, RoundFailure, SearchBudgetExceeded)


def _parse_dot_subset(text: str) -> Graph:
    """Minimal reader for undirected DOT files: ``u -- v;`` lines only."""
    edges: list[tuple[int, int]] = []
    max_vertex = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip().rstrip(";")
        if (not line or line.startswith("//") or line.startswith("#")
                or line.startswith("graph") or line in ("{", "}")):
            continue
        if "--" not in line:
            raise GraphInputError(f"line {lineno}: expected 'u -- v', got {raw!r}")
        left, _, right = line.partition("--")
        try:
            u, v = int(left.strip()), int(right.strip())
        except ValueError as exc:
            raise GraphInputError(f"line {lineno}: non-integer vertex in {raw!r}") from exc
        edges.append((u, v))
        max_vertex = max(max_vertex, u, v)
    return build_graph(max_vertex + 1, edges)


def _load_graph(path: str, fmt: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "dot-subset":
        return _parse_dot_subset(text)
    raise GraphInputError(f"unknown graph format {fmt!r}")


def _load_params(path: str | None) -> dict:
    if path is None:
        return {}
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _cmd_verify(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph, args.format)
    with open(args.coloring, "r", encoding="utf-8") as fh:
        coloring = parse_coloring(fh.read())
    if args.mode == "vertex":
        report = verify_vertex_cf(graph, coloring)
    else:
        report = verify_edge_cf(graph, coloring)
    print(report.to_json())
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def _cmd_color(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph, args.format)
    params = _load_params(args.params)
    header: tuple[str, ...] = ()
    log_lines = ""
    mode = "edge"

    if args.algorithm == "line-cf":
        if args.strict_paper_mode:
            params["strict_paper_mode"] = True
        solver = SolverParams.from_dict({**params, "rng_seed": args.seed})
        coloring, log = cf_edge_coloring(graph, solver)
        header = (f"labels encode (round, color) as round*{ROUND_LABEL_STRIDE}+color; "
                  f"round 0 is the filler for satisfied-unselected edges",)
        log_lines = log.json_lines()
    elif args.algorithm == "near-regular":
        mode = "vertex"
        if args.strict_paper_mode:
            params = {**params, "preset": "paper"}
        elif not params:
            params = {"preset": "scaled"}
        nr = NearRegularParams.from_dict({**params, "rng_seed": args.seed})
        result = color_near_regular(graph, nr)
        coloring = result.coloring
        header = (f"reserved color 0 plus palette 1..{result.palette_size}",)
        log_lines = json.dumps({
            "stage1_attempts": result.stage1_attempts,
            "stage2_attempts": result.stage2_attempts,
            "restarts": result.restarts,
            "total_colors": result.total_colors,
        }, sort_keys=True)
    elif args.algorithm == "pseudoforest":
        coloring, _ = color_pseudoforest(graph)
    elif args.algorithm == "exact":
        mode = args.mode
        if mode == "vertex":
            result = cf_chromatic_number(graph)
        else:
            result = cf_chromatic_index(graph)
        print(json.dumps({"k": result.k, "witness": result.to_json_dict()["witness"],
                          "certified": result.certified}, sort_keys=True))
        if result.witness is None:
            return EXIT_RESOURCE
        coloring = result.witness
    else:
        raise GraphInputError(f"unknown algorithm {args.algorithm!r}")

    if mode == "vertex":
        report = verify_vertex_cf(graph, coloring)
    else:
        report = verify_edge_cf(graph, coloring)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(format_coloring(coloring, header))
    if args.log:
        with open(args.log, "w", encoding="utf-8") as fh:
            fh.write(log_lines + ("\n" if log_lines else ""))
    if args.algorithm != "exact":
        print(json.dumps({"algorithm": args.algorithm, "mode": mode,
                          "colors_used": len(set(coloring.values())),
                          "verified": report.ok}, sort_keys=True))
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def _cmd_bench(args: argparse.Namespace) -> int:
    suite = load_suite(args.suite)
    records, summaries = run_suite(suite)
    csv_text = to_csv(records, summaries, include_timing=not args.no_timing)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    return EXIT_OK


def _cmd_lower_bound(args: argparse.Namespace) -> int:
    n = args.n
    threshold = unsat_color_threshold(n)
    if args.coloring:
        with open(args.coloring, "r", encoding="utf-8") as fh:
            coloring = parse_coloring(fh.read())
    else:
        import random as _random
        rng = _random.Random(args.seed)
        m = complete_graph(n).edge_count
        coloring = {e: rng.randrange(args.colors) for e in range(m)}
    result = find_unsatisfied_edge(n, coloring)
    cert = result.certificate
    print(json.dumps({
        "n": n,
        "threshold": threshold,
        "colors_used": cert.colors_used,
        "unsatisfied_edge": result.edge,
        "guided_edge": cert.guided_edge,
        "class_size": len(cert.class_a),
        "guarantee_applies": cert.guarantee_applies,
        "strategies_agree": cert.strategies_agree,
    }, sort_keys=True))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cfcolor",
                                     description="Conflict-free graph coloring toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="check a coloring file against a graph")
    p_verify.add_argument("graph")
    p_verify.add_argument("coloring")
    p_verify.add_argument("--mode", choices=("vertex", "edge"), required=True)
    p_verify.add_argument("--format", choices=("edgelist", "dot-subset"), default="edgelist")
    p_verify.set_defaults(func=_cmd_verify)

    p_color = sub.add_parser("color", help="color a graph and re-verify the output")
    p_color.add_argument("graph")
    p_color.add_argument("--algorithm", required=True,
                         choices=("line-cf", "near-regular", "pseudoforest", "exact"))
    p_color.add_argument("--mode", choices=("vertex", "edge"), default="edge",
                         help="for --algorithm exact: which invariant to compute")
    p_color.add_argument("--seed", type=int, default=0)
    p_color.add_argument("--params", help="JSON file with algorithm parameters")
    p_color.add_argument("--strict-paper-mode", action="store_true")
    p_color.add_argument("--format", choices=("edgelist", "dot-subset"), default="edgelist")
    p_color.add_argument("-o", "--output", help="write the coloring file here")
    p_color.add_argument("--log", help="write the run log (JSON lines) here")
    p_color.set_defaults(func=_cmd_color)

    p_bench = sub.add_parser("bench", help="run a suite file, emit CSV records")
    p_bench.add_argument("suite")
    p_bench.add_argument("-o", "--output")
    p_bench.add_argument("--no-timing", action="store_true",
                         help="omit the wall_time column (for determinism checks)")
    p_bench.set_defaults(func=_cmd_bench)

    p_lb = sub.add_parser("lower-bound",
                          help="find an unsatisfied edge in a colored complete graph")
    p_lb.add_argument("-n", type=int, required=True, help="complete graph order")
    p_lb.add_argument("--coloring", help="coloring file; omit to sample randomly")
    p_lb.add_argument("--colors", type=int, default=2, help="palette size for random colorings")
    p_lb.add_argument("--seed", type=int, default=0)
    p_lb.set_defaults(func=_cmd_lower_bound)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _RESOURCE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
