"""Benchmark harness: seeded suites, CSV records, scaling summaries.

A suite is a JSON document listing runs; every record owns an RNG derived
from (suite_seed, record_index), so suites are reproducible record by
record and identical seeds give byte-identical CSV apart from the timing
column.  The ``verified`` column always comes from the independent
verifier, never from an algorithm's own claim.
"""

from __future__ import annotations

import hashlib
import io
import json
import random
import time
from dataclasses import dataclass

from . import generators
from .exact import cf_chromatic_index, cf_chromatic_number
from .graph import Graph, line_graph
from .linecf import SolverParams, cf_edge_coloring
from .nearregular import NearRegularParams, color_near_regular
from .pseudoforest import color_pseudoforest
from .verify import verify_edge_cf, verify_vertex_cf

CSV_FIELDS = ["generator", "n", "param", "delta", "algorithm", "colors_used",
              "rounds", "attempts_total", "verified", "seed", "wall_time"]

ALGORITHMS = ("line-cf", "near-regular", "pseudoforest", "exact-chromatic", "exact-index")


@dataclass
class BenchRecord:
    generator: str
    n: int
    param: str
    delta: int
    algorithm: str
    colors_used: int
    rounds: int
    attempts_total: int
    verified: bool
    seed: int
    wall_time: float

    def csv_row(self, include_timing: bool = True) -> list[str]:
        row = [self.generator, str(self.n), self.param, str(self.delta),
               self.algorithm, str(self.colors_used), str(self.rounds),
               str(self.attempts_total), str(self.verified).lower(), str(self.seed)]
        if include_timing:
            row.append(f"{self.wall_time:.6f}")
        return row


@dataclass
class SummaryRow:
    algorithm: str
    slope: float
    runs: int

    def csv_row(self, include_timing: bool = True) -> list[str]:
        row = ["summary", str(self.runs), "slope_colors_vs_ln_delta", "",
               self.algorithm, f"{self.slope:.6f}", "", "", "", ""]
        if include_timing:
            row.append("")
        return row


def record_seed(suite_seed: int, index: int) -> int:
    """Stable 63-bit seed derived from the suite seed and record index."""
    digest = hashlib.sha256(f"{suite_seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def build_graph_for(spec: dict, rng: random.Random) -> tuple[Graph, str, str]:
    """Build the graph a run asks for; returns (graph, generator name, param)."""
    kind = spec["generator"]
    if kind == "gnp":
        g = generators.gnp(spec["n"], spec["p"], rng)
        name, param = "gnp", f"p={spec['p']}"
    elif kind == "regular":
        g = generators.random_regular(spec["n"], spec["d"], rng)
        name, param = "regular", f"d={spec['d']}"
    elif kind == "complete":
        g = generators.complete_graph(spec["n"])
        name, param = "complete", ""
    elif kind == "pseudoforest":
        g = generators.random_pseudoforest(spec["n"], rng)
        name, param = "pseudoforest", ""
    else:
        raise ValueError(f"unknown generator {kind!r}")
    if spec.get("line_graph"):
        g, _ = line_graph(g)
        name = f"line({name})"
    return g, name, param


def run_record(spec: dict, seed: int) -> BenchRecord:
    rng = random.Random(seed)
    graph, gen_name, param = build_graph_for(spec, rng)
    algorithm = spec["algorithm"]
    params = spec.get("params", {})
    start = time.perf_counter()

    if algorithm == "line-cf":
        solver = SolverParams(**params, rng_seed=seed)
        coloring, log = cf_edge_coloring(graph, solver)
        colors = len(set(coloring.values()))
        rounds = len(log.rounds)
        attempts = log.attempts_total
        verified = verify_edge_cf(graph, coloring).ok
    elif algorithm == "near-regular":
        if "preset" in params or not params:
            nr = NearRegularParams.from_dict({"preset": "scaled", **params, "rng_seed": seed})
        else:
            nr = NearRegularParams.from_dict({**params, "rng_seed": seed})
        result = color_near_regular(graph, nr)
        colors = result.total_colors
        rounds = result.restarts
        attempts = result.stage1_attempts + result.stage2_attempts
        verified = verify_vertex_cf(graph, result.coloring).ok
    elif algorithm == "pseudoforest":
        coloring, _ = color_pseudoforest(graph)
        colors = len(set(coloring.values()))
        rounds, attempts = 1, 1
        verified = verify_edge_cf(graph, coloring).ok if graph.edge_count else True
    elif algorithm == "exact-chromatic":
        result = cf_chromatic_number(graph, **params)
        colors = -1 if result.k is None else result.k
        rounds, attempts = 1, result.nodes_explored
        verified = (result.witness is not None
                    and verify_vertex_cf(graph, result.witness).ok)
    elif algorithm == "exact-index":
        result = cf_chromatic_index(graph, **params)
        colors = -1 if result.k is None else result.k
        rounds, attempts = 1, result.nodes_explored
        verified = (result.witness is not None
                    and verify_edge_cf(graph, result.witness).ok)
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}; choose from {ALGORITHMS}")

    elapsed = time.perf_counter() - start
    return BenchRecord(generator=gen_name, n=graph.n, param=param,
                       delta=graph.max_degree(), algorithm=algorithm,
                       colors_used=colors, rounds=rounds, attempts_total=attempts,
                       verified=verified, seed=seed, wall_time=elapsed)


def least_squares_slope(points: list[tuple[float, float]]) -> float | None:
    """Slope of y against x; None when x has no spread."""
    if len(points) < 2:
        return None
    mean_x = sum(x for x, _ in points) / len(points)
    mean_y = sum(y for _, y in points) / len(points)
    sxx = sum((x - mean_x) ** 2 for x, _ in points)
    if sxx == 0:
        return None
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in points)
    return sxy / sxx


def run_suite(suite: dict) -> tuple[list[BenchRecord], list[SummaryRow]]:
    """Execute a suite; individual run failures are recorded, not fatal."""
    suite_seed = suite.get("suite_seed", 0)
    records: list[BenchRecord] = []
    index = 0
    for spec in suite.get("runs", []):
        for _ in range(spec.get("repeats", 1)):
            seed = record_seed(suite_seed, index)
            index += 1
            try:
                records.append(run_record(spec, seed))
            except Exception:
                records.append(BenchRecord(
                    generator=spec.get("generator", "?"), n=spec.get("n", 0),
                    param="error", delta=0, algorithm=spec.get("algorithm", "?"),
                    colors_used=-1, rounds=0, attempts_total=0, verified=False,
                    seed=seed, wall_time=0.0))

    import math
    summaries: list[SummaryRow] = []
    for algorithm in sorted({r.algorithm for r in records}):
        points = [(math.log(r.delta), float(r.colors_used))
                  for r in records
                  if r.algorithm == algorithm and r.delta > 0 and r.colors_used >= 0]
        slope = least_squares_slope(points)
        if slope is not None:
            summaries.append(SummaryRow(algorithm=algorithm, slope=slope, runs=len(points)))
    return records, summaries


def to_csv(records: list[BenchRecord], summaries: list[SummaryRow],
           include_timing: bool = True) -> str:
    fields = CSV_FIELDS if include_timing else CSV_FIELDS[:-1]
    out = io.StringIO()
    out.write(",".join(fields) + "\n")
    for record in records:
        out.write(",".join(record.csv_row(include_timing)) + "\n")
    for summary in summaries:
        out.write(",".join(summary.csv_row(include_timing)) + "\n")
    return out.getvalue()


def load_suite(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
