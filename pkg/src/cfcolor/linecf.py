"""Round-based randomized conflict-free edge coloring.

Each round works on the residual graph: every heavy vertex (degree at
least half the current maximum) picks one incident edge and a random bit.
Marks in {0, 1, 2} are derived on the selected edges (2 when an edge was
picked by both endpoints with differing bits).  The sample is accepted
once every strictly-heavy vertex keeps, for each bit value, enough
neighbors untouched by that bit's mark or by mark 2; otherwise the round
resamples (a Las Vegas loop with a retry cap).  The selected edges always
form a pseudoforest, so they get the anchored 3-coloring, and each round
colors its edges with the 9 mark/anchor pairs.  Satisfied edges are
recomputed exactly and removed; the maximum degree contracts by a
constant factor per round, which is why the total number of colors grows
only logarithmically in the maximum degree.  A greedy proper coloring
finishes the residual once its maximum degree drops below the cutoff.

A single run is sequential; independent runs with separate params/seeds
can execute concurrently.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field

from .exact import greedy_proper_edge_coloring
from .graph import Graph, remove_edges, subgraph_of_edges
from .pseudoforest import color_pseudoforest
from .verify import satisfied_edges, verify_edge_cf

BETA_DEFAULT = math.exp(-4)

# Final labels are round*16 + color.  Iterated rounds use colors 0..8 (the
# mark/anchor pairs), so they never collide; the base round may exceed 16
# colors but is last, so its labels cannot collide with later rounds
# either.  Round 0 is reserved for the filler label given to edges that
# were satisfied without ever being selected.
ROUND_LABEL_STRIDE = 16
FILLER_LABEL = 0


def encode_label(round_index: int, color: int) -> int:
    return round_index * ROUND_LABEL_STRIDE + color


def decode_label(label: int) -> tuple[int, int]:
    return divmod(label, ROUND_LABEL_STRIDE)


@dataclass
class SolverParams:
    """Tunables for the round pipeline.

    ``beta`` is the per-round degree decay fraction, ``heavy_fraction``
    the degree threshold for selecting vertices, ``delta0`` the residual
    max degree below which the greedy base case takes over.  In
    ``strict_paper_mode`` no fallbacks run: a failed round raises.
    """

    beta: float = BETA_DEFAULT
    heavy_fraction: float = 0.5
    delta0: int = 55
    round_retry_cap: int = 1000
    rng_seed: int = 0
    strict_paper_mode: bool = False

    def validate(self) -> None:
        if not 0.0 < self.beta < 1.0:
            raise ValueError(f"beta must be in (0,1), got {self.beta}")
        if not 0.0 < self.heavy_fraction <= 1.0:
            raise ValueError(f"heavy_fraction must be in (0,1], got {self.heavy_fraction}")
        if self.delta0 < 1.0 / (1.0 - self.beta):
            raise ValueError(
                f"delta0 must be at least 1/(1-beta) = {1.0 / (1.0 - self.beta):.4f}, "
                f"got {self.delta0}"
            )
        if self.round_retry_cap < 1:
            raise ValueError("round_retry_cap must be positive")

    @classmethod
    def from_dict(cls, data: dict) -> "SolverParams":
        params = cls(**data)
        params.validate()
        return params


@dataclass
class RoundState:
    """One sampled round over the current residual graph.

    ``selected`` maps each heavy vertex to its chosen incident edge and
    ``bits`` to its random bit; ``selected_edges`` is the image of
    ``selected``.  ``marks`` assigns each selected edge 0/1/2 (2 for edges
    picked by both endpoints with differing bits), ``forest_colors`` the
    anchored 3-coloring of the selected pseudoforest, ``pair_colors`` the
    composed color 3*mark + forest_color in 0..8.  ``satisfied`` is the
    exact recount of edges satisfied by ``pair_colors``.
    """

    selected: dict[int, int]
    bits: dict[int, int]
    selected_edges: set[int]
    marks: dict[int, int]
    forest_colors: dict[int, int] = field(default_factory=dict)
    pair_colors: dict[int, int] = field(default_factory=dict)
    satisfied: set[int] = field(default_factory=set)
    attempts: int = 0


@dataclass
class FreeNeighborReport:
    """Support counts behind a round's accept/reject decision.

    For each vertex of degree strictly above ``heavy_fraction * delta``,
    ``counts[v]`` holds how many neighbors of v touch no edge marked
    {0, 2} and how many touch no edge marked {1, 2}.  The sample passes
    when every such count reaches ``required``.
    """

    passed: bool
    required: float
    counts: dict[int, tuple[int, int]]
    failing: list[int]


class RoundFailure(RuntimeError):
    """A round could not be completed (retry cap or no degree contraction)."""

    def __init__(self, reason: str, attempts: int, best_state: RoundState | None = None,
                 best_report: FreeNeighborReport | None = None):
        super().__init__(reason)
        self.reason = reason
        self.attempts = attempts
        self.best_state = best_state
        self.best_report = best_report


def required_support(beta: float, delta: int) -> float:
    """Neighbor count each heavy vertex must keep free, per bit value.

    Below beta*delta = 1 the requirement is vacuous (0): in that regime a
    round cannot promise a fixed fraction and the accept test must not
    block, so the driver relies on the one-edge-per-heavy-vertex removal
    instead.
    """
    value = beta * delta
    return value if value >= 1.0 else 0.0


def sample_round(h: Graph, delta: int, rng: random.Random,
                 heavy_fraction: float = 0.5) -> RoundState:
    """Draw one round: per heavy vertex a uniform incident edge and bit."""
    if delta < 1:
        raise ValueError("sampling needs max degree at least 1")
    threshold = heavy_fraction * delta
    selected: dict[int, int] = {}
    bits: dict[int, int] = {}
    for v in h.vertices():
        if h.degree(v) >= threshold and h.degree(v) > 0:
            incident = h.incident_edges(v)
            selected[v] = incident[rng.randrange(len(incident))]
            bits[v] = rng.randrange(2)
    marks: dict[int, int] = {}
    for v in sorted(selected):
        e = selected[v]
        if e in marks and marks[e] != bits[v]:
            marks[e] = 2
        else:
            marks[e] = bits[v]
    return RoundState(selected=selected, bits=bits,
                      selected_edges=set(selected.values()), marks=marks)


def check_free_neighbors(h: Graph, marks: dict[int, int], delta: int, beta: float,
                         heavy_fraction: float = 0.5) -> FreeNeighborReport:
    """Accept test for a sampled round.

    A neighbor u of v counts as free for bit i when no edge incident to u
    carries mark i or mark 2.  Every vertex of degree strictly above
    heavy_fraction*delta must keep at least ``required_support(beta,
    delta)`` free neighbors for both bits.
    """
    touched0 = [False] * h.n
    touched1 = [False] * h.n
    for e, mark in marks.items():
        u, v = h.endpoints(e)
        if mark in (0, 2):
            touched0[u] = touched0[v] = True
        if mark in (1, 2):
            touched1[u] = touched1[v] = True
    required = required_support(beta, delta)
    threshold = heavy_fraction * delta
    counts: dict[int, tuple[int, int]] = {}
    failing: list[int] = []
    for v in h.vertices():
        if h.degree(v) <= threshold:
            continue
        free0 = free1 = 0
        for u in h.neighbors(v):
            if not touched0[u]:
                free0 += 1
            if not touched1[u]:
                free1 += 1
        counts[v] = (free0, free1)
        if free0 < required or free1 < required:
            failing.append(v)
    return FreeNeighborReport(passed=not failing, required=required,
                              counts=counts, failing=failing)


def run_round(h: Graph, params: SolverParams, rng: random.Random,
              beta: float | None = None) -> RoundState:
    """Resample rounds until the accept test passes, then color and recount.

    On success the returned state satisfies: the selected edges are all
    satisfied, and removing the satisfied set contracts the maximum degree
    to at most (1-beta) times the current one.  Raises
    :class:`RoundFailure` when the retry cap runs out or the contraction
    guarantee fails (callers decide the fallback).
    """
    if beta is None:
        beta = params.beta
    delta = h.max_degree()
    if delta < 1:
        raise ValueError("run_round needs at least one edge")

    state: RoundState | None = None
    best_state: RoundState | None = None
    best_report: FreeNeighborReport | None = None
    for attempt in range(1, params.round_retry_cap + 1):
        candidate = sample_round(h, delta, rng, params.heavy_fraction)
        report = check_free_neighbors(h, candidate.marks, delta, beta, params.heavy_fraction)
        if best_report is None or len(report.failing) < len(best_report.failing):
            best_state, best_report = candidate, report
        if report.passed:
            candidate.attempts = attempt
            state = candidate
            break
    if state is None:
        raise RoundFailure("retry cap exhausted without an accepted sample",
                           params.round_retry_cap, best_state, best_report)

    forest, old_to_new = subgraph_of_edges(h, state.selected_edges)
    forest_coloring, _ = color_pseudoforest(forest)  # also asserts the pseudoforest shape
    state.forest_colors = {old: forest_coloring[new] for old, new in old_to_new.items()}
    state.pair_colors = {e: 3 * state.marks[e] + state.forest_colors[e]
                         for e in state.selected_edges}
    state.satisfied = satisfied_edges(h, state.pair_colors)
    if not state.selected_edges <= state.satisfied:
        raise AssertionError("selected edges must be satisfied by their own coloring")
    residual, _ = remove_edges(h, state.satisfied)
    if residual.max_degree() > (1.0 - beta) * delta:
        raise RoundFailure(
            f"accepted round did not contract the maximum degree "
            f"({residual.max_degree()} > (1-{beta:.6f})*{delta})",
            state.attempts, state, None)
    return state


@dataclass
class RoundLog:
    round_index: int
    delta: int
    attempts: int
    selected_size: int
    satisfied_size: int
    colors_used: int
    fallbacks: list[str]
    base: bool = False

    def to_json_dict(self) -> dict:
        return {
            "round": self.round_index,
            "delta": self.delta,
            "attempts": self.attempts,
            "S": self.selected_size,
            "L": self.satisfied_size,
            "colors_used": self.colors_used,
            "fallbacks": list(self.fallbacks),
            "base": self.base,
        }


@dataclass
class RunLog:
    rounds: list[RoundLog] = field(default_factory=list)
    total_colors: int = 0
    filler_edges: int = 0

    @property
    def attempts_total(self) -> int:
        return sum(r.attempts for r in self.rounds)

    def json_lines(self) -> str:
        return "\n".join(json.dumps(r.to_json_dict(), sort_keys=True) for r in self.rounds)


def cf_edge_coloring(h: Graph, params: SolverParams | None = None) -> tuple[dict[int, int], RunLog]:
    """Total conflict-free edge coloring of ``h`` with logarithmic color count.

    Runs rounds while the residual max degree is at least ``delta0``,
    then greedy-colors the rest.  Every edge gets exactly one label,
    ``16*round + color``, from the round where it was first colored or
    satisfied; edges satisfied without ever being selected share the
    single reserved filler label.  The final coloring is re-verified from
    scratch before returning.

    Fallback ladder outside strict mode: a failed round is retried once
    with beta halved; if that also fails, rounds stop early and the whole
    residual is greedy-colored (every fallback is logged).
    """
    if params is None:
        params = SolverParams()
    params.validate()
    rng = random.Random(params.rng_seed)

    final: dict[int, int] = {}
    log = RunLog()
    current = h
    original_id = {e: e for e in h.edge_ids()}
    round_index = 1
    stopped_early = False

    while current.max_degree() >= params.delta0:
        fallbacks: list[str] = []
        state: RoundState | None = None
        try:
            state = run_round(current, params, rng)
        except RoundFailure:
            if params.strict_paper_mode:
                raise
            fallbacks.append("beta-halved")
            try:
                state = run_round(current, params, rng, beta=params.beta / 2.0)
            except RoundFailure:
                fallbacks.append("early-greedy")
                log.rounds.append(RoundLog(round_index, current.max_degree(),
                                           params.round_retry_cap, 0, 0, 0, fallbacks))
                stopped_early = True
                break

        labels_this_round: set[int] = set()
        for e in sorted(state.selected_edges):
            orig = original_id[e]
            assert orig not in final, "edge colored in two rounds"
            label = encode_label(round_index, state.pair_colors[e])
            final[orig] = label
            labels_this_round.add(label)
        for e in sorted(state.satisfied - state.selected_edges):
            orig = original_id[e]
            assert orig not in final, "edge colored in two rounds"
            final[orig] = FILLER_LABEL
            labels_this_round.add(FILLER_LABEL)
            log.filler_edges += 1

        log.rounds.append(RoundLog(round_index, current.max_degree(), state.attempts,
                                   len(state.selected_edges), len(state.satisfied),
                                   len(labels_this_round), fallbacks))
        residual, old_to_new = remove_edges(current, state.satisfied)
        original_id = {new: original_id[old] for old, new in old_to_new.items()}
        current = residual
        round_index += 1

    base = greedy_proper_edge_coloring(current)
    base_labels: set[int] = set()
    for e in current.edge_ids():
        orig = original_id[e]
        assert orig not in final, "edge colored in two rounds"
        label = encode_label(round_index, base[e])
        final[orig] = label
        base_labels.add(label)
    log.rounds.append(RoundLog(round_index, current.max_degree(), 1,
                               current.edge_count, current.edge_count,
                               len(base_labels),
                               ["early-greedy"] if stopped_early else [], base=True))

    assert set(final) == set(h.edge_ids()), "coloring must be total"
    log.total_colors = len(set(final.values()))
    report = verify_edge_cf(h, final)
    if not report.ok:
        raise AssertionError(
            f"pipeline produced a non-conflict-free coloring: violators {report.violators[:5]}")
    return final, log
