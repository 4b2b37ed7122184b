"""Exact conflict-free chromatic numbers on small graphs.

Backtracking search over colorings in canonical form: along a fixed item
order, a new color may be used only after all smaller colors have appeared.
This prunes the k! color-relabeling symmetry, which is what makes complete
graphs up to K6 and their line graphs feasible.  A branch is cut as soon
as some item's closed neighborhood is fully assigned without a unique
color, since later assignments cannot repair it.

Searches are single-threaded; independent searches can run concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

DEFAULT_NODE_BUDGET = 5_000_000


class SearchBudgetExceeded(RuntimeError):
    """The node budget ran out before the search was decided."""

    def __init__(self, nodes_explored: int):
        super().__init__(f"search budget exhausted after {nodes_explored} nodes")
        self.nodes_explored = nodes_explored


@dataclass
class ExactResult:
    """Result of an exact chromatic computation.

    ``certified`` is True when the search ran to completion, in which case
    ``witness`` uses exactly ``k`` distinct colors and no coloring with
    ``k - 1`` colors exists.  On budget exhaustion ``k`` and ``witness``
    are None and the bounds report what was established: every count below
    ``lower_bound`` was refuted, ``upper_bound`` comes from a greedy proper
    coloring (proper colorings are conflict-free).
    """

    k: int | None
    witness: dict[int, int] | None
    nodes_explored: int
    certified: bool
    lower_bound: int
    upper_bound: int | None

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "witness": None if self.witness is None
            else {str(i): c for i, c in sorted(self.witness.items())},
            "certified": self.certified,
            "nodes_explored": self.nodes_explored,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
        }


class _NodeBudget:
    __slots__ = ("remaining", "nodes")

    def __init__(self, limit: int):
        self.remaining = limit
        self.nodes = 0

    def charge(self) -> None:
        if self.remaining <= 0:
            raise SearchBudgetExceeded(self.nodes)
        self.remaining -= 1
        self.nodes += 1


def _closed_vertex_neighborhoods(g: Graph) -> list[tuple[int, ...]]:
    return [tuple(sorted(g.closed_neighborhood(v))) for v in g.vertices()]


def _closed_edge_neighborhoods(h: Graph) -> list[tuple[int, ...]]:
    """For each edge: itself plus every edge sharing an endpoint.

    Built directly from ``h``'s incidence structure, deliberately not via
    the line-graph constructor, so the two routes can cross-check each
    other in tests.
    """
    closed = []
    for e in h.edge_ids():
        u, v = h.endpoints(e)
        closed.append(tuple(sorted(set(h.incident_edges(u)) | set(h.incident_edges(v)))))
    return closed


def _search_cf(closed: list[tuple[int, ...]], k: int, budget: _NodeBudget) -> dict[int, int] | None:
    """Find a coloring of items 0..len(closed)-1 with at most k colors such
    that every closed[i] contains some color exactly once, or prove none
    exists.  Returns the first canonical witness or None."""
    nitems = len(closed)
    if nitems == 0:
        return {}
    if k <= 0:
        return None
    # items whose whole closed neighborhood is assigned once position p is
    finish_at: list[list[int]] = [[] for _ in range(nitems)]
    for i, nb in enumerate(closed):
        finish_at[max(nb)].append(i)
    colors = [-1] * nitems

    def neighborhood_ok(i: int) -> bool:
        counts: dict[int, int] = {}
        for j in closed[i]:
            c = colors[j]
            counts[c] = counts.get(c, 0) + 1
        return 1 in counts.values()

    def extend(pos: int, max_used: int) -> dict[int, int] | None:
        if pos == nitems:
            return {i: colors[i] for i in range(nitems)}
        limit = min(max_used + 1, k - 1)
        for c in range(limit + 1):
            budget.charge()
            colors[pos] = c
            if all(neighborhood_ok(i) for i in finish_at[pos]):
                found = extend(pos + 1, max(max_used, c))
                if found is not None:
                    return found
        colors[pos] = -1
        return None

    return extend(0, -1)


def is_cf_vertex_colorable(g: Graph, k: int, node_budget: int = DEFAULT_NODE_BUDGET) -> dict[int, int] | None:
    """A total conflict-free vertex coloring with at most ``k`` colors, or
    None when an exhaustive search finds none.  Raises
    :class:`SearchBudgetExceeded` when the budget runs out, a distinct
    outcome from "none exists"."""
    return _search_cf(_closed_vertex_neighborhoods(g), k, _NodeBudget(node_budget))


def _minimize(closed: list[tuple[int, ...]], node_budget: int,
              upper_reference: int) -> ExactResult:
    budget = _NodeBudget(node_budget)
    nitems = len(closed)
    if nitems == 0:
        return ExactResult(k=0, witness={}, nodes_explored=0, certified=True,
                           lower_bound=0, upper_bound=0)
    for k in range(1, nitems + 1):
        try:
            witness = _search_cf(closed, k, budget)
        except SearchBudgetExceeded:
            return ExactResult(k=None, witness=None, nodes_explored=budget.nodes,
                               certified=False, lower_bound=k,
                               upper_bound=upper_reference)
        if witness is not None:
            return ExactResult(k=k, witness=witness, nodes_explored=budget.nodes,
                               certified=True, lower_bound=k, upper_bound=k)
    raise AssertionError("an all-distinct coloring is always conflict-free")


def cf_chromatic_number(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> ExactResult:
    """Minimum number of colors in a conflict-free vertex coloring of g."""
    upper = greedy_proper_vertex_color_count(g)
    return _minimize(_closed_vertex_neighborhoods(g), node_budget, upper)


def cf_chromatic_index(h: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> ExactResult:
    """Minimum number of colors in a conflict-free edge coloring of h.

    Searches directly over edges of ``h``; equals the conflict-free
    chromatic number of the line graph of ``h``.
    """
    upper = len(set(greedy_proper_edge_coloring(h).values())) if h.edge_count else 0
    return _minimize(_closed_edge_neighborhoods(h), node_budget, upper)


def greedy_proper_edge_coloring(h: Graph) -> dict[int, int]:
    """Proper edge coloring by first-fit in edge-id order.

    Adjacent edges always differ; uses at most 2*max_degree - 1 colors.
    """
    coloring: dict[int, int] = {}
    for e in h.edge_ids():
        u, v = h.endpoints(e)
        used = {coloring[x] for x in h.incident_edges(u) if x in coloring}
        used |= {coloring[x] for x in h.incident_edges(v) if x in coloring}
        c = 0
        while c in used:
            c += 1
        coloring[e] = c
    return coloring


def greedy_proper_vertex_coloring(g: Graph) -> dict[int, int]:
    """Proper vertex coloring by first-fit in vertex order."""
    coloring: dict[int, int] = {}
    for v in g.vertices():
        used = {coloring[u] for u in g.neighbors(v) if u in coloring}
        c = 0
        while c in used:
            c += 1
        coloring[v] = c
    return coloring


def greedy_proper_vertex_color_count(g: Graph) -> int:
    if g.n == 0:
        return 0
    return len(set(greedy_proper_vertex_coloring(g).values()))
