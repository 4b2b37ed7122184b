"""Deterministic 3-coloring of pseudoforest edges with per-vertex anchors.

A pseudoforest is a graph whose connected components each contain at most
one cycle.  The construction colors all edges with {0, 1, 2} so that the
coloring is conflict-free and, additionally, every non-isolated vertex v
has an anchor color carried by exactly one of its incident edges.  The
anchor property is what the round-based edge-coloring pipeline consumes.

Everything here is deterministic: identical input graphs produce identical
colorings, so seeded pipeline runs are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, connected_components


class PseudoforestError(ValueError):
    """Some component has more than one cycle."""


@dataclass(frozen=True)
class UniqueColorMap:
    """Per-vertex color data produced alongside the edge coloring.

    ``base_color`` is the working color assigned to each non-isolated
    vertex during construction; ``unique_color`` maps each such vertex to
    a color carried by exactly one of its incident edges.  Isolated
    vertices appear in neither map.
    """

    base_color: dict[int, int]
    unique_color: dict[int, int]


def proper_cycle_3coloring(length: int) -> list[int]:
    """Edge colors around a cycle: alternate 0,1 and recolor the last edge 2.

    Adjacent edges always differ and every cycle vertex sees two distinct
    colors, leaving exactly one of {0, 1, 2} missing at each vertex.  The
    same recolor-last-edge form is used for every length, odd or even, so
    the output is canonical.
    """
    if length < 3:
        raise ValueError(f"cycle length must be at least 3, got {length}")
    colors = [i % 2 for i in range(length)]
    colors[-1] = 2
    return colors


def find_cycle(h: Graph, component: list[int]) -> list[int] | None:
    """The unique cycle of a component as an ordered vertex list, or None.

    Assumes the component has at most one cycle.  Peels degree <= 1
    vertices; whatever remains is the cycle.  The rotation starts at the
    least cycle vertex and proceeds toward its least cycle neighbor.
    """
    comp = set(component)
    degrees = {v: h.degree(v) for v in comp}
    queue = deque(v for v in sorted(comp) if degrees[v] <= 1)
    removed: set[int] = set()
    while queue:
        v = queue.popleft()
        if v in removed:
            continue
        removed.add(v)
        for u, _ in h.adj[v]:
            if u in comp and u not in removed:
                degrees[u] -= 1
                if degrees[u] <= 1:
                    queue.append(u)
    remaining = comp - removed
    if not remaining:
        return None
    start = min(remaining)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = min(u for u, _ in h.adj[cur] if u in remaining and u != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def color_pseudoforest(h: Graph) -> tuple[dict[int, int], UniqueColorMap]:
    """Conflict-free 3-coloring of a pseudoforest with anchored vertices.

    Per unicyclic component: the cycle gets a proper 3-coloring, each cycle
    vertex's base color is the one missing at it, and base colors extend
    outward by +1 mod 3, with each vertex coloring the edges to its
    children with its own base color.  Per tree component: the least
    degree-1 vertex is the root with base color 0 and the same extension
    applies.  Raises :class:`PseudoforestError` when any component has two
    or more cycles.
    """
    coloring: dict[int, int] = {}
    base: dict[int, int] = {}
    unique: dict[int, int] = {}
    edge_id_of = {pair: e for e, pair in enumerate(h.edges)}

    for comp in connected_components(h):
        comp_set = set(comp)
        comp_edges = {e for v in comp for e in h.incident_edges(v)}
        if len(comp_edges) > len(comp):
            raise PseudoforestError(
                f"component containing vertex {comp[0]} has {len(comp_edges)} edges "
                f"on {len(comp)} vertices; at most one cycle is allowed"
            )
        if not comp_edges:
            continue  # isolated vertex: no incident edge, no anchor

        cycle = find_cycle(h, comp)
        if cycle is not None:
            cycle_colors = proper_cycle_3coloring(len(cycle))
            for i, v in enumerate(cycle):
                w = cycle[(i + 1) % len(cycle)]
                pair = (v, w) if v < w else (w, v)
                coloring[edge_id_of[pair]] = cycle_colors[i]
            for i, v in enumerate(cycle):
                at_v = {cycle_colors[i - 1], cycle_colors[i]}
                missing = {0, 1, 2} - at_v
                assert len(missing) == 1, "cycle coloring must leave one color missing"
                base[v] = missing.pop()
            roots = list(cycle)
        else:
            root = min(v for v in comp if h.degree(v) == 1)
            base[root] = 0
            roots = [root]

        visited = set(roots)
        queue = deque(roots)
        while queue:
            v = queue.popleft()
            for u, e in h.adj[v]:
                if u in visited or u not in comp_set:
                    continue
                base[u] = (base[v] + 1) % 3
                coloring[e] = base[v]
                visited.add(u)
                queue.append(u)

        cycle_set = set(cycle) if cycle is not None else set()
        for v in comp:
            if v in cycle_set:
                unique[v] = (base[v] + 1) % 3
            elif cycle is None and v == roots[0]:
                unique[v] = base[v]
            else:
                unique[v] = (base[v] - 1) % 3

    return coloring, UniqueColorMap(base_color=base, unique_color=unique)
