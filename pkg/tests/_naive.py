"""Definition-level reference implementations used as independent oracles.

Everything here recomputes properties straight from the definitions with
no shared code paths into the package internals (only the Graph accessors
are reused).  Tests compare package output against these.
"""

from collections import Counter
from itertools import product

from cfcolor.graph import Graph


def closed_edge_neighborhood(h: Graph, e: int) -> set[int]:
    u, v = h.endpoints(e)
    out = {e}
    for x in h.edge_ids():
        a, b = h.endpoints(x)
        if a in (u, v) or b in (u, v):
            out.add(x)
    return out


def naive_satisfied_with(h: Graph, f: dict, e: int) -> set[int]:
    counts = Counter(f[x] for x in closed_edge_neighborhood(h, e) if x in f)
    return {c for c, k in counts.items() if k == 1}


def naive_satisfied_edges(h: Graph, f: dict) -> set[int]:
    return {e for e in h.edge_ids() if naive_satisfied_with(h, f, e)}


def naive_vertex_violators(g: Graph, coloring: dict) -> list[int]:
    out = []
    for v in g.vertices():
        counts = Counter(coloring[u] for u in g.closed_neighborhood(v))
        if 1 not in counts.values():
            out.append(v)
    return out


def naive_edge_violators(h: Graph, f: dict) -> list[int]:
    return [e for e in h.edge_ids() if not naive_satisfied_with(h, f, e)]


def is_proper_vertex_coloring(g: Graph, coloring: dict) -> bool:
    return all(coloring[u] != coloring[v] for u, v in g.edges)


def is_proper_edge_coloring(h: Graph, f: dict) -> bool:
    for v in h.vertices():
        incident = [f[e] for e in h.incident_edges(v)]
        if len(incident) != len(set(incident)):
            return False
    return True


def naive_min_cf_vertex_colors(g: Graph, kmax: int) -> int | None:
    """Smallest k admitting a conflict-free vertex coloring, by raw
    enumeration of k^n assignments (no symmetry breaking)."""
    if g.n == 0:
        return 0
    for k in range(1, kmax + 1):
        for assign in product(range(k), repeat=g.n):
            coloring = dict(enumerate(assign))
            if not naive_vertex_violators(g, coloring):
                return k
    return None


def naive_min_cf_edge_colors(h: Graph, kmax: int) -> int | None:
    """Smallest k admitting a conflict-free edge coloring, raw enumeration."""
    m = h.edge_count
    if m == 0:
        return 0
    for k in range(1, kmax + 1):
        for assign in product(range(k), repeat=m):
            f = dict(enumerate(assign))
            if not naive_edge_violators(h, f):
                return k
    return None
