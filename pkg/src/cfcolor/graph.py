"""Simple undirected graphs with dense integer vertex and edge ids.

Vertices are ``0..n-1``.  Edges get dense integer ids in construction order
and are stored as ordered pairs ``(u, v)`` with ``u < v``.  A graph is
immutable once built, so it is safe to share across threads and across
pipeline stages that need the before/after pair of an edge removal.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphInputError(ValueError):
    """Malformed graph input: bad vertex ids, loops, duplicate edges."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph.

    ``edges[e]`` is the pair ``(u, v)`` with ``u < v`` for edge id ``e``;
    ``adj[v]`` lists ``(neighbor, edge_id)`` pairs in edge-id order.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def edge_ids(self) -> range:
        return range(len(self.edges))

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphInputError(f"vertex {v!r} out of range for n={self.n}")

    def check_edge_id(self, e: int) -> None:
        if not isinstance(e, int) or not 0 <= e < len(self.edges):
            raise GraphInputError(f"edge id {e!r} out of range for m={len(self.edges)}")

    def endpoints(self, e: int) -> tuple[int, int]:
        self.check_edge_id(e)
        return self.edges[e]

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max(map(len, self.adj), default=0)

    def min_degree(self) -> int:
        return min(map(len, self.adj), default=0)

    def neighbors(self, v: int) -> list[int]:
        self.check_vertex(v)
        return [u for u, _ in self.adj[v]]

    def closed_neighborhood(self, v: int) -> set[int]:
        """The vertex itself together with all its neighbors."""
        self.check_vertex(v)
        return {v} | {u for u, _ in self.adj[v]}

    def incident_edges(self, v: int) -> list[int]:
        self.check_vertex(v)
        return [e for _, e in self.adj[v]]


def _normalize_pair(u: int, v: int, n: int) -> tuple[int, int]:
    for x in (u, v):
        if not isinstance(x, int) or not 0 <= x < n:
            raise GraphInputError(f"vertex {x!r} out of range for n={n}")
    return (u, v) if u < v else (v, u)


def build_graph(n: int, edge_list: Iterable[tuple[int, int]], strict: bool = True) -> Graph:
    """Build a graph from a vertex count and an edge list.

    Edge ids follow input order after deduplication.  In strict mode a
    self-loop or duplicate edge raises :class:`GraphInputError`; in lenient
    mode both are silently dropped (keeping the first occurrence).
    Out-of-range endpoints always raise.
    """
    if not isinstance(n, int) or n < 0:
        raise GraphInputError(f"vertex count must be a nonnegative integer, got {n!r}")
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for u, v in edge_list:
        pair = _normalize_pair(u, v, n)
        if pair[0] == pair[1]:
            if strict:
                raise GraphInputError(f"self-loop at vertex {pair[0]}")
            continue
        if pair in seen:
            if strict:
                raise GraphInputError(f"duplicate edge {pair}")
            continue
        seen.add(pair)
        edges.append(pair)
    adj_lists: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        adj_lists[u].append((v, e))
        adj_lists[v].append((u, e))
    return Graph(n=n, edges=tuple(edges), adj=tuple(tuple(a) for a in adj_lists))


def line_graph(h: Graph) -> tuple[Graph, dict[int, int]]:
    """Line graph of ``h`` plus the map from h's edge ids to new vertex ids.

    The result has one vertex per edge of ``h``; two vertices are adjacent
    exactly when the corresponding edges of ``h`` share an endpoint.
    """
    m = h.edge_count
    pairs: list[tuple[int, int]] = []
    for v in h.vertices():
        incident = h.incident_edges(v)
        for i in range(len(incident)):
            for j in range(i + 1, len(incident)):
                a, b = incident[i], incident[j]
                pairs.append((a, b) if a < b else (b, a))
    # two distinct edges of a simple graph share at most one endpoint, so
    # each pair is generated exactly once (at the shared vertex)
    return build_graph(m, pairs), {e: e for e in range(m)}


def remove_edges(h: Graph, edge_ids: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Fresh graph without the given edges, plus an old-id -> new-id map.

    The map covers surviving edges only.  The vertex set is unchanged.
    """
    doomed = set(edge_ids)
    for e in doomed:
        h.check_edge_id(e)
    survivors = [e for e in h.edge_ids() if e not in doomed]
    new_graph = build_graph(h.n, [h.edges[e] for e in survivors])
    return new_graph, {old: new for new, old in enumerate(survivors)}


def subgraph_of_edges(h: Graph, edge_ids: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph on the same vertex set keeping only the given edges."""
    keep = set(edge_ids)
    for e in keep:
        h.check_edge_id(e)
    kept = [e for e in h.edge_ids() if e in keep]
    new_graph = build_graph(h.n, [h.edges[e] for e in kept])
    return new_graph, {old: new for new, old in enumerate(kept)}


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = [False] * g.n
    components: list[list[int]] = []
    for start in g.vertices():
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u, _ in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comp.sort()
        components.append(comp)
    return components


def parse_edgelist(text: str) -> Graph:
    """Parse the edge-list text format.

    One edge per line: two whitespace-separated nonnegative integers.
    Lines starting with ``#`` are ignored.  An optional header line
    ``n <count>`` fixes the vertex count; otherwise it is max id + 1.
    """
    n_header: int | None = None
    raw_edges: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if parts[0] == "n":
            if n_header is not None:
                raise GraphInputError(f"line {lineno}: repeated 'n' header")
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphInputError(f"line {lineno}: malformed header {stripped!r}")
            n_header = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphInputError(f"line {lineno}: expected 'u v', got {stripped!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphInputError(f"line {lineno}: non-integer endpoint in {stripped!r}") from exc
        if u < 0 or v < 0:
            raise GraphInputError(f"line {lineno}: negative vertex id in {stripped!r}")
        raw_edges.append((u, v))
    if n_header is None:
        n_header = 1 + max((max(u, v) for u, v in raw_edges), default=-1)
    return build_graph(n_header, raw_edges)


def format_edgelist(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edgelist(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edgelist(fh.read())


def write_edgelist(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edgelist(g))
