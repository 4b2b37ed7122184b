"""Ground-truth checks for conflict-free colorings.

A vertex coloring is conflict-free when every closed neighborhood contains
some color exactly once.  An edge coloring is conflict-free when every edge
sees some color exactly once among itself and the edges sharing one of its
endpoints.  Edge colorings may be partial: uncolored edges contribute
nothing to color counts but still have a satisfaction status.

Colors are opaque integer labels.  Composite colors built elsewhere
(e.g. per-round pairs) are encoded into single integers before they
reach this module.  All functions here are pure and safe to call
concurrently.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

from .graph import Graph

Coloring = dict[int, int]


class ColoringInputError(ValueError):
    """Coloring violates an entry precondition (partial where total required,
    unknown ids, non-integer labels)."""


@dataclass
class VerificationReport:
    """Outcome of a conflict-free check.

    ``violators`` lists the ids (vertex or edge) with no uniquely occurring
    color; ``witnesses`` maps every satisfied id to one color that occurs
    exactly once in its closed neighborhood.  The witness is a deterministic
    choice, not necessarily the smallest such color.
    """

    ok: bool
    violators: list[int]
    witnesses: dict[int, int]

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violators": list(self.violators),
            "witnesses": {str(k): v for k, v in sorted(self.witnesses.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def _check_vertex_coloring_total(g: Graph, coloring: Coloring) -> None:
    for v in coloring:
        g.check_vertex(v)
    missing = [v for v in g.vertices() if v not in coloring]
    if missing:
        raise ColoringInputError(
            f"vertex coloring must be total: {len(missing)} uncolored "
            f"(first missing vertex {missing[0]})"
        )


def _check_edge_ids(h: Graph, coloring: Coloring) -> None:
    for e in coloring:
        h.check_edge_id(e)


def verify_vertex_cf(g: Graph, coloring: Coloring) -> VerificationReport:
    """Check that every closed neighborhood contains a unique color.

    Requires a total coloring; raises :class:`ColoringInputError` otherwise.
    """
    _check_vertex_coloring_total(g, coloring)
    violators: list[int] = []
    witnesses: dict[int, int] = {}
    for v in g.vertices():
        counts = Counter(coloring[u] for u in g.closed_neighborhood(v))
        witness = next((c for c, k in counts.items() if k == 1), None)
        if witness is None:
            violators.append(v)
        else:
            witnesses[v] = witness
    violators.sort()
    return VerificationReport(ok=not violators, violators=violators, witnesses=witnesses)


def satisfied_with(h: Graph, f: Coloring, e: int) -> set[int]:
    """Colors occurring exactly once on ``e`` and the edges adjacent to it.

    Counts only colored edges; an uncolored edge can still be satisfied via
    its colored neighbors.  This is the direct, definition-level count; the
    bulk routines below use per-vertex counters but must agree with it.
    """
    h.check_edge_id(e)
    _check_edge_ids(h, f)
    u, v = h.endpoints(e)
    neighborhood = {e} | set(h.incident_edges(u)) | set(h.incident_edges(v))
    counts = Counter(f[x] for x in neighborhood if x in f)
    return {c for c, k in counts.items() if k == 1}


def _vertex_color_counters(h: Graph, f: Coloring) -> list[Counter]:
    counters: list[Counter] = [Counter() for _ in range(h.n)]
    for e, color in f.items():
        u, v = h.edges[e]
        counters[u][color] += 1
        counters[v][color] += 1
    return counters


def _edge_witness(h: Graph, f: Coloring, counters: list[Counter], e: int) -> int | None:
    """One color unique in e's closed edge neighborhood, or None.

    For a color c the combined count around e=(u,v) is
    ``counters[u][c] + counters[v][c]`` minus one when e itself carries c
    (the only edge incident to both endpoints is e).  The scan order is
    fixed, so the returned witness is deterministic.
    """
    u, v = h.edges[e]
    cu, cv = counters[u], counters[v]
    fe = f.get(e)
    if fe is not None and cu[fe] == 1 and cv[fe] == 1:
        return fe
    for c, k in cu.items():
        if k == 1 and cv[c] == 0:
            return c
    for c, k in cv.items():
        if k == 1 and cu[c] == 0:
            return c
    return None


def satisfied_edges(h: Graph, f: Coloring) -> set[int]:
    """All edges (colored or not) satisfied by the partial coloring ``f``."""
    _check_edge_ids(h, f)
    counters = _vertex_color_counters(h, f)
    return {e for e in h.edge_ids() if _edge_witness(h, f, counters, e) is not None}


def verify_edge_cf(h: Graph, f: Coloring) -> VerificationReport:
    """Check that every edge sees some color exactly once.

    Requires a total edge coloring; raises :class:`ColoringInputError` when
    any edge is uncolored or an unknown edge id appears.
    """
    _check_edge_ids(h, f)
    missing = [e for e in h.edge_ids() if e not in f]
    if missing:
        raise ColoringInputError(
            f"edge coloring must be total: {len(missing)} uncolored "
            f"(first missing edge {missing[0]})"
        )
    counters = _vertex_color_counters(h, f)
    violators: list[int] = []
    witnesses: dict[int, int] = {}
    for e in h.edge_ids():
        witness = _edge_witness(h, f, counters, e)
        if witness is None:
            violators.append(e)
        else:
            witnesses[e] = witness
    return VerificationReport(ok=not violators, violators=violators, witnesses=witnesses)


def parse_coloring(text: str) -> Coloring:
    """Parse the coloring file format: lines ``id color``, ``#`` comments."""
    coloring: Coloring = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ColoringInputError(f"line {lineno}: expected 'id color', got {stripped!r}")
        try:
            ident, color = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ColoringInputError(f"line {lineno}: non-integer field in {stripped!r}") from exc
        if ident in coloring:
            raise ColoringInputError(f"line {lineno}: id {ident} assigned twice")
        coloring[ident] = color
    return coloring


def format_coloring(coloring: Coloring, header_lines: tuple[str, ...] = ()) -> str:
    lines = [f"# {text}" for text in header_lines]
    lines.extend(f"{ident} {color}" for ident, color in sorted(coloring.items()))
    return "\n".join(lines) + "\n"


def read_coloring(path: str) -> Coloring:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_coloring(fh.read())


def write_coloring(coloring: Coloring, path: str, header_lines: tuple[str, ...] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_coloring(coloring, header_lines))
