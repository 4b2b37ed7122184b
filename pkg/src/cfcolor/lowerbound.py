"""Unsatisfied-edge finders for edge colorings of complete graphs.

With few colors, some edge of a complete graph must fail to see any color
exactly once.  The machinery here makes that argument executable: group
vertices by their palette (the set of colors on incident edges), take the
largest group, and use the fact that an edge inside the group can only be
satisfied by its own color, so the satisfied in-group edges split into at
most one matching per color.  When the color count is at most
``unsat_color_threshold(n)``, the largest group is too big for those
matchings to cover it and an uncovered edge is guaranteed.

The guided finder returns a certificate (group, per-color matchings,
uncovered edge) so each instance of the argument is machine-checkable.
A definition-level brute scan over all edges runs alongside it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .generators import complete_graph
from .graph import Graph
from .verify import Coloring, ColoringInputError, satisfied_with


def unsat_color_threshold(n: int) -> int:
    """floor(log2 n - log2 log2 n - 1): with this many colors or fewer, any
    edge coloring of the complete graph on n vertices leaves some edge
    unsatisfied.  May be <= 0 for small n (a vacuous bound, returned
    as-is).  Requires n >= 2."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return math.floor(math.log2(n) - math.log2(math.log2(n)) - 1)


@dataclass
class PaletteClasses:
    """Vertices of a complete graph grouped by incident color set.

    ``classes`` are sorted by decreasing size (ties by least vertex) and
    partition the vertex set; ``largest`` is ``classes[0]``.
    """

    palettes: dict[int, frozenset[int]]
    classes: list[list[int]]
    largest: list[int]


def _complete_with_total_coloring(n: int, f: Coloring) -> Graph:
    g = complete_graph(n)
    for e in f:
        g.check_edge_id(e)
    missing = [e for e in g.edge_ids() if e not in f]
    if missing:
        raise ColoringInputError(
            f"coloring of the complete graph must be total: {len(missing)} edges uncolored")
    return g


def palette_classes(n: int, f: Coloring) -> PaletteClasses:
    """Group vertices by palette under a total edge coloring of K_n.

    Edge ids follow :func:`complete_graph`'s lexicographic order.  Sharing
    a palette is an equivalence; the classes cover every vertex exactly
    once.  The pigeonhole bound |largest| >= n / 2^(#colors) always holds
    and is asserted.
    """
    g = _complete_with_total_coloring(n, f)
    palettes = {v: frozenset(f[e] for e in g.incident_edges(v)) for v in g.vertices()}
    groups: dict[frozenset[int], list[int]] = {}
    for v in g.vertices():
        groups.setdefault(palettes[v], []).append(v)
    classes = sorted(groups.values(), key=lambda c: (-len(c), c[0]))
    assert sorted(v for c in classes for v in c) == list(range(n)), "classes must partition"
    colors_used = len(set(f.values()))
    assert len(classes[0]) * (2 ** colors_used) >= n, "pigeonhole bound violated"
    return PaletteClasses(palettes=palettes, classes=classes, largest=classes[0])


@dataclass
class UnsatCertificate:
    """Machine-checkable record of the largest-class argument.

    ``color_matchings`` maps each color to the in-class edges satisfied
    with it (always a matching).  ``guarantee_applies`` is True when the
    coloring used at most ``bound_x`` colors, in which case the class is
    provably larger than ``bound_x + 1`` and a guided hit is certain.
    """

    class_a: list[int]
    colors_used: int
    bound_x: int
    guarantee_applies: bool
    color_matchings: dict[int, list[int]]
    brute_edge: int | None
    guided_edge: int | None
    strategies_agree: bool


@dataclass
class UnsatSearchResult:
    edge: int | None
    certificate: UnsatCertificate


def find_unsatisfied_edge(n: int, f: Coloring) -> UnsatSearchResult:
    """Find an edge of K_n not satisfied by ``f``, with a certificate.

    Two strategies run: a brute scan of every edge, and the guided scan of
    the largest palette class, where an edge can only be satisfied by its
    own color.  The primary ``edge`` is the brute result (first edge id
    with no uniquely-occurring color).  A guided hit always implies a brute
    hit; when the color count is within the threshold, the guided finder
    is guaranteed to succeed, and that is asserted.
    """
    g = _complete_with_total_coloring(n, f)
    brute_edge = next((e for e in g.edge_ids() if not satisfied_with(g, f, e)), None)

    pc = palette_classes(n, f)
    class_a = pc.largest
    in_class = set(class_a)
    colors_used = len(set(f.values()))
    x = unsat_color_threshold(n)

    guided_edge: int | None = None
    matchings: dict[int, list[int]] = {}
    for e in g.edge_ids():
        u, v = g.endpoints(e)
        if u not in in_class or v not in in_class:
            continue
        # u and v share a palette, so any color unique around e other than
        # f[e] would appear at both endpoints: only f[e] can satisfy e
        if f[e] in satisfied_with(g, f, e):
            matchings.setdefault(f[e], []).append(e)
        elif guided_edge is None:
            guided_edge = e

    for color, edges in matchings.items():
        endpoints = [w for e in edges for w in g.endpoints(e)]
        assert len(endpoints) == len(set(endpoints)), \
            f"edges satisfied with color {color} must form a matching"

    guarantee = colors_used <= x
    if guarantee:
        assert len(class_a) > x + 1, "largest class must exceed x+1 when colors <= x"
        assert guided_edge is not None, "guided finder must succeed when colors <= x"
    if guided_edge is not None:
        assert brute_edge is not None, "a guided hit implies an unsatisfied edge"

    certificate = UnsatCertificate(
        class_a=list(class_a), colors_used=colors_used, bound_x=x,
        guarantee_applies=guarantee, color_matchings=matchings,
        brute_edge=brute_edge, guided_edge=guided_edge,
        strategies_agree=(brute_edge is None) == (guided_edge is None))
    return UnsatSearchResult(edge=brute_edge, certificate=certificate)


def validate_certificate(n: int, f: Coloring, result: UnsatSearchResult) -> None:
    """Independently recheck everything a certificate claims."""
    g = _complete_with_total_coloring(n, f)
    cert = result.certificate
    in_class = set(cert.class_a)
    pc = palette_classes(n, f)
    assert in_class == set(pc.largest), "certificate class is not the largest class"
    if result.edge is not None:
        assert not satisfied_with(g, f, result.edge), "reported edge is satisfied"
    if cert.guided_edge is not None:
        u, v = g.endpoints(cert.guided_edge)
        assert u in in_class and v in in_class, "guided edge must lie inside the class"
        assert not satisfied_with(g, f, cert.guided_edge), "guided edge is satisfied"
    for color, edges in cert.color_matchings.items():
        seen: set[int] = set()
        for e in edges:
            u, v = g.endpoints(e)
            assert u in in_class and v in in_class
            assert f[e] == color and color in satisfied_with(g, f, e)
            assert u not in seen and v not in seen, "matching property violated"
            seen.update((u, v))
    covered = {e for edges in cert.color_matchings.values() for e in edges}
    for e in g.edge_ids():
        u, v = g.endpoints(e)
        if u in in_class and v in in_class and e not in covered:
            assert not satisfied_with(g, f, e), \
                "in-class edge outside all matchings must be unsatisfied"
