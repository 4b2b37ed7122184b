"""Graph generators for tests and the benchmark harness.

Deterministic families plus seeded random families.  All random
generators take an explicit ``random.Random`` so suite runs stay
reproducible record by record.
"""

from __future__ import annotations

import random

from .graph import Graph, build_graph


def complete_graph(n: int) -> Graph:
    """K_n with edges in lexicographic order: (0,1), (0,2), ..., (n-2,n-1)."""
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def matching_graph(k: int) -> Graph:
    """k disjoint edges on 2k vertices."""
    return build_graph(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p) by one coin flip per vertex pair, in lexicographic
    pair order so identical seeds give identical graphs."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0,1], got {p}")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def random_regular(n: int, d: int, rng: random.Random, max_tries: int = 200) -> Graph:
    """Random d-regular simple graph via the pairing model.

    Each vertex contributes d stubs; stubs are shuffled and paired.  Pairs
    that would create loops or duplicates re-enter the pool and are
    re-shuffled; if no suitable pair remains the whole attempt restarts.
    Whole-graph rejection (resampling until a fully clean pairing appears
    in one shot) is hopeless beyond small d, so the stub pool is repaired
    instead, following the standard construction.
    """
    if n <= 0 or d < 0:
        raise ValueError("need n > 0 and d >= 0")
    if (n * d) % 2 != 0:
        raise ValueError("n*d must be even")
    if d >= n:
        raise ValueError("need d < n for a simple graph")
    if d == 0:
        return build_graph(n, [])

    def suitable(edges: set[tuple[int, int]], leftovers: dict[int, int]) -> bool:
        if not leftovers:
            return True
        stubs = sorted(leftovers)
        for i, u in enumerate(stubs):
            for v in stubs[i + 1:]:
                if (u, v) not in edges:
                    return True
        return False

    def attempt() -> set[tuple[int, int]] | None:
        edges: set[tuple[int, int]] = set()
        stubs = [v for v in range(n) for _ in range(d)]
        while stubs:
            leftovers: dict[int, int] = {}
            rng.shuffle(stubs)
            it = iter(stubs)
            for u, v in zip(it, it):
                if u > v:
                    u, v = v, u
                if u != v and (u, v) not in edges:
                    edges.add((u, v))
                else:
                    leftovers[u] = leftovers.get(u, 0) + 1
                    leftovers[v] = leftovers.get(v, 0) + 1
            if not suitable(edges, leftovers):
                return None
            stubs = [v for v, count in sorted(leftovers.items()) for _ in range(count)]
        return edges

    for _ in range(max_tries):
        edges = attempt()
        if edges is not None:
            return build_graph(n, sorted(edges))
    raise RuntimeError(f"failed to build a {d}-regular graph on {n} vertices "
                       f"after {max_tries} attempts")


def random_tree(n: int, rng: random.Random) -> Graph:
    """Random attachment tree: vertex v > 0 joins a uniform earlier vertex."""
    if n < 1:
        raise ValueError("tree needs at least one vertex")
    return build_graph(n, [(rng.randrange(v), v) for v in range(1, n)])


def random_pseudoforest(n: int, rng: random.Random, cycle_prob: float = 0.5) -> Graph:
    """Random graph whose components each have at most one cycle.

    Splits the vertices into random blocks; each block of size >= 2 gets a
    random attachment tree, and blocks of size >= 3 close one extra edge
    with probability ``cycle_prob``, creating exactly one cycle.  Vertex
    labels and edge order are then shuffled so nothing downstream can rely
    on construction order.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    cuts = sorted(rng.sample(range(1, n), k=rng.randrange(0, max(1, n // 4) + 1))
                  if n > 1 else [])
    blocks = []
    start = 0
    for cut in cuts + [n]:
        blocks.append(list(range(start, cut)))
        start = cut

    edges: list[tuple[int, int]] = []
    for block in blocks:
        size = len(block)
        if size < 2:
            continue
        local = [(rng.randrange(v), v) for v in range(1, size)]
        adjacent = {tuple(sorted(e)) for e in local}
        if size >= 3 and rng.random() < cycle_prob:
            while True:
                u, v = rng.sample(range(size), 2)
                pair = (u, v) if u < v else (v, u)
                if pair not in adjacent:
                    local.append(pair)
                    break
        edges.extend((block[u], block[v]) for u, v in local)

    relabel = list(range(n))
    rng.shuffle(relabel)
    shuffled = [(relabel[u], relabel[v]) for u, v in edges]
    rng.shuffle(shuffled)
    return build_graph(n, shuffled)
