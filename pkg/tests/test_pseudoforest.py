import random
from collections import Counter

import pytest

from cfcolor.generators import cycle_graph, random_pseudoforest, random_tree
from cfcolor.graph import build_graph, connected_components
from cfcolor.pseudoforest import (PseudoforestError, color_pseudoforest, find_cycle,
                                  proper_cycle_3coloring)
from cfcolor.verify import verify_edge_cf


def test_single_edge():
    g = build_graph(2, [(0, 1)])
    coloring, ucm = color_pseudoforest(g)
    assert coloring == {0: 0}
    assert ucm.unique_color == {0: 0, 1: 0}


def test_path_rooted_at_lowest_leaf():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    coloring, ucm = color_pseudoforest(g)
    assert coloring == {0: 0, 1: 1, 2: 2}
    assert ucm.base_color == {0: 0, 1: 1, 2: 2, 3: 0}
    assert ucm.unique_color[1] == 0
    assert ucm.unique_color[2] == 1


def test_triangle_all_colors_once_per_vertex():
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    coloring, ucm = color_pseudoforest(g)
    assert sorted(coloring.values()) == [0, 1, 2]
    for v in g.vertices():
        incident = [coloring[e] for e in g.incident_edges(v)]
        assert len(set(incident)) == 2
        assert Counter(incident)[ucm.unique_color[v]] == 1
    assert verify_edge_cf(g, coloring).ok


def test_isolated_vertices_have_no_anchor():
    g = build_graph(4, [(1, 2)])
    coloring, ucm = color_pseudoforest(g)
    assert set(ucm.unique_color) == {1, 2}
    assert 0 not in ucm.base_color and 3 not in ucm.base_color
    assert coloring == {0: 0}


def test_rejects_component_with_two_cycles():
    # two triangles sharing a vertex: 5 vertices, 6 edges
    g = build_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    with pytest.raises(PseudoforestError) as err:
        color_pseudoforest(g)
    assert "vertex 0" in str(err.value)


def test_proper_cycle_3coloring_exact_values():
    assert proper_cycle_3coloring(3) == [0, 1, 2]
    assert proper_cycle_3coloring(4) == [0, 1, 0, 2]
    assert proper_cycle_3coloring(5) == [0, 1, 0, 1, 2]
    with pytest.raises(ValueError):
        proper_cycle_3coloring(2)


@pytest.mark.parametrize("length", range(3, 31))
def test_proper_cycle_3coloring_properties(length):
    colors = proper_cycle_3coloring(length)
    assert set(colors) <= {0, 1, 2}
    for i in range(length):
        a, b = colors[i - 1], colors[i]  # the two edges meeting at vertex i
        assert a != b
        assert len({0, 1, 2} - {a, b}) == 1


def test_find_cycle_tree():
    g = build_graph(4, [(0, 1), (1, 2), (1, 3)])
    assert find_cycle(g, [0, 1, 2, 3]) is None


def test_find_cycle_triangle_with_pendant():
    g = build_graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    assert find_cycle(g, [0, 1, 2, 3]) == [0, 1, 2]


def test_find_cycle_c6_rotation_order():
    g = cycle_graph(6)
    assert find_cycle(g, list(range(6))) == [0, 1, 2, 3, 4, 5]


def _check_structural_properties(g, coloring, ucm):
    """The base-color bookkeeping the construction promises, recounted."""
    for comp in connected_components(g):
        comp_edges = {e for v in comp for e in g.incident_edges(v)}
        if not comp_edges:
            continue
        cycle = find_cycle(g, comp)
        cycle_set = set(cycle) if cycle else set()
        if cycle is None:
            root = min(v for v in comp if g.degree(v) == 1)
        else:
            root = None
        for v in comp:
            incident = Counter(coloring[e] for e in g.incident_edges(v))
            m = ucm.base_color[v]
            if v in cycle_set:
                assert incident[(m + 1) % 3] == 1
                assert incident[(m + 2) % 3] == 1
            elif v == root:
                assert incident[m] == 1
            else:
                assert incident[(m - 1) % 3] == 1


def test_structural_assertions_examples():
    for edges, n in [([(0, 1), (1, 2), (2, 3)], 4),
                     ([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)], 5),
                     ([(0, 1)], 2)]:
        g = build_graph(n, edges)
        coloring, ucm = color_pseudoforest(g)
        _check_structural_properties(g, coloring, ucm)


@pytest.mark.parametrize("seed", range(100))
def test_random_pseudoforest_battery(seed):
    rng = random.Random(seed)
    g = random_pseudoforest(rng.randrange(1, 61), rng)
    coloring, ucm = color_pseudoforest(g)
    assert set(coloring.values()) <= {0, 1, 2}
    if g.edge_count:
        assert verify_edge_cf(g, coloring).ok
    for v in g.vertices():
        incident = [coloring[e] for e in g.incident_edges(v)]
        if incident:
            assert Counter(incident)[ucm.unique_color[v]] == 1
        else:
            assert v not in ucm.unique_color
    _check_structural_properties(g, coloring, ucm)


@pytest.mark.parametrize("seed", [0, 7, 23])
def test_determinism(seed):
    rng = random.Random(seed)
    g = random_pseudoforest(40, rng)
    first = color_pseudoforest(g)
    second = color_pseudoforest(g)
    assert first[0] == second[0]
    assert first[1] == second[1]


def test_trees_only():
    rng = random.Random(5)
    for _ in range(20):
        g = random_tree(rng.randrange(2, 40), rng)
        coloring, _ = color_pseudoforest(g)
        assert verify_edge_cf(g, coloring).ok
