import random
from itertools import combinations

import pytest

import _naive
from cfcolor.exact import greedy_proper_vertex_coloring
from cfcolor.graph import build_graph, line_graph
from cfcolor.verify import (ColoringInputError, parse_coloring, format_coloring,
                            satisfied_edges, satisfied_with, verify_edge_cf,
                            verify_vertex_cf)

TRIANGLE = build_graph(3, [(0, 1), (1, 2), (2, 0)])
C5 = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


def random_graph(n, p, seed):
    rng = random.Random(seed)
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                           if rng.random() < p])


def test_vertex_cf_triangle_monochrome_all_violate():
    report = verify_vertex_cf(TRIANGLE, {0: 1, 1: 1, 2: 1})
    assert not report.ok
    assert report.violators == [0, 1, 2]
    assert report.witnesses == {}


def test_vertex_cf_clique_two_colors_ok():
    k4 = build_graph(4, list(combinations(range(4), 2)))
    report = verify_vertex_cf(k4, {0: 2, 1: 1, 2: 1, 3: 1})
    assert report.ok
    assert all(c == 2 for c in report.witnesses.values())


def test_vertex_cf_c5_two_colors_ok():
    report = verify_vertex_cf(C5, {0: 1, 1: 1, 2: 2, 3: 1, 4: 2})
    assert report.ok


def test_vertex_cf_rejects_partial():
    with pytest.raises(ColoringInputError):
        verify_vertex_cf(TRIANGLE, {0: 1, 1: 1})


def test_satisfied_with_path_same_color():
    path = build_graph(3, [(0, 1), (1, 2)])
    assert satisfied_with(path, {0: 1, 1: 1}, 0) == set()


def test_satisfied_with_path_two_colors():
    path = build_graph(3, [(0, 1), (1, 2)])
    assert satisfied_with(path, {0: 1, 1: 2}, 0) == {1, 2}


def test_satisfied_with_triangle():
    f = {0: 1, 1: 1, 2: 2}  # edges (0,1), (1,2), (0,2)
    assert satisfied_with(TRIANGLE, f, 2) == {2}
    assert satisfied_with(TRIANGLE, f, 0) == {2}
    assert satisfied_with(TRIANGLE, f, 1) == {2}


def test_satisfied_edges_empty_coloring():
    assert satisfied_edges(TRIANGLE, {}) == set()


def test_satisfied_edges_star_single_colored_edge():
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    # one colored edge: every edge (colored or not) sees that color once
    assert satisfied_edges(star, {0: 1}) == {0, 1, 2}


def test_satisfied_edges_triangle_two_colors():
    assert satisfied_edges(TRIANGLE, {0: 1, 1: 1, 2: 2}) == {0, 1, 2}


def test_edge_cf_single_edge_ok():
    k2 = build_graph(2, [(0, 1)])
    assert verify_edge_cf(k2, {0: 9}).ok


def test_edge_cf_c4_monochrome_all_violate():
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    report = verify_edge_cf(c4, {e: 5 for e in range(4)})
    assert report.violators == [0, 1, 2, 3]


def test_edge_cf_path4_three_colors_ok():
    p4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert verify_edge_cf(p4, {0: 0, 1: 1, 2: 2}).ok


def test_edge_cf_rejects_partial_and_bad_ids():
    with pytest.raises(ColoringInputError):
        verify_edge_cf(TRIANGLE, {0: 1})
    from cfcolor.graph import GraphInputError
    with pytest.raises(GraphInputError):
        verify_edge_cf(TRIANGLE, {0: 1, 1: 1, 2: 1, 9: 1})


@pytest.mark.parametrize("seed", range(8))
def test_proper_vertex_coloring_is_conflict_free(seed):
    g = random_graph(14, 0.35, seed)
    coloring = greedy_proper_vertex_coloring(g)
    assert _naive.is_proper_vertex_coloring(g, coloring)
    assert verify_vertex_cf(g, coloring).ok


@pytest.mark.parametrize("seed", range(6))
def test_edge_cf_consistent_with_satisfied_edges(seed):
    g = random_graph(10, 0.4, seed)
    rng = random.Random(seed + 100)
    f = {e: rng.randrange(4) for e in g.edge_ids()}
    report = verify_edge_cf(g, f)
    assert report.ok == (satisfied_edges(g, f) == set(g.edge_ids()))


@pytest.mark.parametrize("seed", range(6))
def test_fast_paths_agree_with_naive(seed):
    g = random_graph(11, 0.35, seed)
    rng = random.Random(seed + 7)
    # partial coloring with holes
    f = {e: rng.randrange(3) for e in g.edge_ids() if rng.random() < 0.6}
    assert satisfied_edges(g, f) == _naive.naive_satisfied_edges(g, f)
    for e in g.edge_ids():
        assert satisfied_with(g, f, e) == _naive.naive_satisfied_with(g, f, e)


def _all_graphs(max_n):
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            yield build_graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def test_line_graph_equivalence_exhaustive_small():
    # every graph on <= 4 vertices, several colorings each
    rng = random.Random(0)
    for h in _all_graphs(4):
        lg, emap = line_graph(h)
        for _ in range(3):
            f = {e: rng.randrange(3) for e in h.edge_ids()}
            if h.edge_count == 0:
                continue
            edge_report = verify_edge_cf(h, f)
            vertex_report = verify_vertex_cf(lg, {emap[e]: c for e, c in f.items()})
            assert edge_report.ok == vertex_report.ok
            assert vertex_report.violators == sorted(emap[e] for e in edge_report.violators)


@pytest.mark.parametrize("seed", range(4))
def test_line_graph_equivalence_random(seed):
    h = random_graph(9, 0.3, seed)
    lg, emap = line_graph(h)
    rng = random.Random(seed + 50)
    for _ in range(4):
        f = {e: rng.randrange(4) for e in h.edge_ids()}
        if not f:
            continue
        assert verify_edge_cf(h, f).ok == verify_vertex_cf(lg, dict(f)).ok


@pytest.mark.parametrize("seed", range(5))
def test_witnesses_recount_exactly_once(seed):
    g = random_graph(12, 0.35, seed)
    rng = random.Random(seed)
    vcol = {v: rng.randrange(4) for v in g.vertices()}
    vreport = verify_vertex_cf(g, vcol)
    for v, witness in vreport.witnesses.items():
        count = sum(1 for u in g.closed_neighborhood(v) if vcol[u] == witness)
        assert count == 1
    f = {e: rng.randrange(4) for e in g.edge_ids()}
    ereport = verify_edge_cf(g, f)
    for e, witness in ereport.witnesses.items():
        assert witness in _naive.naive_satisfied_with(g, f, e)


def test_report_json_schema():
    report = verify_vertex_cf(TRIANGLE, {0: 1, 1: 2, 2: 1})
    data = report.to_json_dict()
    assert set(data) == {"ok", "violators", "witnesses"}
    assert all(isinstance(k, str) for k in data["witnesses"])


def test_coloring_file_roundtrip():
    coloring = {0: 3, 4: 1, 2: 2}
    text = format_coloring(coloring, header_lines=("hello",))
    assert text.startswith("# hello")
    assert parse_coloring(text) == coloring
    with pytest.raises(ColoringInputError):
        parse_coloring("0 1\n0 2\n")
    with pytest.raises(ColoringInputError):
        parse_coloring("0\n")
