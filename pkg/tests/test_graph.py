from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from lngraph import (
    BnVertex,
    InvalidOrderError,
    SameCliqueError,
    Vertex,
    bridge,
    build_bn,
    build_ln,
    clique_of,
    companion_clique,
    line_graph,
    metrics,
    to_dot,
    to_edgelist,
)
from lngraph.graph import bn_to_edgelist, relabel_bn_edge


@pytest.mark.parametrize("n", [0, 1, 2, -4])
def test_orders_below_three_rejected(n):
    with pytest.raises(InvalidOrderError, match="n must be ≥ 3"):
        build_ln(n)
    with pytest.raises(InvalidOrderError):
        build_bn(n)


def test_cap_is_configurable():
    with pytest.raises(InvalidOrderError, match="cap"):
        build_ln(51)
    with pytest.raises(InvalidOrderError):
        build_ln(8, cap=7)
    assert build_ln(8, cap=None).order == 56


def test_bn_small_cases():
    b3 = build_bn(3)
    assert len(b3.vertices) == 6
    assert all(b3.degree(x) == 2 for x in b3.vertices)
    b4 = build_bn(4)
    assert len(b4.vertices) == 10
    assert b4.degree(BnVertex((1,))) == 3


def test_b5_is_eulerian():
    b5 = build_bn(5)
    assert {b5.degree(x) for x in b5.vertices} == {2, 4}


@pytest.mark.parametrize("n", range(3, 9))
def test_bn_invariants(n):
    b = build_bn(n)
    assert len(b.vertices) == n + n * (n - 1) // 2
    for x in b.vertices:
        assert b.degree(x) == (2 if x.kind == "pair" else n - 1)
    for x, y in combinations(b.vertices, 2):
        inclusion = set(x.elements) < set(y.elements) or set(y.elements) < set(x.elements)
        assert (frozenset((x, y)) in b.edges) == inclusion


def test_bn_vertex_validation():
    with pytest.raises(ValueError):
        BnVertex((1, 1))
    with pytest.raises(ValueError):
        BnVertex((1, 2, 3))
    assert BnVertex((3, 1)).elements == (1, 3)


def test_line_graph_of_b3_is_six_cycle():
    lg = line_graph(build_bn(3))
    assert len(lg) == 6
    assert all(len(nb) == 2 for nb in lg.values())
    # connected: walk around
    start = next(iter(lg))
    seen, stack = {start}, [start]
    while stack:
        for x in lg[stack.pop()]:
            if x not in seen:
                seen.add(x)
                stack.append(x)
    assert len(seen) == 6


def test_line_graph_single_edge():
    e = frozenset({"a", "b"})
    assert line_graph([e]) == {e: frozenset()}


@pytest.mark.parametrize("n", range(3, 11))
def test_ln_matches_relabelled_line_graph(n):
    lg = line_graph(build_bn(n))
    relabelled = {relabel_bn_edge(e): frozenset(map(relabel_bn_edge, nb)) for e, nb in lg.items()}
    assert build_ln(n).adjacency_sets() == relabelled


def test_l4_figure_counts():
    g = build_ln(4)
    assert (g.order, g.size) == (12, 18)
    assert {g.degree(v) for v in g.vertices} == {3}
    assert set(g.neighbors((1, 2))) == {(1, 3), (1, 4), (2, 1)}


def test_l6_counts():
    g = build_ln(6)
    assert (g.order, g.size) == (30, 75)
    assert {g.degree(v) for v in g.vertices} == {5}


@pytest.mark.parametrize("n", range(3, 11))
def test_ln_invariants(n):
    g = build_ln(n)
    ref = oracles.adjacency(n)
    assert g.order == n * (n - 1)
    assert g.size == n * (n - 1) ** 2 // 2
    assert sorted(g.vertices) == list(g.vertices) == oracles.vertices(n)
    for v in g.vertices:
        i, j = v
        expected = {(i, k) for k in range(1, n + 1) if k not in (i, j)} | {(j, i)}
        assert set(g.neighbors(v)) == expected == set(ref[v])
        assert v not in g.neighbors(v)
        assert all(v in g.neighbors(x) for x in g.neighbors(v))
        assert len(g.neighbors(v)) == len(set(g.neighbors(v)))


@pytest.mark.parametrize("n", range(3, 9))
def test_clique_partition(n):
    g = build_ln(n)
    members = [v for c in g.cliques for v in c]
    assert sorted(members) == list(g.vertices)
    for i, c in enumerate(g.cliques, start=1):
        assert len(c) == n - 1
        assert all(clique_of(v) == i for v in c)
        assert all(g.adjacent(x, y) for x, y in combinations(c, 2))


@pytest.mark.parametrize("n", range(3, 9))
def test_single_outside_neighbor_in_companion(n):
    g = build_ln(n)
    for v in g.vertices:
        outside = [x for x in g.neighbors(v) if clique_of(x) != clique_of(v)]
        assert len(outside) == 1
        assert clique_of(outside[0]) == companion_clique(v) != clique_of(v)


def test_clique_and_companion_examples():
    assert clique_of(Vertex(1, 2)) == 1
    assert clique_of(Vertex(2, 1)) == 2
    assert clique_of(Vertex(5, 3)) == 5
    assert companion_clique(Vertex(1, 2)) == 2
    assert companion_clique(Vertex(3, 1)) == 1


def test_bridge():
    assert bridge(1, 2) == ((1, 2), (2, 1))
    assert bridge(2, 1) == ((2, 1), (1, 2))
    with pytest.raises(SameCliqueError):
        bridge(3, 3)


def test_exactly_one_cross_edge_per_clique_pair_n5():
    g = build_ln(5)
    buckets = Counter(frozenset((clique_of(u), clique_of(v))) for u, v in g.edges() if clique_of(u) != clique_of(v))
    assert set(buckets) == {frozenset(p) for p in combinations(range(1, 6), 2)}
    assert set(buckets.values()) == {1}
    for a, b in combinations(range(1, 6), 2):
        u, v = bridge(a, b)
        assert g.adjacent(u, v)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_metrics_against_reference_bfs(n):
    m = metrics(build_ln(n))
    adj = oracles.adjacency(n)
    diam = max(max(oracles.bfs_dist(adj, s).values()) for s in adj)
    assert m.diameter == diam
    assert m.girth == oracles.girth(adj)
    assert m.connected


def test_metrics_values():
    m3 = metrics(build_ln(3))
    assert (m3.girth, m3.diameter, m3.min_degree, m3.max_degree) == (6, 3, 2, 2)
    for n in (4, 6):
        m = metrics(build_ln(n))
        assert (m.girth, m.diameter, m.connected) == (3, 3, True)


def test_graph_is_immutable():
    g = build_ln(4)
    with pytest.raises(AttributeError):
        g.n = 5
    with pytest.raises(ValueError):
        g.indices[0] = 3


def test_edgelist_export():
    text = to_edgelist(build_ln(3))
    lines = text.splitlines()
    assert len(lines) == 6 and text.endswith("\n")
    assert lines[0] == "1,2 1,3"
    pairs = [tuple(tuple(map(int, p.split(","))) for p in line.split()) for line in lines]
    assert pairs == sorted(pairs)
    assert all(a < b for a, b in pairs)


def test_dot_export():
    text = to_dot(build_ln(4))
    assert text.startswith("graph L4 {")
    assert text.count(" -- ") == 18
    assert text.count("[label=") == 12
    assert '1_2 [label="[1,12]"];' in text


def test_bn_edgelist_export():
    lines = bn_to_edgelist(build_bn(3)).splitlines()
    assert len(lines) == 6
    assert "1 1,2" in lines


@given(st.integers(3, 12), st.data())
def test_adjacency_rule(n, data):
    g = build_ln(n)
    u = data.draw(st.sampled_from(g.vertices))
    v = data.draw(st.sampled_from(g.vertices))
    assert g.adjacent(u, v) == oracles.adjacent(u, v) == (v in g.neighbors(u))
    assert g.adjacent(u, v) == g.adjacent(v, u)
