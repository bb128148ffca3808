import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conpath.errors import CertificateError, PreconditionViolation
from conpath.generators import (ft_instance, pc_acyclic_graph, pc_trail_bridge_instance,
                                rainbow_acyclic_decomposition, unique_pm_graph)
from conpath.graph import Graph, bridges, connected_components
from conpath.instances import EdgeColoredGraph, TransitionSystem
from conpath.matching import Matching
from conpath.multipartite import complete_multipartite_partition
from conpath.oracle import oracle_exists
from conpath.query import CLOSED_TRAIL, CYCLE, PROPERLY_COLORED, RAINBOW, TRANSITIONS, Query
from conpath.structure import (color_separating_vertices, ft_bridge, kotzig_bridge, pc_trail_bridge,
                               rainbow_separating_class, yeo_separating_vertex)
from conpath.validate import (check_bridge, check_color_separating_vertex,
                              check_matching_bridge, check_multipartite_partition,
                              check_separating_class)

seeds = st.integers(0, 10**6)
STEM = Graph(range(4), [(0, 1), (1, 2), (2, 3), (3, 1)])


def test_kotzig_examples():
    edge = Graph([0, 1], [(0, 1)])
    assert kotzig_bridge(edge, Matching(edge, [0])) == 0
    assert kotzig_bridge(STEM, Matching(STEM, [0, 2])) == 0
    assert {e for e in bridges(STEM) if e in {0, 2}} == {0}


def test_kotzig_needs_unique_matching():
    c4 = Graph(range(4), [(0, 1), (1, 2), (2, 3), (3, 0)])
    with pytest.raises(PreconditionViolation):
        kotzig_bridge(c4, Matching(c4, [0, 2]))


@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(1, 5))
def test_kotzig_on_random_unique_matchings(seed, pairs):
    m = unique_pm_graph(random.Random(seed), pairs)
    e = kotzig_bridge(m.graph, m)
    check_matching_bridge(m.graph, m.edges, e)


def test_yeo_examples():
    star = EdgeColoredGraph(Graph(range(4), [(0, 1), (0, 2), (0, 3)]), {0: "a", 1: "b", 2: "a"})
    u, assignment = yeo_separating_vertex(star)
    check_color_separating_vertex(star, u, assignment)
    assert any(v == 0 for v, _ in color_separating_vertices(star))
    edge = EdgeColoredGraph(Graph([0, 1], [(0, 1)]), {0: "a"})
    assert yeo_separating_vertex(edge)[0] in (0, 1)


def test_yeo_rejects_pc_cycle():
    sq = EdgeColoredGraph(Graph(range(4), [(0, 1), (1, 2), (2, 3), (3, 0)]), {0: 0, 1: 1, 2: 0, 3: 1})
    with pytest.raises(PreconditionViolation):
        yeo_separating_vertex(sq)


@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(1, 9))
def test_yeo_on_random_pc_acyclic(seed, n):
    ecg = pc_acyclic_graph(random.Random(seed), n)
    assert not oracle_exists(Query(ecg, CYCLE, PROPERLY_COLORED), limit=9)
    u, assignment = yeo_separating_vertex(ecg)
    check_color_separating_vertex(ecg, u, assignment)


def test_separation_validator_rejects_bad_witnesses():
    path = EdgeColoredGraph(Graph(range(3), [(0, 1), (1, 2)]), {0: "a", 1: "b"})
    check_color_separating_vertex(path, 1, {frozenset({0}): "a", frozenset({2}): "b"})
    with pytest.raises(CertificateError):
        check_color_separating_vertex(path, 1, {frozenset({0}): "b", frozenset({2}): "b"})
    tri = EdgeColoredGraph(Graph(range(3), [(0, 1), (1, 2), (2, 0)]), {0: "a", 1: "b", 2: "a"})
    assert [v for v, _ in color_separating_vertices(tri)] == [0]
    with pytest.raises(CertificateError):
        check_color_separating_vertex(tri, 1, {frozenset({0, 2}): "a"})


def test_ft_bridge_examples():
    edge = Graph([0, 1], [(0, 1)])
    assert ft_bridge(edge, TransitionSystem(edge, {})) == 0
    path = Graph(range(3), [(0, 1), (1, 2)])
    assert ft_bridge(path, TransitionSystem.full(path)) in (0, 1)


@pytest.mark.parametrize("build, clause", [
    (lambda: (Graph([0], []), {}), "no edges"),
    (lambda: (Graph(range(4), [(0, 1), (0, 2), (0, 3)]), {0: [(0, 1)]}), "disconnected"),
    (lambda: (Graph(range(3), [(0, 1), (1, 2), (2, 0)]), None), "closed trail"),
])
def test_ft_bridge_names_failing_clause(build, clause):
    g, allowed = build()
    t = TransitionSystem.full(g) if allowed is None else TransitionSystem(g, allowed)
    with pytest.raises(PreconditionViolation, match=clause):
        ft_bridge(g, t)


@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(2, 7))
def test_ft_bridge_on_random_instances(seed, n):
    g, t = ft_instance(random.Random(seed), n)
    assert not oracle_exists(Query(t, CLOSED_TRAIL, TRANSITIONS), limit=20)
    e = ft_bridge(g, t)
    assert e in bridges(g)
    check_bridge(g, e)


def _two_triangles():
    # a,b,c and a',b',c' with ab, bc of color 0 and ca of color 1; b and b' need the bridge
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (1, 4)]
    colors = {0: 0, 1: 0, 2: 1, 3: 0, 4: 0, 5: 1, 6: 1}
    return EdgeColoredGraph(Graph(range(6), edges), colors)


def test_pc_trail_bridge_example():
    ecg = _two_triangles()
    assert not oracle_exists(Query(ecg, CLOSED_TRAIL, PROPERLY_COLORED))
    assert pc_trail_bridge(ecg) == 6


def test_pc_trail_bridge_preconditions():
    mono = EdgeColoredGraph(Graph(range(3), [(0, 1), (1, 2)]), {0: 0, 1: 0})
    with pytest.raises(PreconditionViolation, match="chromatic degree"):
        pc_trail_bridge(mono)
    sq = EdgeColoredGraph(Graph(range(4), [(0, 1), (1, 2), (2, 3), (3, 0)]), {0: 0, 1: 1, 2: 0, 3: 1})
    with pytest.raises(PreconditionViolation, match="closed trail"):
        pc_trail_bridge(sq)


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(2, 3))
def test_pc_trail_bridge_on_random_instances(seed, blobs):
    ecg = pc_trail_bridge_instance(random.Random(seed), blobs)
    e = pc_trail_bridge(ecg)
    check_bridge(ecg.graph, e)


def _exhaustive_class_scan(ecg):
    out = []
    for c, cls in ecg.color_classes().items():
        h = ecg.graph.edge_subgraph(cls)
        parts = complete_multipartite_partition(h)
        if parts is None or len(parts) < 2:
            continue
        rest = ecg.graph.without_edges(cls)
        where = {v: i for i, p in enumerate(parts) for v in p}
        if all(len({where[v] for v in comp if v in where}) <= 1 for comp in connected_components(rest)):
            out.append(c)
    return out


def test_rainbow_class_examples():
    edge = EdgeColoredGraph(Graph([0, 1], [(0, 1)]), {0: "a"})
    c, parts = rainbow_separating_class(edge)
    assert c == "a" and sorted(map(sorted, parts)) == [[0], [1]]
    # a tree decomposed into stars, one class per internal vertex
    tree = Graph(range(6), [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)])
    ecg = EdgeColoredGraph(tree, {0: "x", 1: "x", 2: "y", 3: "y", 4: "z"})
    c, parts = rainbow_separating_class(ecg)
    check_separating_class(ecg, c, parts)
    assert c in _exhaustive_class_scan(ecg)


def test_rainbow_class_preconditions():
    tri = EdgeColoredGraph(Graph(range(3), [(0, 1), (1, 2), (2, 0)]), {0: 0, 1: 1, 2: 2})
    with pytest.raises(PreconditionViolation, match="rainbow cycle"):
        rainbow_separating_class(tri)
    p4 = EdgeColoredGraph(Graph(range(4), [(0, 1), (1, 2), (2, 3)]), {0: 0, 1: 0, 2: 0})
    with pytest.raises(PreconditionViolation, match="multipartite"):
        rainbow_separating_class(p4)


@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(1, 4))
def test_rainbow_class_on_random_decompositions(seed, classes):
    ecg = rainbow_acyclic_decomposition(random.Random(seed), classes)
    assert not oracle_exists(Query(ecg, CYCLE, RAINBOW), limit=ecg.graph.num_vertices())
    c, parts = rainbow_separating_class(ecg)
    check_separating_class(ecg, c, parts)


@pytest.mark.parametrize("edges, sizes", [
    ([(0, 1), (1, 2), (2, 0)], [1, 1, 1]),
    ([(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], [2, 3]),
    ([(0, 1), (2, 3)], None),
])
def test_multipartite_examples(edges, sizes):
    g = Graph(range(max(max(p) for p in edges) + 1), edges)
    parts = complete_multipartite_partition(g)
    if sizes is None:
        assert parts is None
    else:
        assert sorted(map(len, parts)) == sizes
        check_multipartite_partition(g, parts)
