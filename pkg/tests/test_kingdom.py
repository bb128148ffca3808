import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conpath.errors import PreconditionViolation
from conpath.generators import unique_pm_graph
from conpath.graph import CYCLE, Certificate, Graph, bridges
from conpath.kingdom import (blossom_binds, bridge_deletion_ordering, kingdom, kingdom_order,
                             shrink_blossom, vertex_binds)
from conpath.matching import Blossom, Matching, check_blossom, is_unique_perfect_matching
from conpath.oracle import all_blossoms, all_bridge_deletion_orderings, precedence_from_orderings

# s=0, r=1, a=2, b=3: stem s-r into triangle r-a-b
STEM = Graph(range(4), [(0, 1), (1, 2), (2, 3), (3, 1)])
STEM_M = Matching(STEM, [0, 2])
TWO = Graph(range(4), [(0, 1), (2, 3)])
TWO_M = Matching(TWO, [0, 1])


def _fixpoint_kingdom(g, m, e):
    cur = g
    while True:
        drop = [f for f in bridges(cur) if f in m.edges and f != e]
        if not drop:
            return frozenset(cur.vertices)
        cur = cur.without_vertices(cur.ends(drop[0]))


unique_pm = st.builds(lambda seed, pairs: unique_pm_graph(random.Random(seed), pairs),
                      st.integers(0, 10**6), st.integers(1, 5))


def test_single_edge():
    g = Graph([0, 1], [(0, 1)])
    m = Matching(g, [0])
    assert bridge_deletion_ordering(g, m) == [0]
    assert kingdom(g, m, 0) == {0, 1}


def test_two_disjoint_edges():
    assert bridge_deletion_ordering(TWO, TWO_M) == [0, 1]
    assert kingdom(TWO, TWO_M, 0) == {0, 1}
    order = kingdom_order(TWO, TWO_M)
    assert not order.precedes and not order.binds
    assert blossom_binds(TWO, TWO_M, 0, 1) is None


def test_stem_and_triangle():
    assert bridge_deletion_ordering(STEM, STEM_M) == [0, 2]
    assert all_bridge_deletion_orderings(STEM, STEM_M.edges) == [(0, 2)]
    assert kingdom(STEM, STEM_M, 2) == _fixpoint_kingdom(STEM, STEM_M, 2) == {2, 3}
    assert kingdom(STEM, STEM_M, 0) == {0, 1, 2, 3}
    order = kingdom_order(STEM, STEM_M)
    assert order.precedes == {(0, 2)}
    witness = order.witnesses[(0, 2)]
    assert witness.root == 1 and witness.stem == 0
    assert set(witness.cycle.edges) == {1, 2, 3}
    check_blossom(STEM_M, witness)


def test_requires_unique_matching():
    c4 = Graph(range(4), [(0, 1), (1, 2), (2, 3), (3, 0)])
    m = Matching(c4, [0, 2])
    with pytest.raises(PreconditionViolation):
        bridge_deletion_ordering(c4, m)
    with pytest.raises(PreconditionViolation):
        kingdom(STEM, STEM_M, 1)


def test_shrink_stem_triangle():
    b = blossom_binds(STEM, STEM_M, 0, 2)
    q, mq, r = shrink_blossom(STEM, STEM_M, b)
    assert q.num_vertices() == 2 and r not in STEM.vertices
    assert mq.edges == {0} and set(q.ends(0)) == {0, r}


def test_shrink_whole_odd_graph():
    tri = Graph(range(3), [(0, 1), (1, 2), (2, 0)])
    m = Matching(tri, [1])
    # exposed root, so the blossom is written out directly
    b = Blossom(0, Certificate(CYCLE, (0, 1, 2, 0), (0, 1, 2)), None)
    q, mq, r = shrink_blossom(tri, m, b)
    assert q.vertices == (r,) and not mq.edges


def test_shrink_rejects_non_blossom():
    bad = Blossom(1, Certificate(CYCLE, (1, 2, 3, 1), (1, 2, 3)), None)
    with pytest.raises(PreconditionViolation):
        shrink_blossom(STEM, STEM_M, bad)


@settings(max_examples=80, deadline=None)
@given(unique_pm)
def test_order_is_strict_partial_order(m):
    g = m.graph
    order = kingdom_order(g, m)
    rel = order.precedes
    assert all(e != f for e, f in rel)
    for e, f in rel:
        assert (f, e) not in rel
        for f2, h in rel:
            if f2 == f:
                assert (e, h) in rel


@settings(max_examples=80, deadline=None)
@given(unique_pm)
def test_order_nests_kingdoms(m):
    g = m.graph
    order = kingdom_order(g, m)
    for e, f in order.precedes:
        ke, kf = kingdom(g, m, e), kingdom(g, m, f)
        assert set(g.ends(f)) <= ke
        assert kf <= ke


@settings(max_examples=80, deadline=None)
@given(unique_pm)
def test_kingdom_matches_fixpoint(m):
    g = m.graph
    for e in m.edges:
        assert kingdom(g, m, e) == _fixpoint_kingdom(g, m, e)


@settings(max_examples=60, deadline=None)
@given(unique_pm)
def test_ordering_is_valid(m):
    g = m.graph
    order = bridge_deletion_ordering(g, m)
    assert sorted(order) == sorted(m.edges)
    assert tuple(order) in all_bridge_deletion_orderings(g, m.edges)


@settings(max_examples=80, deadline=None)
@given(unique_pm)
def test_binds_match_blossom_enumeration(m):
    g = m.graph
    blossoms = all_blossoms(g, m.edges)
    for u in g.vertices:
        for f in m.edges:
            expected = any(root == u and f in es for root, es in blossoms)
            got = vertex_binds(g, m, u, f)
            assert (got is not None) == expected
            if got is not None:
                check_blossom(m, got)
                assert f in got.cycle.edges


@settings(max_examples=50, deadline=None)
@given(unique_pm)
def test_order_equals_all_orderings_precedence(m):
    g = m.graph
    order = kingdom_order(g, m)
    assert set(order.precedes) == precedence_from_orderings(all_bridge_deletion_orderings(g, m.edges))


@settings(max_examples=50, deadline=None)
@given(unique_pm)
def test_shrinking_keeps_matching_unique(m):
    g = m.graph
    for e, f in kingdom_order(g, m).binds:
        b = blossom_binds(g, m, e, f)
        q, mq, r = shrink_blossom(g, m, b)
        assert is_unique_perfect_matching(q, mq)
        assert mq.edge_at(r) == e
