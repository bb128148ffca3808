"""Bridge-deletion orderings, kingdoms and blossom-binding for unique perfect matchings.

For a graph with a unique perfect matching ``M``, the matching edges can be
peeled off one bridge at a time.  ``e`` precedes ``f`` when ``e`` is removed
before ``f`` in every such peeling; this order coincides with the transitive
closure of blossom-binding (``e`` is the stem of a blossom through ``f``),
which is what :func:`kingdom_order` computes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GraphError, PreconditionViolation
from .graph import CYCLE, Certificate, Graph, bridge_sides
from .matching import (ALTERNATING, Blossom, Matching, augmenting_path_through_edge,
                       check_blossom, is_unique_perfect_matching)


def _require_unique(g: Graph, m: Matching) -> None:
    if not is_unique_perfect_matching(g, m):
        raise PreconditionViolation("matching must be the unique perfect matching of the graph")


def _require_matching_edge(m: Matching, e: int) -> None:
    if e not in m:
        raise PreconditionViolation(f"edge {e} is not a matching edge")


def bridge_deletion_ordering(g: Graph, m: Matching) -> list[int]:
    """Peel matching bridges greedily, smallest id first."""
    _require_unique(g, m)
    order = []
    cur = g
    while cur.num_vertices():
        e = min(f for f in bridge_sides(cur) if f in m.edges)
        order.append(e)
        cur = cur.without_vertices(cur.ends(e))
    return order


def kingdom(g: Graph, m: Matching, e: int) -> frozenset[int]:
    """Vertices left when every deletable matching bridge other than ``e`` is removed.

    Bridges stay bridges in induced subgraphs, so all currently deletable
    bridges can be removed in one round without affecting the fixpoint.
    """
    _require_unique(g, m)
    _require_matching_edge(m, e)
    cur = g
    while True:
        drop = [x for f in bridge_sides(cur) if f in m.edges and f != e for x in cur.ends(f)]
        if not drop:
            return frozenset(cur.vertices)
        cur = cur.without_vertices(drop)


def vertex_binds(g: Graph, m: Matching, u: int, f: int) -> Blossom | None:
    """A blossom rooted at ``u`` whose cycle contains the matching edge ``f``.

    The root and its mate are removed and the root is split into two exposed
    copies ``s`` and ``t``, each adjacent to the other neighbors of the root.
    Blossoms rooted at ``u`` through ``f`` are then exactly the augmenting
    ``s``-``t`` paths crossing ``f``.
    """
    _require_unique(g, m)
    _require_matching_edge(m, f)
    stem = m.edge_at(u)
    mate = m.mate(u)
    if f == stem:
        return None
    core = g.without_vertices((u, mate))
    s = g.fresh_vertex()
    t = s + 1
    edges = core.edge_map()
    origin: dict[int, int] = {}
    nxt = g.fresh_edge()
    for e in g.incident(u):
        w = g.other(e, u)
        if w == mate:
            continue
        for copy in (s, t):
            edges[nxt] = (copy, w)
            origin[nxt] = e
            nxt += 1
    split = Graph(core.vertices + (s, t), edges, check=False)
    path = augmenting_path_through_edge(split, Matching(split, m.edges - {stem}), f)
    if path is None:
        return None
    if path.start == t:
        path = path.reversed()
    vs = (u,) + path.vertices[1:-1] + (u,)
    es = tuple(origin.get(e, e) for e in path.edges)
    cycle = Certificate(CYCLE, vs, es, ALTERNATING)
    return Blossom(u, cycle, stem)


def blossom_binds(g: Graph, m: Matching, source: int, f: int, *,
                  source_is_vertex: bool = False) -> Blossom | None:
    """Witness that ``source`` binds ``f``, or ``None``.

    By default ``source`` is a matching edge ``e = (v, w)``, which binds ``f``
    when ``e`` is the stem of a blossom through ``f``, i.e. when ``v`` or
    ``w`` binds ``f``.  With ``source_is_vertex`` the vertex form is used.
    """
    if source_is_vertex:
        return vertex_binds(g, m, source, f)
    _require_matching_edge(m, source)
    for root in g.ends(source):
        b = vertex_binds(g, m, root, f)
        if b is not None:
            return b
    return None


@dataclass
class KingdomOrder:
    """The precedence order on matching edges with its blossom-binding witnesses."""

    ground: tuple[int, ...]
    precedes: frozenset[tuple[int, int]]
    binds: frozenset[tuple[int, int]]
    witnesses: dict[tuple[int, int], Blossom] = field(default_factory=dict)

    def before(self, e: int, f: int) -> bool:
        return (e, f) in self.precedes


def kingdom_order(g: Graph, m: Matching) -> KingdomOrder:
    """Blossom-binding on all ordered pairs, closed transitively."""
    _require_unique(g, m)
    ground = tuple(sorted(m.edges))
    witnesses = {}
    for e in ground:
        for f in ground:
            if e == f:
                continue
            b = blossom_binds(g, m, e, f)
            if b is not None:
                witnesses[(e, f)] = b
    k = len(ground)
    pos = {e: i for i, e in enumerate(ground)}
    reach = [[False] * k for _ in range(k)]
    for e, f in witnesses:
        reach[pos[e]][pos[f]] = True
    for mid in range(k):
        row_mid = reach[mid]
        for i in range(k):
            if reach[i][mid]:
                row = reach[i]
                for j in range(k):
                    if row_mid[j]:
                        row[j] = True
    precedes = frozenset((ground[i], ground[j]) for i in range(k) for j in range(k) if reach[i][j])
    return KingdomOrder(ground, precedes, frozenset(witnesses), witnesses)


def shrink_blossom(g: Graph, m: Matching, b: Blossom) -> tuple[Graph, Matching, int]:
    """Contract the blossom to one fresh vertex.

    Edge ids survive unchanged; among parallel quotient edges the matching
    edge is kept if there is one, else the smallest id.  Every vertex
    outside the blossom keeps its id.
    """
    try:
        check_blossom(m, b)
    except GraphError as exc:
        raise PreconditionViolation(f"invalid blossom: {exc}") from None
    inside = b.vertices
    r = g.fresh_vertex()
    edges: dict[int, tuple[int, int]] = {}
    attached: set[int] = set()
    # the stem must survive deduplication, so matching edges go first
    for e in sorted(g.edges, key=lambda e: (e not in m.edges, e)):
        x, y = g.ends(e)
        xin, yin = x in inside, y in inside
        if xin and yin:
            continue
        if xin or yin:
            w = y if xin else x
            if w in attached:
                continue
            attached.add(w)
            edges[e] = (r, w)
        else:
            edges[e] = (x, y)
    verts = [v for v in g.vertices if v not in inside] + [r]
    q = Graph(verts, edges, check=False)
    return q, Matching(q, (e for e in m.edges if e in edges)), r
