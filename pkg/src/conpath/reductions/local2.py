"""Locally 2-colored graphs and their correspondence with perfect matchings.

Splitting every vertex ``u`` into a matched pair ``u_R - u_B`` and attaching
each edge to the side named by its labels turns compatible paths and cycles
into alternating ones.  Contracting the matching edges undoes the split.
"""

from __future__ import annotations

from collections.abc import Callable

from ..errors import GraphError, PreconditionViolation
from ..graph import CYCLE, PATH, Certificate, Digraph, Graph
from ..instances import BLUE, RED, EdgeColoredGraph, LocallyTwoColoredGraph
from ..matching import Matching
from ..query import ALTERNATING, LOCAL2
from .artifact import ReductionArtifact, project


def split_vertex(u: int, side: str) -> int:
    """Id of the ``side`` copy of ``u`` in the matched image."""
    return 2 * u + (0 if side == RED else 1)


def _opposite(side: str) -> str:
    return BLUE if side == RED else RED


def _lift(l: LocallyTwoColoredGraph, match_edge: dict[int, int], cert: Certificate) -> Certificate:
    """Alternating image of a compatible path or cycle, bounded by matching edges."""
    vs, es = cert.vertices, cert.edges
    out_vs: list[int] = []
    out_es: list[int] = []
    if cert.closed:
        for i, e in enumerate(es):
            a, b = vs[i], vs[i + 1]
            if i == 0:
                out_vs.append(split_vertex(a, l.side(e, a)))
            out_es.append(e)
            out_vs.append(split_vertex(b, l.side(e, b)))
            out_es.append(match_edge[b])
            out_vs.append(split_vertex(b, _opposite(l.side(e, b))))
        return Certificate(CYCLE, tuple(out_vs), tuple(out_es), ALTERNATING)
    x = vs[0]
    first = l.side(es[0], x)
    out_vs += [split_vertex(x, _opposite(first)), split_vertex(x, first)]
    out_es.append(match_edge[x])
    for i, e in enumerate(es):
        b = vs[i + 1]
        side = l.side(e, b)
        out_es += [e, match_edge[b]]
        out_vs += [split_vertex(b, side), split_vertex(b, _opposite(side))]
    return Certificate(PATH, tuple(out_vs), tuple(out_es), ALTERNATING)


def _matched_image(l: LocallyTwoColoredGraph):
    g = l.graph
    nxt = g.fresh_edge()
    edges: dict[int, tuple[int, int]] = {}
    match_edge: dict[int, int] = {}
    verts: list[int] = []
    for u in g.vertices:
        r, b = split_vertex(u, RED), split_vertex(u, BLUE)
        verts += [r, b]
        edges[nxt] = (r, b)
        match_edge[u] = nxt
        nxt += 1
    for e in g.edges:
        a, b = g.ends(e)
        edges[e] = (split_vertex(a, l.side(e, a)), split_vertex(b, l.side(e, b)))
    return verts, edges, match_edge, nxt


def to_matched_graph(l: LocallyTwoColoredGraph) -> ReductionArtifact:
    """Split each vertex into a matched red/blue pair; returns a :class:`Matching` target."""
    verts, edges, match_edge, _ = _matched_image(l)
    tg = Graph(verts, edges, check=False)
    m = Matching(tg, match_edge.values())
    matching_ids = set(match_edge.values())
    vertex_origin = {v: v // 2 for v in verts}
    edge_origin = {e: (None if e in matching_ids else e) for e in edges}

    def backward(cert: Certificate) -> Certificate:
        return project(cert, edge_origin.get, vertex_origin.__getitem__, cert.kind, LOCAL2)

    return ReductionArtifact(l, m, lambda c: _lift(l, match_edge, c), backward,
                             vertex_origin, edge_origin, {"matching_edge": match_edge})


def terminal_matched_graph(l: LocallyTwoColoredGraph, x: int, y: int) -> ReductionArtifact:
    """Matched image plus two exposed terminals, joined to both copies of ``x`` and of ``y``.

    Augmenting paths between the terminals are exactly the images of the
    compatible ``x``-``y`` paths.
    """
    if x == y:
        raise PreconditionViolation("path endpoints must be distinct")
    verts, edges, match_edge, nxt = _matched_image(l)
    top = max(verts, default=-1)
    s_term, t_term = top + 1, top + 2
    hooks = set()
    for term, end in ((s_term, x), (t_term, y)):
        for side in (RED, BLUE):
            edges[nxt] = (term, split_vertex(end, side))
            hooks.add(nxt)
            nxt += 1
    tg = Graph(verts + [s_term, t_term], edges, check=False)
    m = Matching(tg, match_edge.values())
    matching_ids = set(match_edge.values())
    vertex_origin = {v: v // 2 for v in verts}
    vertex_origin[s_term], vertex_origin[t_term] = x, y
    edge_origin = {e: (None if e in matching_ids or e in hooks else e) for e in edges}

    def forward(cert: Certificate) -> Certificate:
        inner = _lift(l, match_edge, cert)
        head = tg.edge_between(s_term, inner.vertices[0])
        tail = tg.edge_between(inner.vertices[-1], t_term)
        return Certificate(PATH, (s_term,) + inner.vertices + (t_term,),
                           (head,) + inner.edges + (tail,), ALTERNATING)

    def backward(cert: Certificate) -> Certificate:
        return project(cert, edge_origin.get, vertex_origin.__getitem__, PATH, LOCAL2)

    return ReductionArtifact(l, m, forward, backward, vertex_origin, edge_origin,
                             {"matching_edge": match_edge, "terminals": (s_term, t_term)})


def from_matched_graph(m: Matching) -> LocallyTwoColoredGraph:
    """Contract every matching edge.

    Pairs are numbered by their smallest endpoint; that endpoint is the red
    side.  Non-matching edges keep their ids.
    """
    if not m.is_perfect:
        raise PreconditionViolation("contracting a matched graph needs a perfect matching")
    g = m.graph
    pairs = sorted((min(g.ends(e)), max(g.ends(e))) for e in m.edges)
    where: dict[int, tuple[int, str]] = {}
    for i, (a, b) in enumerate(pairs):
        where[a] = (i, RED)
        where[b] = (i, BLUE)
    edges = {}
    sides = {}
    for e in g.edges:
        if e in m.edges:
            continue
        a, b = g.ends(e)
        (pa, sa), (pb, sb) = where[a], where[b]
        edges[e] = (pa, pb)
        sides[(e, pa)] = sa
        sides[(e, pb)] = sb
    return LocallyTwoColoredGraph(Graph(range(len(pairs)), edges, multi=True), sides)


def digraph_to_local2(d: Digraph) -> LocallyTwoColoredGraph:
    """Every arc leaves its tail on the blue side and enters its head on the red side."""
    edges = {}
    sides = {}
    for a in d.arcs:
        u, v = d.ends(a)
        edges[a] = (u, v)
        sides[(a, u)] = BLUE
        sides[(a, v)] = RED
    return LocallyTwoColoredGraph(Graph(d.vertices, edges, multi=True), sides)


def local2_from_coloring(ecg: EdgeColoredGraph,
                         red: Callable[[int], object] | None = None) -> LocallyTwoColoredGraph:
    """View a graph of chromatic degree at most 2 as locally 2-colored.

    ``red(v)`` names the color sent to the red side at ``v``; by default it is
    the color of the smallest incident edge.
    """
    g = ecg.graph
    sides = {}
    for v in g.vertices:
        inc = g.incident(v)
        if not inc:
            continue
        cols = {ecg.colors[e] for e in inc}
        if len(cols) > 2:
            raise GraphError(f"vertex {v} has chromatic degree {len(cols)} > 2")
        rc = red(v) if red is not None else ecg.colors[inc[0]]
        for e in inc:
            sides[(e, v)] = RED if ecg.colors[e] == rc else BLUE
    return LocallyTwoColoredGraph(g, sides)
