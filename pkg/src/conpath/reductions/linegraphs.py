"""Line-graph constructions for graphs with forbidden transitions.

The EC-line graph has one vertex per edge and one edge per allowed
transition, colored by the vertex where the transition happens.  Compatible
trails become properly colored paths there, compatible paths become rainbow
ones.  The PM-line graph goes one step further: every edge ``e = (u, v)``
becomes a matching edge ``u_e - v_e`` and every allowed transition at ``u``
joins ``u_e`` and ``u_f``, so compatible closed trails become alternating
cycles.
"""

from __future__ import annotations

from ..errors import CertificateError
from ..graph import CLOSED_TRAIL, CYCLE, PATH, TRAIL, Certificate, Graph
from ..instances import EdgeColoredGraph, TransitionSystem
from ..matching import Matching
from ..query import ALTERNATING, PROPERLY_COLORED, RAINBOW, TRANSITIONS
from .artifact import ReductionArtifact, project


def ec_line_graph(g: Graph, t: TransitionSystem) -> ReductionArtifact:
    """EC-line graph as an :class:`EdgeColoredGraph` target.

    Forward maps compatible trails (paths) to properly colored (rainbow)
    paths and closed trails (cycles) to properly colored (rainbow) cycles.
    Backward reverses this; a single-vertex path needs ``start=`` to know
    which endpoint of the edge the trail leaves from.
    """
    edges: dict[int, tuple[int, int]] = {}
    colors: dict[int, int] = {}
    index: dict[tuple[int, int, int], int] = {}
    nxt = 0
    for v in g.vertices:
        for e, f in t.pairs(v):
            edges[nxt] = (e, f)
            colors[nxt] = v
            index[(v, e, f)] = index[(v, f, e)] = nxt
            nxt += 1
    lg = EdgeColoredGraph(Graph(g.edges, edges, check=False), colors)

    def forward(cert: Certificate) -> Certificate:
        vs, es = cert.vertices, cert.edges
        rainbow = cert.kind in (PATH, CYCLE)
        constraint = RAINBOW if rainbow else PROPERLY_COLORED
        out_es = []
        for i in range(1, len(es)):
            out_es.append(index[(vs[i], es[i - 1], es[i])])
        if cert.closed:
            out_es.append(index[(vs[0], es[-1], es[0])])
            return Certificate(CYCLE, tuple(es) + (es[0],), tuple(out_es), constraint)
        return Certificate(PATH, tuple(es), tuple(out_es), constraint)

    def backward(cert: Certificate, start: int | None = None) -> Certificate:
        rainbow = cert.constraint == RAINBOW
        es = cert.vertices[:-1] if cert.closed else cert.vertices
        turns = [colors[f] for f in cert.edges]
        if cert.closed:
            vs = [turns[-1]] + turns
            kind = CYCLE if rainbow else CLOSED_TRAIL
        else:
            if turns:
                first = g.other(es[0], turns[0])
                last = g.other(es[-1], turns[-1])
            else:
                if start is None:
                    raise CertificateError("a one-edge trail needs its start vertex")
                first = start
                last = g.other(es[0], start)
            if start is not None and first != start:
                raise CertificateError(f"trail starts at {first}, not at {start}")
            vs = [first] + turns + [last]
            kind = PATH if rainbow else TRAIL
        try:
            return Certificate(kind, tuple(vs), tuple(es), TRANSITIONS)
        except ValueError as exc:
            raise CertificateError(str(exc)) from None

    return ReductionArtifact((g, t), lg, forward, backward,
                             {e: e for e in g.edges}, {f: None for f in edges},
                             {"transition_edge": index})


def pm_line_vertex(g: Graph, u: int, e: int) -> int:
    """Id of ``u_e``: ``2e`` for the first listed endpoint of ``e``, ``2e + 1`` for the second."""
    return 2 * e + (0 if g.ends(e)[0] == u else 1)


def pm_line_graph(g: Graph, t: TransitionSystem) -> ReductionArtifact:
    """PM-line graph as a :class:`Matching` target.

    Matching edge ``u_e - v_e`` reuses the id ``e``; transition edges get
    fresh ids above the largest edge id of ``g``.  Compatible trails map to
    alternating paths that start and end with matching edges, compatible
    closed trails to alternating cycles.
    """
    verts = []
    edges: dict[int, tuple[int, int]] = {}
    for e in g.edges:
        verts += [2 * e, 2 * e + 1]
        edges[e] = (2 * e, 2 * e + 1)
    nxt = g.fresh_edge()
    index: dict[tuple[int, int, int], int] = {}
    edge_origin: dict[int, int | None] = {e: e for e in g.edges}
    for v in g.vertices:
        for e, f in t.pairs(v):
            edges[nxt] = (pm_line_vertex(g, v, e), pm_line_vertex(g, v, f))
            index[(v, e, f)] = index[(v, f, e)] = nxt
            edge_origin[nxt] = None
            nxt += 1
    tg = Graph(verts, edges, check=False)
    m = Matching(tg, g.edges)
    vertex_origin = {2 * e + i: g.ends(e)[i] for e in g.edges for i in (0, 1)}

    def forward(cert: Certificate) -> Certificate:
        vs, es = cert.vertices, cert.edges
        out_vs = [pm_line_vertex(g, vs[0], es[0])]
        out_es = []
        for i, e in enumerate(es):
            out_es.append(e)
            out_vs.append(pm_line_vertex(g, vs[i + 1], e))
            nxt_e = es[i + 1] if i + 1 < len(es) else (es[0] if cert.closed else None)
            if nxt_e is not None:
                out_es.append(index[(vs[i + 1], e, nxt_e)])
                out_vs.append(pm_line_vertex(g, vs[i + 1], nxt_e))
        kind = CYCLE if cert.closed else PATH
        return Certificate(kind, tuple(out_vs), tuple(out_es), ALTERNATING)

    def backward(cert: Certificate) -> Certificate:
        kind = CLOSED_TRAIL if cert.closed else TRAIL
        if cert.closed and cert.edges[0] not in m.edges:
            # rotate so the cycle begins with a matching edge
            vs, es = cert.vertices, cert.edges
            cert = Certificate(cert.kind, vs[1:] + (vs[1],), es[1:] + es[:1], cert.constraint)
        return project(cert, edge_origin.get, vertex_origin.__getitem__, kind, TRANSITIONS)

    return ReductionArtifact((g, t), m, forward, backward, vertex_origin, edge_origin,
                             {"transition_edge": index})
