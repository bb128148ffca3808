"""P-gadgets and the gadget graphs for properly colored paths and cycles.

A P-gadget on terminals ``V`` is a graph containing ``V`` with a unique
perfect matching ``M`` such that deleting a nonempty ``U`` of terminals leaves
a graph with a perfect matching exactly when ``|U| = 2``.

Construction used here (``k`` terminals):

* ``k = 1``: the terminal matched to a private partner;
* ``k = 2``: a single matching edge between the two terminals;
* ``k >= 3``: every terminal ``x_i`` matched to a private ``x_i'``, a hub
  matching edge ``z1 - z2``, and every ``x_i'`` adjacent to both hubs.
  Removing ``x_i`` and ``x_j`` lets ``x_i'`` and ``x_j'`` take the two hubs;
  removing three or more terminals leaves more partners than hubs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..errors import CertificateError, GuardExceeded, PreconditionViolation
from ..graph import CYCLE, PATH, Certificate, Graph
from ..instances import EdgeColoredGraph
from ..matching import (ALTERNATING, Matching, find_unique_perfect_matching, maximum_matching)
from ..query import PROPERLY_COLORED
from .artifact import ReductionArtifact, project

VERIFY_GUARD = 8


@dataclass
class PGadget:
    graph: Graph
    matching: frozenset[int]
    terminals: tuple[int, ...]
    _routes: dict = field(default_factory=dict, repr=False)

    def route(self, a: int, b: int) -> Certificate:
        """Alternating ``a``-``b`` path through the gadget, first and last edges matched.

        Read off the symmetric difference between ``M`` and a perfect
        matching of the gadget without ``a`` and ``b``.
        """
        key = (a, b)
        if key not in self._routes:
            rest = self.graph.without_vertices((a, b))
            other = maximum_matching(rest)
            if 2 * len(other) != rest.num_vertices():
                raise PreconditionViolation(f"gadget has no perfect matching without {a} and {b}")
            diff = self.matching.symmetric_difference(other.edges)
            step: dict[int, list[int]] = {}
            for e in diff:
                for x in self.graph.ends(e):
                    step.setdefault(x, []).append(e)
            vs, es = [a], []
            prev = None
            while vs[-1] != b:
                e = next(f for f in step[vs[-1]] if f != prev)
                es.append(e)
                vs.append(self.graph.other(e, vs[-1]))
                prev = e
            self._routes[key] = Certificate(PATH, tuple(vs), tuple(es), ALTERNATING)
        return self._routes[key]


def build_p_gadget(terminals, first_vertex: int | None = None, first_edge: int = 0) -> PGadget:
    """P-gadget on ``terminals``; interior vertices get ids from ``first_vertex`` on."""
    terms = tuple(terminals)
    if not terms:
        raise PreconditionViolation("a P-gadget needs at least one terminal")
    if len(set(terms)) != len(terms):
        raise PreconditionViolation("terminals must be distinct")
    nv = max(terms) + 1 if first_vertex is None else first_vertex
    ne = first_edge
    verts = list(terms)
    edges: dict[int, tuple[int, int]] = {}
    matching = []
    k = len(terms)
    if k == 2:
        edges[ne] = terms
        matching.append(ne)
    else:
        partners = []
        for x in terms:
            edges[ne] = (x, nv)
            matching.append(ne)
            partners.append(nv)
            verts.append(nv)
            ne += 1
            nv += 1
        if k >= 3:
            z1, z2 = nv, nv + 1
            verts += [z1, z2]
            edges[ne] = (z1, z2)
            matching.append(ne)
            ne += 1
            for p in partners:
                for z in (z1, z2):
                    edges[ne] = (p, z)
                    ne += 1
    return PGadget(Graph(verts, edges, check=False), frozenset(matching), terms)


def verify_p_gadget(p: PGadget) -> bool:
    """Check uniqueness of ``M`` and the deletion property for every nonempty terminal subset."""
    if len(p.terminals) > VERIFY_GUARD:
        raise GuardExceeded(f"gadget verification refuses {len(p.terminals)} terminals")
    g = p.graph
    unique = find_unique_perfect_matching(g)
    if unique is None or unique.edges != p.matching:
        return False
    for r in range(1, len(p.terminals) + 1):
        for sub in combinations(p.terminals, r):
            rest = g.without_vertices(sub)
            perfect = 2 * len(maximum_matching(rest)) == rest.num_vertices()
            if perfect != (r == 2):
                return False
    return True


class _GadgetLayout:
    """Disjoint union of one P-gadget per vertex on the colors it sees."""

    def __init__(self, ecg: EdgeColoredGraph, skip=()):
        g = ecg.graph
        self.terminal: dict[tuple[int, object], int] = {}
        self.gadget: dict[int, PGadget] = {}
        self.vertex_origin: dict[int, int] = {}
        self.verts: list[int] = []
        self.edges: dict[int, tuple[int, int]] = {}
        self.matching: list[int] = []
        nv = ne = 0
        for v in g.vertices:
            if v in skip:
                continue
            cols = list(dict.fromkeys(ecg.colors[e] for e in g.incident(v)))
            if not cols:
                continue
            terms = list(range(nv, nv + len(cols)))
            for c, x in zip(cols, terms):
                self.terminal[(v, c)] = x
            p = build_p_gadget(terms, nv + len(cols), ne)
            self.gadget[v] = p
            for x in p.graph.vertices:
                self.vertex_origin[x] = v
            self.verts += p.graph.vertices
            self.edges.update(p.graph.edge_map())
            self.matching += p.matching
            nv = max(p.graph.vertices) + 1
            ne = max(p.graph.edges) + 1
        self.next_vertex, self.next_edge = nv, ne


def _route_through(layout: _GadgetLayout, v: int, a: int, b: int, vs: list, es: list) -> None:
    r = layout.gadget[v].route(a, b)
    vs += r.vertices[1:]
    es += r.edges


def pc_gadget_graph(ecg: EdgeColoredGraph) -> ReductionArtifact:
    """Gadget graph whose matching is unique iff ``ecg`` has no properly colored cycle.

    Edge ``e = (u, v)`` of color ``c`` becomes ``(u_c, v_c)`` with the same id
    offset past the gadget edges; alternating cycles project onto properly
    colored cycles by keeping these edges.  Isolated vertices are dropped.
    """
    g = ecg.graph
    lay = _GadgetLayout(ecg)
    edge_origin: dict[int, int | None] = {e: None for e in lay.edges}
    image: dict[int, int] = {}
    ne = lay.next_edge
    for e in g.edges:
        u, v = g.ends(e)
        c = ecg.colors[e]
        lay.edges[ne] = (lay.terminal[(u, c)], lay.terminal[(v, c)])
        edge_origin[ne] = e
        image[e] = ne
        ne += 1
    tg = Graph(lay.verts, lay.edges, check=False)
    m = Matching(tg, lay.matching)

    def forward(cert: Certificate) -> Certificate:
        if not cert.closed:
            raise CertificateError("the cycle gadget graph lifts cycles only")
        vs, es = cert.vertices, cert.edges
        col = ecg.colors
        out_vs = [lay.terminal[(vs[0], col[es[0]])]]
        out_es: list[int] = []
        for i, e in enumerate(es):
            b = vs[i + 1]
            out_es.append(image[e])
            out_vs.append(lay.terminal[(b, col[e])])
            f = es[(i + 1) % len(es)]
            _route_through(lay, b, lay.terminal[(b, col[e])], lay.terminal[(b, col[f])], out_vs, out_es)
        return Certificate(CYCLE, tuple(out_vs), tuple(out_es), ALTERNATING)

    def backward(cert: Certificate) -> Certificate:
        return project(cert, edge_origin.get, lay.vertex_origin.__getitem__, CYCLE, PROPERLY_COLORED)

    return ReductionArtifact(ecg, m, forward, backward, dict(lay.vertex_origin), edge_origin,
                             {"terminal": lay.terminal, "image": image})


def pc_path_gadget_graph(ecg: EdgeColoredGraph, s: int, t: int) -> ReductionArtifact:
    """Gadget graph for properly colored ``s``-``t`` paths.

    Every vertex other than ``s`` and ``t`` gets a P-gadget; ``s`` and ``t``
    become single exposed vertices.  Augmenting paths between them project
    onto properly colored ``s``-``t`` paths.
    """
    if s == t:
        raise PreconditionViolation("path endpoints must be distinct")
    g = ecg.graph
    lay = _GadgetLayout(ecg, skip=(s, t))
    s_img, t_img = lay.next_vertex, lay.next_vertex + 1
    lay.verts += [s_img, t_img]
    lay.vertex_origin[s_img], lay.vertex_origin[t_img] = s, t
    edge_origin: dict[int, int | None] = {e: None for e in lay.edges}
    image: dict[int, int] = {}
    ends_img = {s: s_img, t: t_img}
    ne = lay.next_edge
    for e in g.edges:
        u, v = g.ends(e)
        c = ecg.colors[e]
        a = ends_img[u] if u in ends_img else lay.terminal[(u, c)]
        b = ends_img[v] if v in ends_img else lay.terminal[(v, c)]
        lay.edges[ne] = (a, b)
        edge_origin[ne] = e
        image[e] = ne
        ne += 1
    tg = Graph(lay.verts, lay.edges, check=False)
    m = Matching(tg, lay.matching)

    def forward(cert: Certificate) -> Certificate:
        vs, es = cert.vertices, cert.edges
        col = ecg.colors
        out_vs = [s_img]
        out_es: list[int] = []
        for i, e in enumerate(es):
            b = vs[i + 1]
            out_es.append(image[e])
            if b == t:
                out_vs.append(t_img)
                break
            out_vs.append(lay.terminal[(b, col[e])])
            _route_through(lay, b, lay.terminal[(b, col[e])], lay.terminal[(b, col[es[i + 1]])],
                           out_vs, out_es)
        return Certificate(PATH, tuple(out_vs), tuple(out_es), ALTERNATING)

    def backward(cert: Certificate) -> Certificate:
        return project(cert, edge_origin.get, lay.vertex_origin.__getitem__, PATH, PROPERLY_COLORED)

    return ReductionArtifact(ecg, m, forward, backward, dict(lay.vertex_origin), edge_origin,
                             {"terminal": lay.terminal, "image": image, "ends": (s_img, t_img)})
