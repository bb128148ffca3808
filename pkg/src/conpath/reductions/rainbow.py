"""Reductions for rainbow paths: the star reduction and the gadget-replacement transformer."""

from __future__ import annotations

from ..errors import CertificateError, PreconditionViolation
from ..graph import Certificate, Graph
from ..instances import EdgeColoredGraph
from ..multipartite import K2_K2, complete_multipartite_partition, induced_pattern
from ..query import PROPERLY_COLORED, RAINBOW
from .artifact import ReductionArtifact


def class_partitions(g: EdgeColoredGraph) -> dict[object, list[frozenset[int]]]:
    """Vertex partition of every color class; raises if some class is not complete multipartite."""
    out = {}
    for c in g.palette():
        parts = complete_multipartite_partition(g.class_graph(c))
        if parts is None:
            raise PreconditionViolation(f"color class {c!r} is not complete multipartite")
        out[c] = parts
    return out


def rainbow_star_reduction(g: EdgeColoredGraph, partitions=None) -> ReductionArtifact:
    """Replace every color class by a star on a fresh center.

    The center ``w_i`` of class ``i`` gets ids above the vertices of ``g``, in
    palette order.  Edge ``(v, w_i)`` is colored ``(i, p)`` where ``p`` is the
    index of the part of ``v`` in class ``i``; two star edges share a color
    exactly when their ends lie in the same part.  Properly colored paths
    and cycles between original vertices correspond to rainbow ones in ``g``.
    """
    base = g.graph
    if partitions is None:
        partitions = class_partitions(g)
    top = base.fresh_vertex()
    center = {c: top + i for i, c in enumerate(g.palette())}
    edges: dict[int, tuple[int, int]] = {}
    colors: dict[int, tuple] = {}
    spoke: dict[tuple[int, object], int] = {}
    part_of: dict[tuple[int, object], int] = {}
    nxt = 0
    for c in g.palette():
        for p, part in enumerate(partitions[c]):
            for v in sorted(part):
                edges[nxt] = (v, center[c])
                colors[nxt] = (c, p)
                spoke[(v, c)] = nxt
                part_of[(v, c)] = p
                nxt += 1
    star = EdgeColoredGraph(Graph(list(base.vertices) + list(center.values()), edges, check=False), colors)
    owner = {w: c for c, w in center.items()}

    def forward(cert: Certificate) -> Certificate:
        vs, es = cert.vertices, cert.edges
        out_vs = [vs[0]]
        out_es = []
        for i, e in enumerate(es):
            c = g.colors[e]
            out_es += [spoke[(vs[i], c)], spoke[(vs[i + 1], c)]]
            out_vs += [center[c], vs[i + 1]]
        return Certificate(cert.kind, tuple(out_vs), tuple(out_es), PROPERLY_COLORED)

    def backward(cert: Certificate) -> Certificate:
        vs, es = cert.vertices, cert.edges
        if vs[0] in owner:
            if not cert.closed:
                raise CertificateError("star-graph path must start at an original vertex")
            vs = vs[1:] + (vs[1],)
            es = es[1:] + es[:1]
        out_vs = vs[0::2]
        out_es = []
        for i in range(1, len(vs), 2):
            c = owner.get(vs[i])
            e = base.edge_between(vs[i - 1], vs[i + 1])
            if c is None or e is None or g.colors[e] != c:
                raise CertificateError(f"star hop through {vs[i]} is not an edge of that class")
            out_es.append(e)
        return Certificate(cert.kind, tuple(out_vs), tuple(out_es), RAINBOW)

    return ReductionArtifact(g, star, forward, backward,
                             {v: v for v in base.vertices}, {},
                             {"center": center, "partitions": partitions, "part_of": part_of})


def _edges_pairs(h: Graph) -> list[tuple[int, int]]:
    return [h.ends(e) for e in h.edges]


def replace_color_classes_with_gadget(g: EdgeColoredGraph, gamma: Graph,
                                      w: tuple[int, int, int, int]) -> ReductionArtifact:
    """Swap every color class for a copy of ``gamma`` glued along ``w``.

    Every class must be a single edge or two disjoint edges, and ``gamma``
    must induce two disjoint edges on ``w``.  A class ``{ab, cd}`` is glued by
    identifying the two edges of ``gamma[w]`` with ``ab`` and ``cd``; a single
    edge ``ab`` is glued along the first edge of ``gamma[w]`` only.  All
    added edges carry the class color and end in an added vertex, so rainbow
    paths between original vertices are unchanged.  Original ids survive.
    """
    w = tuple(w)
    if len(set(w)) != 4 or induced_pattern(gamma, w) != K2_K2:
        raise PreconditionViolation("gamma must induce two disjoint edges on the four glue vertices")
    glue_pairs = [(a, b) for a, b in _edges_pairs(gamma.induced(w))]
    (w1, w2), (w3, w4) = sorted(glue_pairs)
    base = g.graph
    verts = list(base.vertices)
    edges = base.edge_map()
    colors = dict(g.colors)
    nv = base.fresh_vertex()
    ne = base.fresh_edge()
    for c, cls in g.color_classes().items():
        pairs = [base.ends(e) for e in cls]
        if len(pairs) == 1:
            glue = {w1: pairs[0][0], w2: pairs[0][1]}
        elif len(pairs) == 2 and not set(pairs[0]) & set(pairs[1]):
            (a, b), (x, y) = pairs
            glue = {w1: a, w2: b, w3: x, w4: y}
        else:
            raise PreconditionViolation(f"color class {c!r} is neither K2 nor K2+K2")
        ident = dict(glue)
        for v in gamma.vertices:
            if v not in ident:
                ident[v] = nv
                verts.append(nv)
                nv += 1
        for e in gamma.edges:
            a, b = gamma.ends(e)
            if a in glue and b in glue:
                continue
            edges[ne] = (ident[a], ident[b])
            colors[ne] = c
            ne += 1
    out = EdgeColoredGraph(Graph(verts, edges, check=False), colors)
    original = set(base.edges)

    def backward(cert: Certificate) -> Certificate:
        if any(e not in original for e in cert.edges):
            raise CertificateError("certificate uses an edge added by the gadget")
        return cert

    return ReductionArtifact(g, out, lambda c: c, backward,
                             {v: (v if base.has_vertex(v) else None) for v in verts},
                             {e: (e if e in original else None) for e in edges})

