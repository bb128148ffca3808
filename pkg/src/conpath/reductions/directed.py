"""Reductions on arc-colored digraphs."""

from __future__ import annotations

from ..errors import CertificateError, PreconditionViolation
from ..graph import CYCLE, PATH, Certificate, Digraph
from ..instances import ArcColoredDigraph, MatchedDigraph
from ..query import ALTERNATING, PROPERLY_COLORED
from .artifact import ReductionArtifact, project


def padded_palette(d: ArcColoredDigraph, size: int = 2) -> list:
    """Palette of ``d`` extended with the smallest unused integers up to ``size`` colors."""
    pal = d.palette()
    k = 0
    while len(pal) < size:
        if k not in pal:
            pal.append(k)
        k += 1
    return pal


def arc_colored_to_matched_digraph(d: ArcColoredDigraph) -> ReductionArtifact:
    """Split every vertex into a pair joined by matching arcs in both directions.

    With palette ``(c0, c1)``, vertex ``u`` becomes ``2u`` (color ``c0``) and
    ``2u + 1`` (color ``c1``); an arc ``u -> v`` of color ``c`` becomes
    ``u_c -> v_c`` with the same id.  Properly colored circuits correspond to
    alternating circuits.
    """
    pal = padded_palette(d)
    if len(pal) > 2:
        raise PreconditionViolation(f"expected at most 2 arc colors, found {len(pal)}")
    idx = {c: i for i, c in enumerate(pal)}
    g = d.digraph
    arcs: dict[int, tuple[int, int]] = {}
    verts = []
    matching = []
    nxt = g.fresh_arc()
    for u in g.vertices:
        a, b = 2 * u, 2 * u + 1
        verts += [a, b]
        arcs[nxt], arcs[nxt + 1] = (a, b), (b, a)
        matching += [nxt, nxt + 1]
        nxt += 2
    for x in g.arcs:
        u, v = g.ends(x)
        i = idx[d.colors[x]]
        arcs[x] = (2 * u + i, 2 * v + i)
    md = MatchedDigraph(Digraph(verts, arcs, check=False), matching)
    pair_arc = {(arcs[e][0], arcs[e][1]): e for e in matching}
    vertex_origin = {v: v // 2 for v in verts}
    edge_origin = {x: (None if x in md.matching else x) for x in arcs}

    def forward(cert: Certificate) -> Certificate:
        vs, es = cert.vertices, cert.edges
        out_vs = [2 * vs[0] + idx[d.colors[es[0]]]]
        out_es = []
        n = len(es)
        for i, x in enumerate(es):
            v = vs[i + 1]
            here = 2 * v + idx[d.colors[x]]
            out_es.append(x)
            out_vs.append(here)
            if i + 1 < n or cert.closed:
                there = 2 * v + idx[d.colors[es[(i + 1) % n]]]
                out_es.append(pair_arc[(here, there)])
                out_vs.append(there)
        return Certificate(cert.kind, tuple(out_vs), tuple(out_es), ALTERNATING)

    def backward(cert: Certificate) -> Certificate:
        return project(cert, edge_origin.get, vertex_origin.__getitem__, cert.kind, PROPERLY_COLORED)

    return ReductionArtifact(d, md, forward, backward, vertex_origin, edge_origin,
                             {"palette": pal})


def _has_pc_circuit(d: ArcColoredDigraph, budget: int) -> bool:
    from ..solvers.directed import hard_directed_search
    return hard_directed_search(d, "pc-circuit", budget=budget) is not None


def pc_path_to_pc_circuit(d: ArcColoredDigraph, s: int, t: int, *, trusted: bool = False,
                          budget: int = 10**6) -> ReductionArtifact:
    """Glue an acyclic return gadget from ``t`` to ``s``.

    For every pair ``(a, b)`` of colors there is a fresh properly colored
    ``t -> s`` path starting with color ``a`` and ending with color ``b``:
    two arcs when ``a != b``, three arcs ``a, a', a`` when ``a == b`` (two
    arcs of one color in a row would not be properly colored).  If ``d`` has
    no properly colored circuit, the result has one exactly when ``d`` has a
    properly colored ``s -> t`` path.  Without ``trusted`` the circuit-free
    precondition is checked by budgeted search.
    """
    if s == t:
        raise PreconditionViolation("path endpoints must be distinct")
    if not trusted and _has_pc_circuit(d, budget):
        raise PreconditionViolation("input digraph already has a properly colored circuit")
    g = d.digraph
    pal = padded_palette(d)
    verts = list(g.vertices)
    arcs = g.arc_map()
    colors = dict(d.colors)
    nv, ne = g.fresh_vertex(), g.fresh_arc()
    route: dict[tuple, tuple[tuple[int, ...], tuple[int, ...]]] = {}
    for a in pal:
        for b in pal:
            if a != b:
                hops = [a, b]
            else:
                hops = [a, next(c for c in pal if c != a), a]
            path_vs = [t] + list(range(nv, nv + len(hops) - 1)) + [s]
            verts += path_vs[1:-1]
            nv += len(hops) - 1
            path_es = []
            for i, c in enumerate(hops):
                arcs[ne] = (path_vs[i], path_vs[i + 1])
                colors[ne] = c
                path_es.append(ne)
                ne += 1
            route[(a, b)] = (tuple(path_vs), tuple(path_es))
    out = ArcColoredDigraph(Digraph(verts, arcs, check=False), colors)
    original = set(g.arcs)

    def forward(cert: Certificate) -> Certificate:
        first, last = d.colors[cert.edges[0]], d.colors[cert.edges[-1]]
        a = next(c for c in pal if c != last)
        b = next(c for c in pal if c != first)
        rvs, res = route[(a, b)]
        return Certificate(CYCLE, cert.vertices + rvs[1:], cert.edges + res, PROPERLY_COLORED)

    def backward(cert: Certificate) -> Certificate:
        vs, es = cert.vertices[:-1], cert.edges
        if s not in vs:
            raise CertificateError("circuit does not pass through the source")
        i = vs.index(s)
        vs, es = vs[i:] + vs[:i], es[i:] + es[:i]
        if t not in vs:
            raise CertificateError("circuit does not pass through the target")
        j = vs.index(t)
        if any(x not in original for x in es[:j]):
            raise CertificateError("circuit leaves the original digraph before reaching the target")
        return Certificate(PATH, vs[:j + 1], es[:j], PROPERLY_COLORED)

    return ReductionArtifact(d, out, forward, backward,
                             {v: (v if g.has_vertex(v) else None) for v in verts},
                             {x: (x if x in original else None) for x in arcs},
                             {"routes": route})
