"""Independent certificate and structure validators.

Nothing here calls into the solvers, reductions or matching engine: each
check is a direct reading of the definition, so a solver bug cannot hide
behind a validator that shares its logic.
"""

from __future__ import annotations

from .errors import CertificateError
from .graph import CLOSED_TRAIL, CYCLE, PATH, TRAIL, Certificate, Graph, connected_components
from .instances import (ArcColoredDigraph, EdgeColoredGraph, LocallyTwoColoredGraph,
                        MatchedDigraph, TransitionSystem)
from .query import (ALTERNATING, LOCAL2, PROPERLY_COLORED, RAINBOW, TRANSITIONS, Query)


def _fail(msg: str):
    raise CertificateError(msg)


def _underlying(instance):
    """(graph-or-digraph, directed?) of a decorated instance."""
    if isinstance(instance, (ArcColoredDigraph, MatchedDigraph)):
        return instance.digraph, True
    if isinstance(instance, (TransitionSystem, EdgeColoredGraph, LocallyTwoColoredGraph)):
        return instance.graph, False
    graph = getattr(instance, "graph", None)
    if isinstance(graph, Graph):
        return graph, False
    _fail(f"unsupported instance type {type(instance).__name__}")


def check_shape(structure, cert: Certificate, directed: bool) -> None:
    """Incidence along the sequence plus the non-repetition rule of its kind."""
    vs, es = cert.vertices, cert.edges
    for i, e in enumerate(es):
        if directed:
            if not structure.has_arc(e):
                _fail(f"arc {e} does not exist")
            if structure.ends(e) != (vs[i], vs[i + 1]):
                _fail(f"arc {e} does not lead from {vs[i]} to {vs[i + 1]}")
        else:
            if not structure.has_edge(e):
                _fail(f"edge {e} does not exist")
            a, b = structure.ends(e)
            if {a, b} != {vs[i], vs[i + 1]}:
                _fail(f"edge {e} does not join {vs[i]} and {vs[i + 1]}")
    for v in vs:
        if not structure.has_vertex(v):
            _fail(f"vertex {v} does not exist")
    if cert.kind in (TRAIL, CLOSED_TRAIL, PATH, CYCLE) and len(set(es)) != len(es):
        _fail("an edge is repeated")
    if cert.kind == PATH and len(set(vs)) != len(vs):
        _fail("a vertex is repeated on a path")
    if cert.kind == CYCLE and len(set(vs[:-1])) != len(vs) - 1:
        _fail("a vertex is repeated on a cycle")
    if cert.closed and len(es) < 2:
        _fail("a closed certificate needs at least two edges")


def _turns(cert: Certificate):
    """(vertex, incoming edge, outgoing edge) at every turning point, wrapping for closed kinds."""
    vs, es = cert.vertices, cert.edges
    for i in range(1, len(es)):
        yield vs[i], es[i - 1], es[i]
    if cert.closed:
        yield vs[0], es[-1], es[0]


def check_constraint(instance, cert: Certificate, constraint: str) -> None:
    es = cert.edges
    if constraint == TRANSITIONS:
        for v, e, f in _turns(cert):
            if not instance.allows(v, e, f):
                _fail(f"transition {e}->{f} at vertex {v} is forbidden")
    elif constraint == PROPERLY_COLORED:
        col = instance.colors
        for v, e, f in _turns(cert):
            if col[e] == col[f]:
                _fail(f"consecutive edges {e} and {f} at {v} share color {col[e]!r}")
    elif constraint == RAINBOW:
        col = instance.colors
        if len({col[e] for e in es}) != len(es):
            _fail("a color repeats on a rainbow certificate")
    elif constraint == LOCAL2:
        for v, e, f in _turns(cert):
            if instance.side(e, v) == instance.side(f, v):
                _fail(f"edges {e} and {f} leave {v} on the same side")
    elif constraint == ALTERNATING:
        inside = instance.matching if isinstance(instance, MatchedDigraph) else instance.edges
        for _v, e, f in _turns(cert):
            if (e in inside) == (f in inside):
                _fail(f"edges {e} and {f} do not alternate")
    else:
        _fail(f"unknown constraint {constraint!r}")


def check_certificate(q: Query, cert: Certificate) -> None:
    """Raise :class:`CertificateError` unless ``cert`` answers ``q``."""
    structure, directed = _underlying(q.instance)
    if directed != q.directed:
        _fail("query direction does not match the instance")
    if cert.kind != q.certificate_kind:
        _fail(f"expected a {q.certificate_kind}, got a {cert.kind}")
    check_shape(structure, cert, directed)
    if q.endpoints is not None and (cert.start, cert.end) != tuple(q.endpoints):
        _fail(f"certificate runs {cert.start}->{cert.end}, expected {q.endpoints[0]}->{q.endpoints[1]}")
    if q.required is not None:
        pool = cert.vertices if q.required_is_vertex else cert.edges
        if q.required not in pool:
            _fail(f"required element {q.required} is missing")
    check_constraint(q.instance, cert, q.constraint)


def is_valid(q: Query, cert: Certificate) -> bool:
    try:
        check_certificate(q, cert)
    except CertificateError:
        return False
    return True


# ---------------------------------------------------------------------------
# structure witnesses


def _count_components(vertices, edges: dict[int, tuple[int, int]]) -> int:
    return len(connected_components(Graph(vertices, edges, multi=True, check=False)))


def check_bridge(g: Graph, e: int) -> None:
    """``e`` is a bridge: deleting it increases the component count."""
    if not g.has_edge(e):
        _fail(f"edge {e} does not exist")
    full = g.edge_map()
    before = _count_components(g.vertices, full)
    del full[e]
    if _count_components(g.vertices, full) <= before:
        _fail(f"edge {e} is not a bridge")


def check_matching_bridge(g: Graph, matching_edges, e: int) -> None:
    if e not in matching_edges:
        _fail(f"edge {e} is not a matching edge")
    check_bridge(g, e)


def check_color_separating_vertex(ecg: EdgeColoredGraph, u: int, assignment: dict) -> None:
    """All edges from ``u`` into one component of ``g - u`` share the assigned color.

    ``assignment`` maps each component (a frozenset) adjacent to ``u`` to its color.
    """
    g = ecg.graph
    if not g.has_vertex(u):
        _fail(f"vertex {u} does not exist")
    rest = g.induced(v for v in g.vertices if v != u)
    where = {}
    for comp in connected_components(rest):
        for v in comp:
            where[v] = comp
    seen = {}
    for e in g.incident(u):
        comp = where[g.other(e, u)]
        seen.setdefault(comp, set()).add(ecg.colors[e])
    for comp, cols in seen.items():
        if len(cols) != 1:
            _fail(f"component {sorted(comp)} sees {len(cols)} colors from {u}")
        if assignment.get(comp) != next(iter(cols)):
            _fail(f"component {sorted(comp)} is assigned the wrong color")
    if set(assignment) != set(seen):
        _fail("assignment does not list exactly the components adjacent to the vertex")


def check_multipartite_partition(g: Graph, parts) -> None:
    """``parts`` partitions the vertices and ``g`` has exactly the edges between different parts."""
    where = {}
    for i, part in enumerate(parts):
        if not part:
            _fail("empty part")
        for v in part:
            if v in where:
                _fail(f"vertex {v} lies in two parts")
            where[v] = i
    if set(where) != set(g.vertices):
        _fail("parts do not cover the vertex set")
    pairs = set()
    for e in g.edges:
        a, b = g.ends(e)
        if where[a] == where[b]:
            _fail(f"edge {e} lies inside a part")
        pairs.add(frozenset((a, b)))
    vs = g.vertices
    for i, a in enumerate(vs):
        for b in vs[i + 1:]:
            if where[a] != where[b] and frozenset((a, b)) not in pairs:
                _fail(f"missing edge between parts at {a} and {b}")


def check_separating_class(ecg: EdgeColoredGraph, color, parts) -> None:
    """The class ``color`` is complete multipartite on ``parts`` and removing it separates them."""
    if len(parts) < 2:
        _fail("a separating class needs at least two parts")
    cls = ecg.graph.edge_subgraph(e for e in ecg.graph.edges if ecg.colors[e] == color)
    if cls.num_edges() == 0:
        _fail(f"no edge has color {color!r}")
    check_multipartite_partition(cls, parts)
    rest = ecg.graph.without_edges(cls.edges)
    where = {v: i for i, part in enumerate(parts) for v in part}
    for comp in connected_components(rest):
        hit = {where[v] for v in comp if v in where}
        if len(hit) > 1:
            _fail(f"vertices of different parts stay connected without color {color!r}")
