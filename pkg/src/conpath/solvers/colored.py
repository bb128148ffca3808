"""Properly colored and locally 2-colored searches."""

from __future__ import annotations

from ..errors import GraphError, PreconditionViolation
from ..graph import CLOSED_TRAIL, CYCLE, PATH, TRAIL, Certificate
from ..instances import EdgeColoredGraph, LocallyTwoColoredGraph, TransitionSystem
from ..matching import augmenting_path_through_edge, find_alternating_cycle, find_augmenting_path
from ..query import PROPERLY_COLORED
from ..reductions.gadgets import pc_gadget_graph, pc_path_gadget_graph
from ..reductions.local2 import terminal_matched_graph, to_matched_graph
from .trails import compatible_closed_trail, compatible_trail


def _endpoints(kind: str, endpoints, graph) -> tuple[int, int] | None:
    if kind in (PATH, TRAIL):
        if endpoints is None:
            raise PreconditionViolation(f"{kind} queries need endpoints")
        s, t = endpoints
        if s == t:
            raise PreconditionViolation("endpoints must be distinct")
        for v in (s, t):
            if not graph.has_vertex(v):
                raise GraphError(f"unknown vertex {v}")
        return s, t
    if endpoints is not None:
        raise PreconditionViolation(f"{kind} queries take no endpoints")
    return None


def _oriented(cert: Certificate, s: int) -> Certificate:
    return cert if cert.start == s else cert.reversed()


def pc_search(g: EdgeColoredGraph, kind: str, endpoints=None) -> Certificate | None:
    """Properly colored path, cycle, trail or closed trail.

    Paths go through the per-vertex P-gadget graph with ``s`` and ``t`` left
    exposed, cycles through the alternating cycles of the all-gadget graph.
    Trails use the transition system induced by the coloring.
    """
    ends = _endpoints(kind, endpoints, g.graph)
    if kind == PATH:
        s, t = ends
        art = pc_path_gadget_graph(g, s, t)
        m = art.target
        found = find_augmenting_path(m.graph, m)
        return None if found is None else _oriented(art.backward(found), s)
    if kind == CYCLE:
        art = pc_gadget_graph(g)
        m = art.target
        found = find_alternating_cycle(m.graph, m)
        return None if found is None else art.backward(found)
    if kind in (TRAIL, CLOSED_TRAIL):
        t = TransitionSystem.from_coloring(g)
        found = compatible_trail(g.graph, t, *ends) if kind == TRAIL else compatible_closed_trail(g.graph, t)
        return None if found is None else found.with_kind(found.kind, PROPERLY_COLORED)
    raise ValueError(f"unsupported kind {kind!r} for properly colored search")


def local2_search(l: LocallyTwoColoredGraph, kind: str, endpoints=None,
                  via: int | None = None) -> Certificate | None:
    """Compatible path or cycle of a locally 2-colored graph.

    ``via`` asks for a path through that vertex; this is exact only when
    ``l`` has no compatible cycle, which is checked.
    """
    if kind not in (PATH, CYCLE):
        raise ValueError(f"unsupported kind {kind!r} for locally 2-colored search")
    ends = _endpoints(kind, endpoints, l.graph)
    if kind == CYCLE:
        if via is not None:
            raise PreconditionViolation("via is only supported for path queries")
        art = to_matched_graph(l)
        m = art.target
        found = find_alternating_cycle(m.graph, m)
        return None if found is None else art.backward(found)
    s, t = ends
    term = terminal_matched_graph(l, s, t)
    m = term.target
    if via is None or via in ends:
        found = find_augmenting_path(m.graph, m)
    else:
        if not l.graph.has_vertex(via):
            raise GraphError(f"unknown vertex {via}")
        if local2_search(l, CYCLE) is not None:
            raise PreconditionViolation("a compatible cycle exists; paths through a third vertex are NP-hard here")
        found = augmenting_path_through_edge(m.graph, m, term.notes["matching_edge"][via])
    return None if found is None else _oriented(term.backward(found), s)
