"""Compatible trails in graphs with forbidden transitions.

Open trails: the EC-line graph has chromatic degree at most 2, so it is
viewed as locally 2-colored (at line vertex ``e``, transitions through the
first listed endpoint of ``e`` go red) and two hub vertices ``S`` and ``T``
are hooked onto the edges at ``s`` and at ``tgt``.  Compatible trails become
compatible ``S``-``T`` paths there, hence augmenting paths of the split
image.  Closed trails are alternating cycles of the PM-line graph.
"""

from __future__ import annotations

from ..errors import GraphError, PreconditionViolation
from ..graph import PATH, Certificate, Graph
from ..instances import BLUE, RED, LocallyTwoColoredGraph, TransitionSystem
from ..matching import augmenting_path_through_edge, find_alternating_cycle, find_augmenting_path
from ..query import PROPERLY_COLORED
from ..reductions.linegraphs import ec_line_graph, pm_line_graph
from ..reductions.local2 import terminal_matched_graph


def _side_at(g: Graph, e: int, v: int) -> str:
    return RED if g.ends(e)[0] == v else BLUE


def _hooked_view(g: Graph, t: TransitionSystem, s: int, tgt: int):
    art = ec_line_graph(g, t)
    lg = art.target
    line = lg.graph
    edges = line.edge_map()
    sides = {}
    for f in line.edges:
        a, b = line.ends(f)
        v = lg.colors[f]
        sides[(f, a)] = _side_at(g, a, v)
        sides[(f, b)] = _side_at(g, b, v)
    hub_s = g.fresh_edge()
    hub_t = hub_s + 1
    nxt = line.fresh_edge()
    hooks = set()
    for hub, end in ((hub_s, s), (hub_t, tgt)):
        for e in g.incident(end):
            edges[nxt] = (hub, e)
            sides[(nxt, hub)] = RED
            sides[(nxt, e)] = _side_at(g, e, end)
            hooks.add(nxt)
            nxt += 1
    view = LocallyTwoColoredGraph(Graph(list(line.vertices) + [hub_s, hub_t], edges, multi=True,
                                        check=False), sides, check=False)
    return art, view, hub_s, hub_t, hooks


def _check_endpoints(g: Graph, s: int, tgt: int) -> None:
    if s == tgt:
        raise PreconditionViolation("trail endpoints must be distinct")
    for v in (s, tgt):
        if not g.has_vertex(v):
            raise GraphError(f"unknown vertex {v}")


def compatible_trail(g: Graph, t: TransitionSystem, s: int, tgt: int,
                     required: int | None = None) -> Certificate | None:
    """A compatible ``s``-``tgt`` trail, optionally through the edge ``required``.

    The required-edge variant is exact only when ``g`` has no compatible
    closed trail; that is checked first and violations raise
    :class:`PreconditionViolation`.
    """
    _check_endpoints(g, s, tgt)
    if required is not None:
        if not g.has_edge(required):
            raise GraphError(f"unknown edge {required}")
        if compatible_closed_trail(g, t) is not None:
            raise PreconditionViolation("a compatible closed trail exists; required-edge search is NP-hard here")
    art, view, hub_s, hub_t, hooks = _hooked_view(g, t, s, tgt)
    term = terminal_matched_graph(view, hub_s, hub_t)
    m = term.target
    if required is None:
        found = find_augmenting_path(m.graph, m)
    else:
        found = augmenting_path_through_edge(m.graph, m, term.notes["matching_edge"][required])
    if found is None:
        return None
    hub_path = term.backward(found)
    if hub_path.start != hub_s:
        hub_path = hub_path.reversed()
    # drop the two hook edges and the hubs themselves
    line_path = Certificate(PATH, hub_path.vertices[1:-1], hub_path.edges[1:-1], PROPERLY_COLORED)
    assert hub_path.edges[0] in hooks and hub_path.edges[-1] in hooks
    return art.backward(line_path, start=s)


def compatible_closed_trail(g: Graph, t: TransitionSystem) -> Certificate | None:
    """A compatible closed trail, via an alternating cycle of the PM-line graph."""
    art = pm_line_graph(g, t)
    m = art.target
    cycle = find_alternating_cycle(m.graph, m)
    if cycle is None:
        return None
    return art.backward(cycle)
