"""Structure guaranteed by acyclicity: bridges, separating vertices and separating classes.

Each extractor verifies the hypothesis that makes the object exist and
raises :class:`PreconditionViolation` naming the failing clause.
"""

from __future__ import annotations

from collections.abc import Iterator

from .errors import PreconditionViolation
from .graph import CLOSED_TRAIL, CYCLE, Graph, bridges, connected_components
from .instances import EdgeColoredGraph, TransitionSystem
from .matching import Matching, is_unique_perfect_matching
from .multipartite import complete_multipartite_partition
from .reductions.linegraphs import ec_line_graph
from .reductions.rainbow import rainbow_star_reduction
from .solvers.colored import pc_search
from .solvers.rainbow import classify_color_classes, rainbow_search
from .solvers.trails import compatible_closed_trail

__all__ = [
    "complete_multipartite_partition", "color_separating_vertices", "ft_bridge", "kotzig_bridge",
    "pc_trail_bridge", "rainbow_separating_class", "yeo_separating_vertex",
]


def kotzig_bridge(g: Graph, m: Matching) -> int:
    """A matching edge that is a bridge; one exists whenever ``m`` is the unique perfect matching."""
    if not is_unique_perfect_matching(g, m):
        raise PreconditionViolation("matching is not the unique perfect matching of the graph")
    return min(e for e in bridges(g) if e in m.edges)


def color_separating_vertices(ecg: EdgeColoredGraph) -> Iterator[tuple[int, dict]]:
    """Every vertex whose edges into each component of its removal share one color.

    Vertices with incident edges come first; isolated ones qualify trivially
    and are listed last.
    """
    g = ecg.graph
    order = sorted(g.vertices, key=lambda v: (g.degree(v) == 0, v))
    for u in order:
        rest = g.without_vertices([u])
        where = {}
        for comp in connected_components(rest):
            for v in comp:
                where[v] = comp
        assignment: dict = {}
        ok = True
        for e in g.incident(u):
            comp = where[g.other(e, u)]
            c = ecg.colors[e]
            if assignment.setdefault(comp, c) != c:
                ok = False
                break
        if ok:
            yield u, assignment


def yeo_separating_vertex(ecg: EdgeColoredGraph) -> tuple[int, dict]:
    """A color-separating vertex with its component-to-color assignment.

    Exists in every graph without a properly colored cycle; found by a
    direct scan.
    """
    if ecg.graph.num_vertices() == 0:
        raise PreconditionViolation("graph has no vertices")
    if pc_search(ecg, CYCLE) is not None:
        raise PreconditionViolation("graph has a properly colored cycle")
    for hit in color_separating_vertices(ecg):
        return hit
    raise AssertionError("no color-separating vertex in a graph without properly colored cycles")


def ft_bridge(g: Graph, t: TransitionSystem) -> int:
    """A bridge of ``g`` when all transition graphs are connected and no compatible closed trail exists.

    A color-separating vertex of the EC-line graph is an edge of ``g``; the
    first such edge that is a bridge is returned.
    """
    if g.num_edges() == 0:
        raise PreconditionViolation("graph has no edges")
    for v in g.vertices:
        if not t.is_connected_at(v):
            raise PreconditionViolation(f"transition graph at vertex {v} is disconnected")
    if compatible_closed_trail(g, t) is not None:
        raise PreconditionViolation("graph has a compatible closed trail")
    line = ec_line_graph(g, t).target
    found = bridges(g)
    for e, _assignment in color_separating_vertices(line):
        if e in found:
            return e
    raise AssertionError("no separating line vertex is a bridge despite the hypotheses")


def pc_trail_bridge(ecg: EdgeColoredGraph) -> int:
    """A bridge when every vertex sees two colors and no properly colored closed trail exists."""
    g = ecg.graph
    for v in g.vertices:
        if ecg.chromatic_degree(v) < 2:
            raise PreconditionViolation(f"vertex {v} has chromatic degree below 2")
    if pc_search(ecg, CLOSED_TRAIL) is not None:
        raise PreconditionViolation("graph has a properly colored closed trail")
    return ft_bridge(g, TransitionSystem.from_coloring(ecg))


def _separates(ecg: EdgeColoredGraph, color, parts) -> bool:
    g = ecg.graph
    rest = g.without_edges(e for e in g.edges if ecg.colors[e] == color)
    where = {v: i for i, part in enumerate(parts) for v in part}
    for comp in connected_components(rest):
        if len({where[v] for v in comp if v in where}) > 1:
            return False
    return True


def rainbow_separating_class(ecg: EdgeColoredGraph) -> tuple[object, list[frozenset[int]]]:
    """A color class whose removal leaves no two of its parts connected.

    Exists when every class is complete multipartite and there is no
    rainbow cycle.  A color-separating vertex of the star graph that is a
    class center gives the class directly; otherwise the classes are
    scanned.  Classes with a single part separate nothing and are skipped.
    """
    if ecg.graph.num_edges() == 0:
        raise PreconditionViolation("graph has no edges")
    verdict = classify_color_classes(ecg)
    if not verdict.tractable:
        raise PreconditionViolation(f"color class {verdict.hard_class!r} is not complete multipartite")
    if rainbow_search(ecg, CYCLE) is not None:
        raise PreconditionViolation("graph has a rainbow cycle")
    star = rainbow_star_reduction(ecg, verdict.partitions)
    owner = {w: c for c, w in star.notes["center"].items()}
    for u, _assignment in color_separating_vertices(star.target):
        c = owner.get(u)
        if c is not None and len(verdict.partitions[c]) >= 2:
            return c, verdict.partitions[c]
    for c in ecg.palette():
        parts = verdict.partitions[c]
        if len(parts) >= 2 and _separates(ecg, c, parts):
            return c, parts
    raise AssertionError("no separating class despite the hypotheses")
