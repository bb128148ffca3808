"""Rainbow paths and cycles, routed by the shape of the color classes.

When every color class is complete multipartite (plus isolated vertices)
the star reduction turns the query into a properly colored one and the
answer is exact.  Otherwise the instance falls into the NP-hard side and a
budgeted backtracking search is used.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..graph import CYCLE, PATH, Certificate
from ..instances import EdgeColoredGraph
from ..multipartite import complete_multipartite_partition, excluded_pattern
from ..query import RAINBOW
from ..reductions.rainbow import rainbow_star_reduction
from .colored import _endpoints, pc_search
from .search import DEFAULT_BUDGET, backtrack


@dataclass(frozen=True)
class ClassVerdict:
    """Either every class is complete multipartite (``partitions``) or one is not (``hard_class``)."""

    tractable: bool
    partitions: dict = field(default_factory=dict)
    hard_class: object = None
    witness: tuple[int, int, int, int] | None = None
    witness_kind: str | None = None


def classify_color_classes(g: EdgeColoredGraph) -> ClassVerdict:
    """Tractable with every class's parts, or Hard with an induced K2+K2, P4 or L4 witness."""
    partitions = {}
    for c in g.palette():
        h = g.class_graph(c)
        parts = complete_multipartite_partition(h)
        if parts is None:
            kind, quad = excluded_pattern(h)
            return ClassVerdict(False, hard_class=c, witness=quad, witness_kind=kind)
        partitions[c] = parts
    return ClassVerdict(True, partitions=partitions)


def rainbow_search(g: EdgeColoredGraph, kind: str, endpoints=None,
                   budget: int = DEFAULT_BUDGET) -> Certificate | None:
    """Rainbow path or cycle; raises :class:`BudgetExhausted` only on the hard side."""
    if kind not in (PATH, CYCLE):
        raise ValueError(f"unsupported kind {kind!r} for rainbow search")
    ends = _endpoints(kind, endpoints, g.graph)
    verdict = classify_color_classes(g)
    if verdict.tractable:
        art = rainbow_star_reduction(g, verdict.partitions)
        found = pc_search(art.target, kind, ends)
        return None if found is None else art.backward(found)
    base = g.graph
    steps = lambda v: [(e, base.other(e, v)) for e in base.incident(v)]  # noqa: E731
    col = g.colors
    if kind == PATH:
        hit = backtrack(steps, [ends[0]], target=ends[1], compatible=lambda v, e, f: True,
                        color=col.__getitem__, budget=budget)
    else:
        hit = backtrack(steps, base.vertices, target=None, compatible=lambda v, e, f: e != f,
                        color=col.__getitem__, budget=budget)
    if hit is None:
        return None
    return Certificate(kind, tuple(hit[0]), tuple(hit[1]), RAINBOW)
