"""Route a :class:`Query` to the solver for its constraint family and kind."""

from __future__ import annotations

from ..graph import CLOSED_TRAIL, CYCLE, PATH, TRAIL, Certificate
from ..instances import TransitionSystem
from ..matching import Matching, find_alternating_cycle
from ..query import (ALTERNATING, CIRCUIT, DIRECTED_PATH, DIRECTED_TRAIL, LOCAL2, PROPERLY_COLORED,
                     RAINBOW, TRANSITIONS, Query)
from ..validate import check_certificate
from .colored import local2_search, pc_search
from .directed import (ALTERNATING_CIRCUIT, ALTERNATING_DIRECTED_PATH, PC_CIRCUIT, PC_DIRECTED_PATH,
                       hard_directed_search, pc_directed_trail)
from .rainbow import rainbow_search
from .search import DEFAULT_BUDGET, backtrack
from .trails import compatible_closed_trail, compatible_trail


def _unsupported(q: Query):
    extra = " with a required element" if q.required is not None else ""
    return ValueError(f"no solver for {q.constraint} {q.kind} queries{extra}")


def _budgeted_path_or_cycle(q: Query, budget: int) -> Certificate | None:
    """Vertex-simple path or cycle by budgeted backtracking (NP-hard combinations)."""
    inst = q.instance
    g = inst.graph
    if q.constraint == TRANSITIONS:
        ok = inst.allows
    else:
        inside = inst.edges

        def ok(v, e, f):
            return (e in inside) != (f in inside)
    steps = lambda v: [(e, g.other(e, v)) for e in g.incident(v)]  # noqa: E731
    if q.kind == PATH:
        hit = backtrack(steps, [q.endpoints[0]], target=q.endpoints[1], compatible=ok, budget=budget)
    else:
        hit = backtrack(steps, g.vertices, target=None, compatible=lambda v, e, f: e != f and ok(v, e, f),
                        budget=budget)
    return None if hit is None else Certificate(q.kind, tuple(hit[0]), tuple(hit[1]), q.constraint)


def _route(q: Query, budget: int) -> Certificate | None:
    kind, con, inst, ends = q.kind, q.constraint, q.instance, q.endpoints
    if q.required is not None:
        if con == TRANSITIONS and kind == TRAIL and not q.required_is_vertex:
            return compatible_trail(inst.graph, inst, *ends, required=q.required)
        if con == PROPERLY_COLORED and kind == TRAIL and not q.required_is_vertex:
            found = compatible_trail(inst.graph, TransitionSystem.from_coloring(inst), *ends,
                                     required=q.required)
            return None if found is None else found.with_kind(TRAIL, PROPERLY_COLORED)
        if con == LOCAL2 and kind == PATH and q.required_is_vertex:
            return local2_search(inst, PATH, ends, via=q.required)
        raise _unsupported(q)
    if con == TRANSITIONS:
        if kind == TRAIL:
            return compatible_trail(inst.graph, inst, *ends)
        if kind == CLOSED_TRAIL:
            return compatible_closed_trail(inst.graph, inst)
        if kind in (PATH, CYCLE):
            return _budgeted_path_or_cycle(q, budget)
    elif con == PROPERLY_COLORED:
        if kind in (PATH, CYCLE, TRAIL, CLOSED_TRAIL):
            return pc_search(inst, kind, ends)
        if kind == DIRECTED_TRAIL:
            return pc_directed_trail(inst, *ends)
        if kind == DIRECTED_PATH:
            return hard_directed_search(inst, PC_DIRECTED_PATH, ends, budget)
        if kind == CIRCUIT:
            return hard_directed_search(inst, PC_CIRCUIT, None, budget)
    elif con == RAINBOW:
        if kind in (PATH, CYCLE):
            return rainbow_search(inst, kind, ends, budget)
    elif con == LOCAL2:
        if kind in (PATH, CYCLE):
            return local2_search(inst, kind, ends)
    elif con == ALTERNATING:
        if kind == CYCLE and isinstance(inst, Matching) and inst.is_perfect:
            return find_alternating_cycle(inst.graph, inst)
        if kind in (PATH, CYCLE) and isinstance(inst, Matching):
            return _budgeted_path_or_cycle(q, budget)
        if kind == CIRCUIT:
            return hard_directed_search(inst, ALTERNATING_CIRCUIT, None, budget)
        if kind == DIRECTED_PATH:
            return hard_directed_search(inst, ALTERNATING_DIRECTED_PATH, ends, budget)
    raise _unsupported(q)


def solve(q: Query, budget: int = DEFAULT_BUDGET) -> Certificate | None:
    """Answer ``q``; every returned certificate is re-checked by the independent validator.

    Raises :class:`PreconditionViolation` outside the exact regime of a
    polynomial route and :class:`BudgetExhausted` when a backtracking search
    runs out of nodes.
    """
    found = _route(q, budget)
    if found is not None:
        check_certificate(q, found)
    return found
