"""Directed searches: linear-time properly colored trails and budgeted hard kinds."""

from __future__ import annotations

from collections import deque

from ..errors import CertificateError, GraphError, PreconditionViolation
from ..graph import CYCLE, PATH, TRAIL, WALK, Certificate
from ..instances import ArcColoredDigraph, MatchedDigraph
from ..query import ALTERNATING, PROPERLY_COLORED
from .search import DEFAULT_BUDGET, backtrack

PC_DIRECTED_PATH = "pc-directed-path"
PC_CIRCUIT = "pc-circuit"
ALTERNATING_CIRCUIT = "alternating-circuit"
ALTERNATING_DIRECTED_PATH = "alternating-directed-path"
HARD_KINDS = (PC_DIRECTED_PATH, PC_CIRCUIT, ALTERNATING_CIRCUIT, ALTERNATING_DIRECTED_PATH)


def pc_walk_to_trail(d: ArcColoredDigraph, w: Certificate) -> Certificate:
    """Cut out the stretch between repeated occurrences of an arc until none repeats.

    Both occurrences of an arc have the same color, so the arc that followed
    the second occurrence may follow the first one.
    """
    col = d.colors
    es = w.edges
    for i in range(1, len(es)):
        if col[es[i - 1]] == col[es[i]]:
            raise CertificateError(f"arcs {es[i - 1]} and {es[i]} share a color")
    out: list[int] = []
    pos: dict[int, int] = {}
    for a in es:
        j = pos.get(a)
        if j is not None:
            for b in out[j + 1:]:
                del pos[b]
            del out[j + 1:]
            continue
        pos[a] = len(out)
        out.append(a)
    g = d.digraph
    vs = [w.vertices[0]] + [g.head(a) for a in out]
    return Certificate(TRAIL, tuple(vs), tuple(out), PROPERLY_COLORED)


def pc_directed_trail(d: ArcColoredDigraph, s: int, t: int) -> Certificate | None:
    """Shortest properly colored ``s -> t`` walk, which is already a trail.

    Breadth-first search over (vertex, color of the last arc) states.  The
    out-arcs of every vertex are bucketed by color and a bucket is dropped
    once relaxed: after the first visit of ``v`` at most one bucket is left,
    so the total work is linear in the number of arcs.
    """
    g = d.digraph
    if s == t:
        raise PreconditionViolation("trail endpoints must be distinct")
    for v in (s, t):
        if not g.has_vertex(v):
            raise GraphError(f"unknown vertex {v}")
    col = d.colors
    palette = {c: i for i, c in enumerate(d.palette())}
    width = len(palette) + 1
    # state v * width + i: at v having arrived by color i (i = width - 1 at the start)
    parent_arc = [-1] * (width * (max(g.vertices, default=0) + 1))
    parent_state = parent_arc[:]
    buckets: dict[int, dict[int, list[int]]] = {}
    start = s * width + width - 1
    parent_arc[start] = -2
    queue = deque([start])
    goal = -1
    while queue:
        state = queue.popleft()
        v, last = divmod(state, width)
        left = buckets.get(v)
        if left is None:
            left = {}
            for a in g.out_arcs(v):
                left.setdefault(palette[col[a]], []).append(a)
            buckets[v] = left
        for c in [c for c in left if c != last]:
            for a in left.pop(c):
                nxt = g.head(a) * width + c
                if parent_arc[nxt] != -1:
                    continue
                parent_arc[nxt], parent_state[nxt] = a, state
                if nxt // width == t:
                    goal = nxt
                    break
                queue.append(nxt)
            if goal >= 0:
                break
        if goal >= 0:
            break
    if goal < 0:
        return None
    arcs = []
    state = goal
    while state != start:
        arcs.append(parent_arc[state])
        state = parent_state[state]
    arcs.reverse()
    vs = [s] + [g.head(a) for a in arcs]
    return pc_walk_to_trail(d, Certificate(WALK, tuple(vs), tuple(arcs), PROPERLY_COLORED))


def hard_directed_search(inst, kind: str, endpoints=None,
                         budget: int = DEFAULT_BUDGET) -> Certificate | None:
    """Budgeted backtracking for the NP-hard directed kinds.

    ``pc-directed-path`` and ``pc-circuit`` take an :class:`ArcColoredDigraph`,
    ``alternating-circuit`` and ``alternating-directed-path`` a
    :class:`MatchedDigraph`.  Exact whenever the search finishes; raises
    :class:`BudgetExhausted` otherwise.
    """
    if kind not in HARD_KINDS:
        raise ValueError(f"unknown directed kind {kind!r}")
    colored = kind in (PC_DIRECTED_PATH, PC_CIRCUIT)
    want = ArcColoredDigraph if colored else MatchedDigraph
    if not isinstance(inst, want):
        raise PreconditionViolation(f"{kind} needs a {want.__name__}")
    g = inst.digraph
    if colored:
        col = inst.colors
        compatible = lambda v, a, b: col[a] != col[b]  # noqa: E731
        constraint = PROPERLY_COLORED
    else:
        inside = inst.matching
        compatible = lambda v, a, b: (a in inside) != (b in inside)  # noqa: E731
        constraint = ALTERNATING
    steps = lambda v: [(a, g.head(a)) for a in g.out_arcs(v)]  # noqa: E731
    closed = kind in (PC_CIRCUIT, ALTERNATING_CIRCUIT)
    if closed:
        if endpoints is not None:
            raise PreconditionViolation(f"{kind} takes no endpoints")
        hit = backtrack(steps, g.vertices, target=None, compatible=compatible, budget=budget)
    else:
        if endpoints is None:
            raise PreconditionViolation(f"{kind} needs endpoints")
        s, t = endpoints
        if s == t:
            raise PreconditionViolation("endpoints must be distinct")
        hit = backtrack(steps, [s], target=t, compatible=compatible, budget=budget)
    if hit is None:
        return None
    return Certificate(CYCLE if closed else PATH, tuple(hit[0]), tuple(hit[1]), constraint)
