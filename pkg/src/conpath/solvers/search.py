"""Budgeted backtracking for the NP-hard query kinds.

Explores partial certificates depth first and counts every extension
against the budget.  Running out raises :class:`BudgetExhausted` rather
than reporting a possibly wrong "not found".
"""

from __future__ import annotations

from collections.abc import Callable

from ..errors import BudgetExhausted

DEFAULT_BUDGET = 10**6


def backtrack(steps: Callable[[int], list[tuple[int, int]]], starts, *, target: int | None,
              compatible: Callable[[int, int, int], bool], color: Callable[[int], object] | None = None,
              budget: int = DEFAULT_BUDGET, min_closed: int = 2):
    """First vertex-simple path to ``target`` (or cycle back to the start when ``target`` is None).

    ``steps(v)`` lists ``(edge, next vertex)`` pairs, ``compatible(v, e, f)``
    says whether ``f`` may follow ``e`` through ``v`` and ``color`` (when
    given) forces all edges to have distinct colors.  Cycles are only
    searched from their smallest vertex.  Returns ``(vertices, edges)``.
    """
    nodes = 0
    closed = target is None
    for s in starts:
        vs = [s]
        es: list[int] = []
        on_path = {s}
        used_colors: set = set()
        # explicit stack of iterators keeps deep searches off the recursion limit
        stack = [iter(steps(s))]
        while stack:
            advanced = False
            v = vs[-1]
            for e, w in stack[-1]:
                nodes += 1
                if nodes > budget:
                    raise BudgetExhausted(budget)
                if es and not compatible(v, es[-1], e):
                    continue
                if color is not None and color(e) in used_colors:
                    continue
                if closed:
                    if w == s:
                        if len(es) + 1 >= min_closed and compatible(s, e, es[0]) and e not in es:
                            return vs + [s], es + [e]
                        continue
                    if w < s:
                        continue
                elif w == target:
                    return vs + [w], es + [e]
                if w in on_path:
                    continue
                vs.append(w)
                es.append(e)
                on_path.add(w)
                if color is not None:
                    used_colors.add(color(e))
                stack.append(iter(steps(w)))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if es:
                    e = es.pop()
                    w = vs.pop()
                    on_path.discard(w)
                    if color is not None:
                        used_colors.discard(color(e))
    return None
