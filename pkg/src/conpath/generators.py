"""Seeded random instance generators, one per instance family.

Every generator takes a :class:`random.Random` so batches are reproducible.
The ``*_satisfying`` generators produce instances meeting the hypotheses of
the structure extractors, either by construction or by rejection.
"""

from __future__ import annotations

import random
from itertools import combinations

from .graph import CLOSED_TRAIL, CYCLE, Digraph, Graph, connected_components
from .instances import (BLUE, RED, ArcColoredDigraph, EdgeColoredGraph, LocallyTwoColoredGraph,
                        MatchedDigraph, TransitionSystem)
from .matching import Matching

MAX_TRIES = 10_000


def random_graph(rng: random.Random, n: int, m: int | None = None, p: float = 0.4) -> Graph:
    """Simple graph on ``0..n-1`` with ``m`` random edges (or each pair with probability ``p``)."""
    pairs = list(combinations(range(n), 2))
    if m is None:
        chosen = [e for e in pairs if rng.random() < p]
    else:
        chosen = rng.sample(pairs, min(m, len(pairs)))
        chosen.sort()
    return Graph(range(n), dict(enumerate(chosen)), check=False)


def random_edge_colored(rng: random.Random, n: int, m: int | None = None, colors: int = 3,
                        p: float = 0.4) -> EdgeColoredGraph:
    g = random_graph(rng, n, m, p)
    return EdgeColoredGraph(g, {e: rng.randrange(colors) for e in g.edges})


def random_transitions(rng: random.Random, g: Graph, p: float = 0.5, connected: bool = False) -> TransitionSystem:
    """Each pair of incident edges allowed with probability ``p``.

    With ``connected`` every transition graph first gets a random spanning tree.
    """
    allowed = {}
    for v in g.vertices:
        inc = g.incident(v)
        chosen = set()
        if connected and len(inc) > 1:
            order = inc[:]
            rng.shuffle(order)
            for i in range(1, len(order)):
                a, b = order[i], order[rng.randrange(i)]
                chosen.add((min(a, b), max(a, b)))
        for pair in combinations(inc, 2):
            if rng.random() < p:
                chosen.add(pair)
        allowed[v] = sorted(chosen)
    return TransitionSystem(g, allowed, check=False)


def random_local2(rng: random.Random, n: int, m: int) -> LocallyTwoColoredGraph:
    """Locally 2-colored multigraph; duplicate signatures are resampled."""
    edges: dict[int, tuple[int, int]] = {}
    sides: dict[tuple[int, int], str] = {}
    used = set()
    for _ in range(m * 4):
        if len(edges) == m or n < 2:
            break
        a, b = sorted(rng.sample(range(n), 2))
        sa, sb = rng.choice((RED, BLUE)), rng.choice((RED, BLUE))
        if (a, b, sa, sb) in used:
            continue
        used.add((a, b, sa, sb))
        e = len(edges)
        edges[e] = (a, b)
        sides[(e, a)], sides[(e, b)] = sa, sb
    return LocallyTwoColoredGraph(Graph(range(n), edges, multi=True, check=False), sides, check=False)


def random_matched_graph(rng: random.Random, pairs: int, extra: int) -> Matching:
    """A planted perfect matching ``(2i, 2i+1)`` plus ``extra`` random non-matching edges."""
    n = 2 * pairs
    edges = {i: (2 * i, 2 * i + 1) for i in range(pairs)}
    others = [e for e in combinations(range(n), 2) if e[1] != e[0] + 1 or e[0] % 2]
    for e in rng.sample(others, min(extra, len(others))):
        edges[len(edges)] = e
    g = Graph(range(n), edges, check=False)
    return Matching(g, range(pairs))


def unique_pm_graph(rng: random.Random, pairs: int, density: float = 0.5) -> Matching:
    """Graph with a unique perfect matching, built by reversing a bridge peeling.

    Each new matched pair ``(a, b)`` attaches every existing component to
    ``a``, to ``b`` or to neither, so ``ab`` is a bridge with two odd sides
    of the grown graph.  Every unique-perfect-matching graph arises this way.
    """
    verts: list[int] = []
    edges: dict[int, tuple[int, int]] = {}
    matching = []
    for i in range(pairs):
        a, b = 2 * i, 2 * i + 1
        current = Graph(verts, edges, check=False)
        comps = connected_components(current)
        new_edges = [(a, b)]
        for comp in comps:
            side = rng.choice((a, b, None))
            if side is None:
                continue
            members = sorted(comp)
            picked = [v for v in members if rng.random() < density] or [rng.choice(members)]
            new_edges += [(v, side) for v in picked]
        verts += [a, b]
        for j, e in enumerate(new_edges):
            if j == 0:
                matching.append(len(edges))
            edges[len(edges)] = e
    g = Graph(verts, edges, check=False)
    perm = list(range(len(verts)))
    rng.shuffle(perm)
    relabeled = Graph(range(len(verts)), {e: (perm[u], perm[v]) for e, (u, v) in edges.items()}, check=False)
    del g
    return Matching(relabeled, matching)


def random_digraph(rng: random.Random, n: int, m: int) -> Digraph:
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    chosen = sorted(rng.sample(pairs, min(m, len(pairs))))
    return Digraph(range(n), dict(enumerate(chosen)), check=False)


def random_arc_colored(rng: random.Random, n: int, m: int, colors: int = 2) -> ArcColoredDigraph:
    d = random_digraph(rng, n, m)
    return ArcColoredDigraph(d, {a: rng.randrange(colors) for a in d.arcs})


def random_matched_digraph(rng: random.Random, pairs: int, extra: int) -> MatchedDigraph:
    """Matching arcs ``2i <-> 2i+1`` in both directions plus ``extra`` random arcs."""
    n = 2 * pairs
    arcs: dict[int, tuple[int, int]] = {}
    for i in range(pairs):
        arcs[len(arcs)] = (2 * i, 2 * i + 1)
        arcs[len(arcs)] = (2 * i + 1, 2 * i)
    matching = list(arcs)
    others = [(a, b) for a in range(n) for b in range(n) if a != b and a // 2 != b // 2]
    for pair in rng.sample(others, min(extra, len(others))):
        arcs[len(arcs)] = pair
    return MatchedDigraph(Digraph(range(n), arcs, check=False), matching)


# ---------------------------------------------------------------------------
# hypothesis-filtered generators for the structure extractors


def _reject(rng: random.Random, make, keep):
    for _ in range(MAX_TRIES):
        x = make()
        if keep(x):
            return x
    raise RuntimeError("rejection sampling gave up")


def pc_acyclic_graph(rng: random.Random, n: int, colors: int = 2) -> EdgeColoredGraph:
    """Edge-colored graph without properly colored cycles, by rejection."""
    from .solvers.colored import pc_search

    def make():
        return random_edge_colored(rng, n, rng.randint(1, 2 * n), colors)
    return _reject(rng, make, lambda g: pc_search(g, CYCLE) is None)


def ft_instance(rng: random.Random, n: int) -> tuple[Graph, TransitionSystem]:
    """Connected transition graphs and no compatible closed trail, by rejection."""
    from .solvers.trails import compatible_closed_trail

    def make():
        g = random_graph(rng, n, rng.randint(1, n + 2))
        if g.num_edges() == 0:
            return None
        return g, random_transitions(rng, g, rng.uniform(0, 0.6), connected=True)
    return _reject(rng, make, lambda x: x is not None and compatible_closed_trail(*x) is None)


def pc_trail_bridge_instance(rng: random.Random, blobs: int) -> EdgeColoredGraph:
    """Chromatic degree at least 2 everywhere and no properly colored closed trail.

    Odd cycles colored ``d, d, d', d, d', ...`` have one corner seeing only
    ``d``; a tree of bridges colored ``d'`` at those corners strings the
    cycles together.  The result is kept once both conditions hold.
    """
    from .solvers.colored import pc_search

    def make():
        edges: list[tuple[int, int]] = []
        colors: list[int] = []
        corner: list[tuple[int, int]] = []
        members: list[list[int]] = []
        nv = 0
        for _ in range(blobs):
            size = rng.choice((3, 3, 5))
            d = rng.randrange(2)
            vs = list(range(nv, nv + size))
            nv += size
            for i in range(size):
                edges.append((vs[i], vs[(i + 1) % size]))
                colors.append(d if i < 2 else (1 - d if i % 2 == 0 else d))
            corner.append((vs[1], 1 - d))
            members.append(vs)
        for i in range(1, blobs):
            x, need = corner[i]
            if i == 1:
                y = corner[0][0]
                if corner[0][1] != need:
                    return None
            else:
                y = rng.choice(members[rng.randrange(i)])
            edges.append((x, y))
            colors.append(need)
        g = Graph(range(nv), dict(enumerate(edges)), check=False)
        return EdgeColoredGraph(g, dict(enumerate(colors)))

    def keep(g):
        return (g is not None and all(g.chromatic_degree(v) >= 2 for v in g.graph.vertices)
                and pc_search(g, CLOSED_TRAIL) is None)
    return _reject(rng, make, keep)


def rainbow_acyclic_decomposition(rng: random.Random, classes: int) -> EdgeColoredGraph:
    """Complete multipartite color classes without a rainbow cycle.

    Classes are glued one at a time; usually a new class meets the existing
    graph in a single vertex (so every cycle inside stays monochromatic),
    sometimes in more vertices, in which case rainbow-acyclicity is checked.
    """
    from .solvers.rainbow import rainbow_search

    def make():
        edges: dict[int, tuple[int, int]] = {}
        colors: dict[int, int] = {}
        nv = 0
        for c in range(classes):
            sizes = [rng.randint(1, 2) for _ in range(rng.randint(2, 3))]
            overlap = 0 if nv == 0 else (1 if rng.random() < 0.7 else 2)
            overlap = min(overlap, nv)
            shared = rng.sample(range(nv), overlap)
            parts: list[list[int]] = []
            pool = list(shared)
            for s in sizes:
                part = []
                for _ in range(s):
                    if pool:
                        part.append(pool.pop())
                    else:
                        part.append(nv)
                        nv += 1
                parts.append(part)
            for i, j in combinations(range(len(parts)), 2):
                for a in parts[i]:
                    for b in parts[j]:
                        edges[len(edges)] = (min(a, b), max(a, b))
                        colors[len(colors)] = c
        pairs = [edges[e] for e in edges]
        if len(set(pairs)) != len(pairs):
            return None
        if nv < 2:
            return None
        return EdgeColoredGraph(Graph(range(nv), edges, check=False), colors)

    return _reject(rng, make, lambda g: g is not None and rainbow_search(g, CYCLE) is None)


# ---------------------------------------------------------------------------
# scaling families


def trail_bench_instance(rng: random.Random, size: int) -> tuple[Graph, TransitionSystem, int, int]:
    """Sparse random graph whose transition system has about ``size`` allowed transitions.

    Average degree 4 with half of all incident pairs allowed gives about
    four transitions per vertex.  A backbone path ``0 - 1 - ... - n-2`` with
    its consecutive transitions allowed keeps every edge within reach of the
    start, and the target (last vertex) is isolated, so the search runs to
    exhaustion.
    """
    n = max(4, size // 4)
    m = 2 * n
    edges: dict[int, tuple[int, int]] = {}
    seen = set()
    for v in range(n - 2):
        seen.add((v, v + 1))
        edges[len(edges)] = (v, v + 1)
    while len(edges) < m:
        a, b = rng.randrange(n - 1), rng.randrange(n - 1)
        if a == b or (min(a, b), max(a, b)) in seen:
            continue
        seen.add((min(a, b), max(a, b)))
        edges[len(edges)] = (a, b)
    g = Graph(range(n), edges, check=False)
    t = random_transitions(rng, g, 0.5)
    allowed = {v: list(t.pairs(v)) + ([(v - 1, v)] if 0 < v < n - 2 else []) for v in g.vertices}
    return g, TransitionSystem(g, allowed, check=False), 0, n - 1


def directed_bench_instance(rng: random.Random, size: int, colors: int = 3) -> tuple[ArcColoredDigraph, int, int]:
    """Random digraph with ``size`` arcs on ``size // 4`` vertices.

    A properly colored backbone path ``0 -> 1 -> ... -> n-2`` makes every
    non-target vertex reachable from the start, and the target (last vertex)
    has no incoming arc, so a search must exhaust every reachable state
    before answering.
    """
    n = max(4, size // 4)
    arcs: dict[int, tuple[int, int]] = {}
    colored: dict[int, int] = {}
    seen = set()
    for v in range(n - 2):
        seen.add((v, v + 1))
        colored[len(arcs)] = v % 2
        arcs[len(arcs)] = (v, v + 1)
    while len(arcs) < size:
        a, b = rng.randrange(n), rng.randrange(n - 1)
        if a == b or (a, b) in seen:
            continue
        seen.add((a, b))
        colored[len(arcs)] = rng.randrange(colors)
        arcs[len(arcs)] = (a, b)
    d = Digraph(range(n), arcs, check=False)
    return ArcColoredDigraph(d, colored), 0, n - 1
