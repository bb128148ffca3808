"""Decorated instances: colorings, transition systems, local 2-colorings, arc-colored digraphs."""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Mapping

from .errors import GraphError
from .graph import Digraph, Graph

Color = Hashable
RED, BLUE = "R", "B"


def _first_appearance(values: Iterable) -> list:
    seen = {}
    for x in values:
        if x not in seen:
            seen[x] = None
    return list(seen)


class EdgeColoredGraph:
    """A graph with a total edge coloring."""

    __slots__ = ("graph", "colors", "_classes")

    def __init__(self, graph: Graph, colors: Mapping[int, Color]):
        self.graph = graph
        self.colors = dict(colors)
        missing = [e for e in graph.edges if e not in self.colors]
        if missing:
            raise GraphError(f"edge {missing[0]} has no color")
        extra = self.colors.keys() - set(graph.edges)
        if extra:
            raise GraphError(f"color given for unknown edge {min(extra)}")
        self._classes: dict[Color, tuple[int, ...]] | None = None

    def color(self, e: int) -> Color:
        return self.colors[e]

    def palette(self) -> list[Color]:
        """Colors in order of first appearance along ascending edge ids."""
        return _first_appearance(self.colors[e] for e in self.graph.edges)

    def color_classes(self) -> dict[Color, tuple[int, ...]]:
        if self._classes is None:
            classes: dict[Color, list[int]] = {c: [] for c in self.palette()}
            for e in self.graph.edges:
                classes[self.colors[e]].append(e)
            self._classes = {c: tuple(es) for c, es in classes.items()}
        return self._classes

    def class_graph(self, c: Color) -> Graph:
        """The subgraph edge-induced by color ``c``."""
        return self.graph.edge_subgraph(self.color_classes()[c])

    def chromatic_degree(self, v: int) -> int:
        return len({self.colors[e] for e in self.graph.incident(v)})

    def restrict(self, keep: Iterable[int]) -> EdgeColoredGraph:
        """Vertex-induced sub-instance with colors carried over."""
        sub = self.graph.induced(keep)
        return EdgeColoredGraph(sub, {e: self.colors[e] for e in sub.edges})

    def __repr__(self) -> str:
        return f"EdgeColoredGraph({self.graph!r}, colors={len(self.palette())})"


class TransitionSystem:
    """Allowed transitions: for each vertex ``v`` a graph on the incident edges of ``v``."""

    __slots__ = ("graph", "_adj", "_size")

    def __init__(self, graph: Graph, allowed: Mapping[int, Iterable[tuple[int, int]]],
                 *, check: bool = True):
        self.graph = graph
        adj: dict[int, dict[int, set[int]]] = {v: {} for v in graph.vertices}
        size = 0
        for v, pairs in allowed.items():
            if check and not graph.has_vertex(v):
                raise GraphError(f"transition system mentions unknown vertex {v}")
            at = adj[v]
            for e, f in pairs:
                if check:
                    inc = graph.incident(v)
                    if e == f or e not in inc or f not in inc:
                        raise GraphError(f"transition ({e}, {f}) is not a pair of distinct edges at {v}")
                s = at.get(e)
                if s is None:
                    s = at[e] = set()
                if f in s:
                    continue
                s.add(f)
                t = at.get(f)
                if t is None:
                    t = at[f] = set()
                t.add(e)
                size += 1
        self._adj = adj
        self._size = size

    @classmethod
    def full(cls, graph: Graph) -> TransitionSystem:
        """Every pair of incident edges is an allowed transition."""
        allowed = {}
        for v in graph.vertices:
            inc = graph.incident(v)
            allowed[v] = [(inc[i], inc[j]) for i in range(len(inc)) for j in range(i + 1, len(inc))]
        return cls(graph, allowed, check=False)

    @classmethod
    def from_coloring(cls, ecg: EdgeColoredGraph) -> TransitionSystem:
        """Transitions induced by a coloring: allowed iff the two colors differ.

        Each transition graph is complete multipartite, with one part per color.
        """
        g = ecg.graph
        col = ecg.colors
        allowed = {}
        for v in g.vertices:
            inc = g.incident(v)
            allowed[v] = [(inc[i], inc[j]) for i in range(len(inc)) for j in range(i + 1, len(inc))
                          if col[inc[i]] != col[inc[j]]]
        return cls(g, allowed, check=False)

    def allows(self, v: int, e: int, f: int) -> bool:
        s = self._adj[v].get(e)
        return s is not None and f in s

    def allowed_from(self, v: int, e: int) -> list[int]:
        """Edges that may follow ``e`` through ``v``, ascending."""
        s = self._adj[v].get(e)
        return sorted(s) if s else []

    def pairs(self, v: int) -> list[tuple[int, int]]:
        """Allowed transitions at ``v`` as sorted ``(e, f)`` with ``e < f``."""
        at = self._adj[v]
        return sorted((e, f) for e, fs in at.items() for f in fs if e < f)

    def size(self) -> int:
        """Total number of allowed transitions, summed over vertices."""
        return self._size

    def transition_graph(self, v: int) -> Graph:
        return Graph(self.graph.incident(v), self.pairs(v), check=False)

    def is_connected_at(self, v: int) -> bool:
        inc = self.graph.incident(v)
        if len(inc) <= 1:
            return True
        at = self._adj[v]
        seen = {inc[0]}
        stack = [inc[0]]
        while stack:
            e = stack.pop()
            for f in at.get(e, ()):
                if f not in seen:
                    seen.add(f)
                    stack.append(f)
        return len(seen) == len(inc)

    def as_mapping(self) -> dict[int, list[tuple[int, int]]]:
        return {v: self.pairs(v) for v in self.graph.vertices}

    def __repr__(self) -> str:
        return f"TransitionSystem({self.graph!r}, size={self._size})"


class LocallyTwoColoredGraph:
    """A multigraph where every vertex splits its incident edges into red and blue.

    ``sides[(e, v)]`` is ``"R"`` or ``"B"`` for each edge ``e`` and endpoint ``v``.
    Parallel edges must carry different labels at one or both shared endpoints.
    """

    __slots__ = ("graph", "sides")

    def __init__(self, graph: Graph, sides: Mapping[tuple[int, int], str], *, check: bool = True):
        if not graph.multi:
            graph = Graph(graph.vertices, graph.edge_map(), multi=True, check=False)
        self.graph = graph
        self.sides = dict(sides)
        if check:
            self._check()

    def _check(self) -> None:
        g = self.graph
        signatures: dict[tuple, int] = {}
        for e in g.edges:
            u, v = g.ends(e)
            for x in (u, v):
                s = self.sides.get((e, x))
                if s not in (RED, BLUE):
                    raise GraphError(f"edge {e} has no red/blue label at endpoint {x}")
            a, b = (u, v) if u < v else (v, u)
            key = (a, b, self.sides[(e, a)], self.sides[(e, b)])
            if key in signatures:
                raise GraphError(
                    f"parallel edges {signatures[key]} and {e} carry identical labels at both endpoints")
            signatures[key] = e

    def side(self, e: int, v: int) -> str:
        return self.sides[(e, v)]

    def __repr__(self) -> str:
        return f"LocallyTwoColoredGraph({self.graph!r})"


class ArcColoredDigraph:
    """A digraph with a total arc coloring."""

    __slots__ = ("digraph", "colors")

    def __init__(self, digraph: Digraph, colors: Mapping[int, Color]):
        self.digraph = digraph
        self.colors = dict(colors)
        missing = [a for a in digraph.arcs if a not in self.colors]
        if missing:
            raise GraphError(f"arc {missing[0]} has no color")

    def color(self, a: int) -> Color:
        return self.colors[a]

    def palette(self) -> list[Color]:
        return _first_appearance(self.colors[a] for a in self.digraph.arcs)

    def __repr__(self) -> str:
        return f"ArcColoredDigraph({self.digraph!r}, colors={len(self.palette())})"


class MatchedDigraph:
    """A digraph with a directed perfect matching.

    Every vertex has exactly one outgoing and one incoming matching arc, and
    the matching is symmetric: ``(u, v)`` is a matching arc iff ``(v, u)`` is.
    """

    __slots__ = ("digraph", "matching", "mate")

    def __init__(self, digraph: Digraph, matching: Iterable[int]):
        self.digraph = digraph
        self.matching = frozenset(matching)
        out_m: dict[int, int] = {}
        in_m: dict[int, int] = {}
        pairs = set()
        for a in self.matching:
            if not digraph.has_arc(a):
                raise GraphError(f"matching arc {a} is not an arc of the digraph")
            u, v = digraph.ends(a)
            if u in out_m:
                raise GraphError(f"vertex {u} has two outgoing matching arcs")
            if v in in_m:
                raise GraphError(f"vertex {v} has two incoming matching arcs")
            out_m[u], in_m[v] = v, u
            pairs.add((u, v))
        for v in digraph.vertices:
            if v not in out_m or v not in in_m:
                raise GraphError(f"vertex {v} is not covered by the matching")
        for u, v in pairs:
            if (v, u) not in pairs:
                raise GraphError(f"matching arc {u}->{v} has no reverse arc in the matching")
        self.mate = out_m

    def is_matching_arc(self, a: int) -> bool:
        return a in self.matching

    def __repr__(self) -> str:
        return f"MatchedDigraph({self.digraph!r}, pairs={len(self.matching) // 2})"
