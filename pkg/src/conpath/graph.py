"""Identifier-stable graphs, digraphs and path certificates.

Vertices and edges are opaque integers.  Derived graphs (induced subgraphs,
edge deletions) keep the identifiers of everything that survives, so a
certificate found on a derived graph is already expressed in the ids of the
original instance.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .errors import GraphError

VertexId = int
EdgeId = int

WALK, TRAIL, PATH, CYCLE, CLOSED_TRAIL = "walk", "trail", "path", "cycle", "closed-trail"
CERTIFICATE_KINDS = (WALK, TRAIL, PATH, CYCLE, CLOSED_TRAIL)
CLOSED_KINDS = frozenset({CYCLE, CLOSED_TRAIL})


def _edge_items(edges) -> Iterable[tuple[int, tuple[int, int]]]:
    if isinstance(edges, Mapping):
        return edges.items()
    return enumerate(edges)


class Graph:
    """Undirected graph (optionally a multigraph) with stable integer ids.

    ``edges`` is either a mapping ``edge id -> (u, v)`` or a sequence of pairs,
    in which case ids are assigned ``0, 1, ...`` in order.  Plain graphs reject
    parallel edges; ``multi=True`` admits them (used by locally 2-colored
    graphs).  Self-loops are always rejected.

    Instances are treated as immutable.
    """

    __slots__ = ("_vertices", "_ends", "_inc", "multi", "_pair_index", "_edge_tuple")

    def __init__(self, vertices: Iterable[int], edges=(), *, multi: bool = False,
                 check: bool = True):
        self.multi = multi
        self._vertices = tuple(sorted(set(vertices)))
        self._ends: dict[int, tuple[int, int]] = {
            e: (u, v) for e, (u, v) in _edge_items(edges)}
        inc: dict[int, list[int]] = {v: [] for v in self._vertices}
        self._edge_tuple = tuple(sorted(self._ends))
        for e in self._edge_tuple:
            u, v = self._ends[e]
            if u in inc:
                inc[u].append(e)
            if v in inc and v != u:
                inc[v].append(e)
        self._inc = inc
        self._pair_index: dict[tuple[int, int], int] | None = None
        if check:
            validate_graph(self)

    # -- basic accessors -------------------------------------------------
    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[int, ...]:
        return self._edge_tuple

    def num_vertices(self) -> int:
        return len(self._vertices)

    def num_edges(self) -> int:
        return len(self._ends)

    def has_vertex(self, v: int) -> bool:
        return v in self._inc

    def has_edge(self, e: int) -> bool:
        return e in self._ends

    def ends(self, e: int) -> tuple[int, int]:
        return self._ends[e]

    def other(self, e: int, v: int) -> int:
        a, b = self._ends[e]
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v} is not an endpoint of edge {e}")

    def incident(self, v: int) -> list[int]:
        """Edges incident to ``v`` in ascending id order (do not mutate)."""
        return self._inc[v]

    def degree(self, v: int) -> int:
        return len(self._inc[v])

    def neighbors(self, v: int) -> list[int]:
        ends = self._ends
        return [ends[e][1] if ends[e][0] == v else ends[e][0] for e in self._inc[v]]

    def edge_between(self, u: int, v: int) -> int | None:
        """Smallest edge id joining ``u`` and ``v``, or ``None``."""
        if self._pair_index is None:
            index: dict[tuple[int, int], int] = {}
            for e in self._edge_tuple:
                a, b = self._ends[e]
                key = (a, b) if a < b else (b, a)
                if key not in index:
                    index[key] = e
            self._pair_index = index
        return self._pair_index.get((u, v) if u < v else (v, u))

    def edge_map(self) -> dict[int, tuple[int, int]]:
        return dict(self._ends)

    # -- derived graphs ----------------------------------------------------
    def induced(self, keep: Iterable[int]) -> Graph:
        """Vertex-induced subgraph; surviving ids are unchanged."""
        keep = set(keep) & self._inc.keys()
        edges = {e: (u, v) for e, (u, v) in self._ends.items() if u in keep and v in keep}
        return Graph(keep, edges, multi=self.multi, check=False)

    def without_vertices(self, drop: Iterable[int]) -> Graph:
        drop = set(drop)
        return self.induced(v for v in self._vertices if v not in drop)

    def without_edges(self, drop: Iterable[int]) -> Graph:
        drop = set(drop)
        edges = {e: uv for e, uv in self._ends.items() if e not in drop}
        return Graph(self._vertices, edges, multi=self.multi, check=False)

    def edge_subgraph(self, keep: Iterable[int]) -> Graph:
        """Edge-induced subgraph: the given edges and their endpoints."""
        edges = {e: self._ends[e] for e in keep}
        vs = {x for uv in edges.values() for x in uv}
        return Graph(vs, edges, multi=self.multi, check=False)

    def fresh_vertex(self) -> int:
        return self._vertices[-1] + 1 if self._vertices else 0

    def fresh_edge(self) -> int:
        return self._edge_tuple[-1] + 1 if self._edge_tuple else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._vertices == other._vertices and self._ends == other._ends
                and self.multi == other.multi)

    def __hash__(self):
        return hash((self._vertices, tuple(sorted(self._ends.items()))))

    def __repr__(self) -> str:
        return f"Graph(n={len(self._vertices)}, m={len(self._ends)}{', multi' if self.multi else ''})"


def validate_graph(g: Graph) -> None:
    """Raise :class:`GraphError` naming the first violated invariant."""
    known = g._inc.keys()
    seen_pairs: set[tuple[int, int]] = set()
    for e in g.edges:
        u, v = g.ends(e)
        if u not in known or v not in known:
            missing = u if u not in known else v
            raise GraphError(f"edge {e} has dangling endpoint {missing}")
        if u == v:
            raise GraphError(f"edge {e} is a self-loop on vertex {u}")
        key = (u, v) if u < v else (v, u)
        if not g.multi and key in seen_pairs:
            raise GraphError(f"edge {e} duplicates an existing edge between {u} and {v}")
        seen_pairs.add(key)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Maximal connected vertex sets, ordered by smallest member."""
    seen: set[int] = set()
    parts = []
    for root in g.vertices:
        if root in seen:
            continue
        seen.add(root)
        comp = [root]
        stack = [root]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        parts.append(frozenset(comp))
    return parts


def component_index(g: Graph) -> dict[int, int]:
    """Map each vertex to the index of its component in :func:`connected_components`."""
    index = {}
    for i, comp in enumerate(connected_components(g)):
        for v in comp:
            index[v] = i
    return index


def bridge_sides(g: Graph) -> dict[int, tuple[int, int, int]]:
    """Bridges of ``g`` with side sizes.

    Returns ``{edge: (child, child_side_size, component_size)}`` where ``child``
    is the endpoint lying on the DFS-subtree side of the bridge.  Iterative
    low-link traversal; parallel edges are handled by skipping only the
    tree edge itself, never the parent vertex.
    """
    order: dict[int, int] = {}
    low: dict[int, int] = {}
    size: dict[int, int] = {}
    found: dict[int, tuple[int, int]] = {}
    counter = 0
    ends = g._ends
    for root in g.vertices:
        if root in order:
            continue
        comp_found: list[tuple[int, int]] = []
        order[root] = low[root] = counter
        counter += 1
        size[root] = 1
        # frames: (vertex, edge used to enter it, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, via, pos = stack[-1]
            inc = g._inc[v]
            if pos < len(inc):
                stack[-1] = (v, via, pos + 1)
                e = inc[pos]
                if e == via:
                    continue
                a, b = ends[e]
                w = b if a == v else a
                if w in order:
                    if order[w] < low[v]:
                        low[v] = order[w]
                else:
                    order[w] = low[w] = counter
                    counter += 1
                    size[w] = 1
                    stack.append((w, e, 0))
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    size[p] += size[v]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] > order[p]:
                        comp_found.append((via, v))
        total = size[root]
        for e, child in comp_found:
            found[e] = (child, size[child], total)
    return found


def bridges(g: Graph) -> set[int]:
    """Edges whose deletion (keeping endpoints) increases the component count."""
    return set(bridge_sides(g))


class Digraph:
    """Directed graph with stable arc ids.

    Antiparallel arcs ``(u, v)`` and ``(v, u)`` are distinct and allowed;
    parallel arcs in the same direction and self-loops are rejected.
    """

    __slots__ = ("_vertices", "_arcs", "_out", "_in", "_arc_tuple")

    def __init__(self, vertices: Iterable[int], arcs=(), *, check: bool = True):
        self._vertices = tuple(sorted(set(vertices)))
        self._arcs: dict[int, tuple[int, int]] = {a: (u, v) for a, (u, v) in _edge_items(arcs)}
        self._arc_tuple = tuple(sorted(self._arcs))
        out: dict[int, list[int]] = {v: [] for v in self._vertices}
        inn: dict[int, list[int]] = {v: [] for v in self._vertices}
        for a in self._arc_tuple:
            u, v = self._arcs[a]
            if u in out:
                out[u].append(a)
            if v in inn:
                inn[v].append(a)
        self._out, self._in = out, inn
        if check:
            validate_digraph(self)

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def arcs(self) -> tuple[int, ...]:
        return self._arc_tuple

    def ends(self, a: int) -> tuple[int, int]:
        return self._arcs[a]

    def tail(self, a: int) -> int:
        return self._arcs[a][0]

    def head(self, a: int) -> int:
        return self._arcs[a][1]

    def out_arcs(self, v: int) -> list[int]:
        return self._out[v]

    def in_arcs(self, v: int) -> list[int]:
        return self._in[v]

    def has_vertex(self, v: int) -> bool:
        return v in self._out

    def has_arc(self, a: int) -> bool:
        return a in self._arcs

    def num_vertices(self) -> int:
        return len(self._vertices)

    def num_arcs(self) -> int:
        return len(self._arcs)

    def arc_map(self) -> dict[int, tuple[int, int]]:
        return dict(self._arcs)

    def fresh_vertex(self) -> int:
        return self._vertices[-1] + 1 if self._vertices else 0

    def fresh_arc(self) -> int:
        return self._arc_tuple[-1] + 1 if self._arc_tuple else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._vertices == other._vertices and self._arcs == other._arcs

    def __hash__(self):
        return hash((self._vertices, tuple(sorted(self._arcs.items()))))

    def __repr__(self) -> str:
        return f"Digraph(n={len(self._vertices)}, arcs={len(self._arcs)})"


def validate_digraph(d: Digraph) -> None:
    known = d._out.keys()
    seen: set[tuple[int, int]] = set()
    for a in d.arcs:
        u, v = d.ends(a)
        if u not in known or v not in known:
            raise GraphError(f"arc {a} has dangling endpoint {u if u not in known else v}")
        if u == v:
            raise GraphError(f"arc {a} is a self-loop on vertex {u}")
        if (u, v) in seen:
            raise GraphError(f"arc {a} duplicates an existing arc {u}->{v}")
        seen.add((u, v))


@dataclass(frozen=True)
class Certificate:
    """A walk-shaped witness ``v1, e1, v2, ..., e_{k-1}, v_k``.

    Closed kinds repeat the first vertex at the end.  ``edges`` holds edge ids
    for undirected instances and arc ids for directed ones.  ``constraint``
    tags the constraint family the witness satisfies.
    """

    kind: str
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    constraint: str = ""

    def __post_init__(self):
        if self.kind not in CERTIFICATE_KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        if len(self.vertices) != len(self.edges) + 1:
            raise ValueError("a certificate needs exactly one more vertex than edges")
        if self.kind in CLOSED_KINDS and self.vertices[0] != self.vertices[-1]:
            raise ValueError("closed certificates must end where they start")

    @property
    def closed(self) -> bool:
        return self.kind in CLOSED_KINDS

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.edges)

    def with_kind(self, kind: str, constraint: str | None = None) -> Certificate:
        return Certificate(kind, self.vertices, self.edges,
                           self.constraint if constraint is None else constraint)

    def reversed(self) -> Certificate:
        return Certificate(self.kind, self.vertices[::-1], self.edges[::-1], self.constraint)
