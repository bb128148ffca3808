"""Blossom-based matching machinery.

The augmenting-path search grows an alternating forest from every exposed
vertex at once, shrinking blossoms with a union-find structure over their
bases.  Each vertex is absorbed into a blossom at most once per search, so a
single search runs in near-linear time; path extraction replays the
recorded blossom bridges with an explicit stack instead of recursion.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import GraphError, PreconditionViolation
from .graph import CYCLE, PATH, Certificate, Graph, bridge_sides

ALTERNATING = "alternating"


class Matching:
    """A set of pairwise vertex-disjoint edges of ``graph``."""

    __slots__ = ("graph", "edges", "_mate")

    def __init__(self, graph: Graph, edges: Iterable[int] = ()):
        self.graph = graph
        self.edges = frozenset(edges)
        mate: dict[int, tuple[int, int]] = {}
        for e in self.edges:
            if not graph.has_edge(e):
                raise GraphError(f"matching edge {e} is not an edge of the graph")
            u, v = graph.ends(e)
            if u in mate or v in mate:
                raise GraphError(f"edge {e} shares an endpoint with another matching edge")
            mate[u] = (v, e)
            mate[v] = (u, e)
        self._mate = mate

    def mate(self, v: int) -> int | None:
        hit = self._mate.get(v)
        return None if hit is None else hit[0]

    def edge_at(self, v: int) -> int | None:
        hit = self._mate.get(v)
        return None if hit is None else hit[1]

    def is_covered(self, v: int) -> bool:
        return v in self._mate

    def exposed(self) -> list[int]:
        return [v for v in self.graph.vertices if v not in self._mate]

    @property
    def is_perfect(self) -> bool:
        return len(self._mate) == self.graph.num_vertices()

    def symmetric_difference(self, edges: Iterable[int]) -> Matching:
        return Matching(self.graph, self.edges.symmetric_difference(edges))

    def on(self, graph: Graph) -> Matching:
        """The edges of this matching that survive in ``graph`` (a subgraph)."""
        return Matching(graph, (e for e in self.edges if graph.has_edge(e)))

    def __contains__(self, e: int) -> bool:
        return e in self.edges

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(sorted(self.edges))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self.edges == other.edges and self.graph == other.graph

    def __hash__(self):
        return hash(self.edges)

    def __repr__(self) -> str:
        return f"Matching({sorted(self.edges)})"


@dataclass(frozen=True)
class Blossom:
    """An odd cycle matched within itself except at ``root``.

    ``cycle`` starts and ends at the root; its first and last edges are the
    two non-matching cycle edges at the root.  ``stem`` is the matching edge
    at the root, absent when the root is exposed.
    """

    root: int
    cycle: Certificate
    stem: int | None = None

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.cycle.vertices)


def check_blossom(m: Matching, b: Blossom) -> None:
    """Raise :class:`GraphError` unless ``b`` is a blossom for ``m``."""
    c = b.cycle
    g = m.graph
    k = len(c.edges)
    if c.vertices[0] != b.root or c.vertices[-1] != b.root:
        raise GraphError("blossom cycle must start and end at its root")
    if k < 3 or k % 2 == 0:
        raise GraphError("blossom cycle must have odd length at least 3")
    if len(set(c.vertices[:-1])) != k:
        raise GraphError("blossom cycle repeats a vertex")
    for i, e in enumerate(c.edges):
        if set(g.ends(e)) != {c.vertices[i], c.vertices[i + 1]}:
            raise GraphError(f"edge {e} does not join consecutive cycle vertices")
        if (e in m) != (i % 2 == 1):
            raise GraphError("blossom cycle does not alternate from its root")
    if m.edge_at(b.root) != b.stem:
        raise GraphError("stem must be the matching edge at the root")


# ---------------------------------------------------------------------------
# augmenting-path search


def _indexed(g: Graph):
    verts = g.vertices
    idx = {v: i for i, v in enumerate(verts)}
    ends = g._ends
    adj = []
    for v in verts:
        row = []
        for e in g._inc[v]:
            a, b = ends[e]
            row.append(idx[b if a == v else a])
        adj.append(row)
    return verts, idx, adj


def _augmenting_vertices(adj: list[list[int]], mate: list[int]) -> list[int] | None:
    """Vertex sequence of an augmenting path (indices), or ``None`` if ``mate`` is maximum."""
    n = len(adj)
    label = [0] * n          # 0 unlabeled, 1 even, 2 odd
    parent = [-1] * n        # odd vertex -> even vertex that labeled it
    root = [-1] * n
    was_odd = [False] * n
    bridge: list[tuple[int, int] | None] = [None] * n
    dsu = list(range(n))
    base_of = list(range(n))
    mark = [0] * n
    stamp = 0
    queue = deque()
    for v in range(n):
        if mate[v] < 0:
            label[v] = 1
            root[v] = v
            queue.append(v)

    def find(x: int) -> int:
        r = x
        while dsu[r] != r:
            r = dsu[r]
        while dsu[x] != r:
            dsu[x], x = r, dsu[x]
        return r

    def walk(x: int, stop: int, out: list[int]) -> None:
        # even alternating path from x up to the even vertex stop, inclusive
        tasks: list = [(x, stop, False)]
        while tasks:
            item = tasks.pop()
            if type(item) is int:
                out.append(item)
                continue
            y, target, rev = item
            pieces: list = []
            while y != target:
                if was_odd[y]:
                    p, q = bridge[y]
                    pieces.append(y)
                    pieces.append((p, mate[y], True))
                    y = q
                else:
                    z = mate[y]
                    pieces.append(y)
                    pieces.append(z)
                    y = parent[z]
            pieces.append(target)
            if rev:
                pieces.reverse()
                pieces = [p if type(p) is int else (p[0], p[1], not p[2]) for p in pieces]
            tasks.extend(reversed(pieces))

    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w == mate[v]:
                continue
            bv = base_of[find(v)]
            bw = base_of[find(w)]
            if bv == bw:
                continue
            lw = label[w]
            if lw == 0:
                label[w] = 2
                was_odd[w] = True
                parent[w] = v
                root[w] = root[v]
                x = mate[w]
                label[x] = 1
                root[x] = root[v]
                queue.append(x)
            elif lw == 1:
                if root[v] != root[w]:
                    left: list[int] = []
                    walk(v, root[v], left)
                    left.reverse()
                    right: list[int] = []
                    walk(w, root[w], right)
                    return left + right
                # same tree: shrink the blossom closed by edge v-w
                stamp += 1
                x, y = bv, bw
                while True:
                    if x >= 0:
                        if mark[x] == stamp:
                            top = x
                            break
                        mark[x] = stamp
                        x = -1 if mate[x] < 0 else base_of[find(parent[mate[x]])]
                    x, y = y, x
                rtop = find(top)
                for b, ends in ((bv, (v, w)), (bw, (w, v))):
                    while b != top:
                        o = mate[b]
                        nxt = base_of[find(parent[o])]
                        label[o] = 1
                        bridge[o] = ends
                        queue.append(o)
                        dsu[find(b)] = rtop
                        dsu[o] = rtop
                        b = nxt
                base_of[rtop] = top
    return None


def _search(g: Graph, m: Matching) -> list[int] | None:
    verts, idx, adj = _indexed(g)
    mate = [-1] * len(verts)
    for v, (w, _e) in m._mate.items():
        mate[idx[v]] = idx[w]
    found = _augmenting_vertices(adj, mate)
    if found is None:
        return None
    return [verts[i] for i in found]


def _path_certificate(g: Graph, vertices: list[int], kind: str = PATH,
                      constraint: str = ALTERNATING) -> Certificate:
    edges = []
    for a, b in zip(vertices, vertices[1:]):
        e = g.edge_between(a, b)
        if e is None:
            raise GraphError(f"no edge between {a} and {b}")
        edges.append(e)
    return Certificate(kind, tuple(vertices), tuple(edges), constraint)


def find_augmenting_path(g: Graph, m: Matching) -> Certificate | None:
    """An alternating path joining two exposed vertices, or ``None`` iff ``m`` is maximum."""
    found = _search(g, m)
    if found is None:
        return None
    return _path_certificate(g, found)


def maximum_matching(g: Graph, seed: Matching | None = None) -> Matching:
    """Grow ``seed`` by augmenting paths until none is left."""
    m = seed if seed is not None else Matching(g)
    while True:
        found = _search(g, m)
        if found is None:
            return m
        m = m.symmetric_difference(_path_certificate(g, found).edges)


# ---------------------------------------------------------------------------
# unique perfect matchings


def _strip_matching_bridges(g: Graph, m: Matching) -> Graph:
    """Delete endpoints of matching bridges until none remains; return the residue."""
    while g.num_vertices():
        drop = []
        for e in bridge_sides(g):
            if e in m.edges:
                drop.extend(g.ends(e))
        if not drop:
            break
        g = g.without_vertices(drop)
    return g


def has_alternating_cycle(g: Graph, m: Matching) -> bool:
    """Whether ``m`` admits an alternating cycle (``m`` need not be perfect).

    Equivalent to ``m`` not being the unique perfect matching of the subgraph
    induced by the covered vertices.
    """
    covered = g.induced(v for v in g.vertices if m.is_covered(v))
    return _strip_matching_bridges(covered, m.on(covered)).num_vertices() > 0


def find_alternating_cycle(g: Graph, m: Matching) -> Certificate | None:
    """An alternating cycle for the perfect matching ``m``, or ``None`` iff ``m`` is unique.

    Bridge deletion removes every forced matching edge; on the residue, some
    matching edge ``e`` lies on an alternating cycle, found as an augmenting
    path of ``m - e`` in ``residue - e`` closed by ``e``.
    """
    if not m.is_perfect:
        raise PreconditionViolation("alternating-cycle search needs a perfect matching")
    residue = _strip_matching_bridges(g, m)
    if residue.num_vertices() == 0:
        return None
    local = m.on(residue)
    for e in sorted(local.edges):
        without = residue.without_edges([e])
        found = _search(without, Matching(without, local.edges - {e}))
        if found is None:
            continue
        path = _path_certificate(without, found)
        cycle = Certificate(CYCLE, path.vertices + (path.vertices[0],), path.edges + (e,), ALTERNATING)
        return cycle
    raise AssertionError("bridgeless residue without alternating cycle contradicts Kotzig's theorem")


def find_unique_perfect_matching(g: Graph) -> Matching | None:
    """The unique perfect matching of ``g``, or ``None`` if there are zero or several.

    Works without a candidate matching: repeatedly deletes the endpoints of
    bridges whose two sides both have odd order.  Such bridges belong to every
    perfect matching, so they are removed in batches.
    """
    chosen: list[int] = []
    cur = g
    while cur.num_vertices():
        batch = []
        used: set[int] = set()
        for e, (_child, side, total) in bridge_sides(cur).items():
            if side % 2 == 1 and (total - side) % 2 == 1:
                u, v = cur.ends(e)
                if u in used or v in used:
                    return None
                used.update((u, v))
                batch.append(e)
        if not batch:
            return None
        chosen.extend(batch)
        cur = cur.without_vertices(used)
    return Matching(g, chosen)


def is_unique_perfect_matching(g: Graph, m: Matching) -> bool:
    return m.is_perfect and _strip_matching_bridges(g, m).num_vertices() == 0


# ---------------------------------------------------------------------------
# augmenting path through a prescribed matching edge


def augmenting_path_through_edge(g: Graph, m: Matching, e: int) -> Certificate | None:
    """An augmenting path crossing the matching edge ``e``, or ``None``.

    Exact under two preconditions, both checked: exactly two exposed vertices
    and no alternating cycle.  Deletes ``e`` (keeping its endpoints), completes
    ``m - e`` to a perfect matching with two augmentations, and joins the two
    resulting alternating paths through ``e``.
    """
    if e not in m:
        raise PreconditionViolation(f"edge {e} is not a matching edge")
    exposed = m.exposed()
    if len(exposed) != 2:
        raise PreconditionViolation(
            f"prescribed-edge search needs exactly two exposed vertices, found {len(exposed)}")
    if has_alternating_cycle(g, m):
        raise PreconditionViolation("prescribed-edge search needs a matching without alternating cycles")
    u, v = exposed
    a, b = g.ends(e)
    reduced = g.without_edges([e])
    partial = Matching(reduced, m.edges - {e})
    current = partial
    for _ in range(2):
        found = _search(reduced, current)
        if found is None:
            return None
        current = current.symmetric_difference(_path_certificate(reduced, found).edges)
    diff = partial.edges.symmetric_difference(current.edges)
    step: dict[int, list[int]] = {}
    for f in diff:
        x, y = reduced.ends(f)
        step.setdefault(x, []).append(f)
        step.setdefault(y, []).append(f)

    def follow(start: int) -> tuple[list[int], list[int]]:
        vs, es = [start], []
        prev = None
        x = start
        while True:
            nxt = [f for f in step.get(x, ()) if f != prev]
            if not nxt:
                return vs, es
            prev = nxt[0]
            x = reduced.other(prev, x)
            vs.append(x)
            es.append(prev)

    vs1, es1 = follow(u)
    if vs1[-1] not in (a, b):
        raise AssertionError("alternating path from an exposed vertex must end at the prescribed edge")
    other = b if vs1[-1] == a else a
    vs2, es2 = follow(other)
    if vs2[-1] != v:
        raise AssertionError("second alternating path must reach the other exposed vertex")
    return Certificate(PATH, tuple(vs1 + vs2), tuple(es1 + [e] + es2), ALTERNATING)
