"""Complete multipartite recognition and the excluded four-vertex patterns."""

from __future__ import annotations

from .graph import Graph

K2_K2 = "K2+K2"
P4 = "P4"
L4 = "L4"
PATTERNS = (K2_K2, P4, L4)


def complete_multipartite_partition(g: Graph) -> list[frozenset[int]] | None:
    """Parts of ``g`` if it is complete multipartite, else ``None``.

    The parts are the connected components of the complement, found by a
    breadth-first search that scans the not-yet-reached vertices at every
    step (quadratic in the number of vertices).  A final pass rejects any
    edge inside a part.
    """
    remaining = set(g.vertices)
    parts = []
    while remaining:
        root = min(remaining)
        remaining.discard(root)
        part = [root]
        queue = [root]
        while queue:
            v = queue.pop()
            nbrs = set(g.neighbors(v))
            reach = [w for w in remaining if w not in nbrs]
            for w in reach:
                remaining.discard(w)
                part.append(w)
                queue.append(w)
        parts.append(frozenset(part))
    where = {v: i for i, p in enumerate(parts) for v in p}
    for e in g.edges:
        a, b = g.ends(e)
        if where[a] == where[b]:
            return None
    return parts


def excluded_pattern(h: Graph) -> tuple[str, tuple[int, int, int, int]] | None:
    """An induced K2+K2, P4 or L4 in ``h`` (a graph without isolated vertices), or ``None``.

    ``h`` fails to be complete multipartite exactly when some edge ``bc`` has
    a vertex ``a`` adjacent to neither end.  Any neighbor ``d`` of ``a`` then
    completes one of the three patterns, depending on how many of ``b, c`` it
    sees.  Returned vertices follow the pattern: for P4 the path order, for L4
    the pendant vertex, its attachment, then the other two triangle vertices.
    """
    adj = {v: set(h.neighbors(v)) for v in h.vertices}
    for e in h.edges:
        b, c = h.ends(e)
        for a in h.vertices:
            if a in (b, c) or a in adj[b] or a in adj[c]:
                continue
            for d in sorted(adj[a]):
                db, dc = b in adj[d], c in adj[d]
                if not db and not dc:
                    return K2_K2, (a, d, b, c)
                if db and dc:
                    return L4, (a, d, b, c)
                if db:
                    return P4, (a, d, b, c)
                return P4, (a, d, c, b)
    return None


def induced_pattern(h: Graph, quad) -> str | None:
    """Name of the pattern induced by the four vertices ``quad`` in ``h``, if it is one of the three."""
    quad = list(quad)
    adj = {v: set(h.neighbors(v)) for v in quad}
    pairs = [(quad[i], quad[j]) for i in range(4) for j in range(i + 1, 4) if quad[j] in adj[quad[i]]]
    degs = sorted(sum(1 for p in pairs if v in p) for v in quad)
    if len(pairs) == 2 and degs == [1, 1, 1, 1]:
        return K2_K2
    if len(pairs) == 3 and degs == [1, 1, 2, 2]:
        return P4
    if len(pairs) == 4 and degs == [1, 2, 2, 3]:
        return L4
    return None
