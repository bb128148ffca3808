"""Brute-force ground truth.

Everything here is deliberately naive backtracking over edge sequences.  It
relies on graph-core, the instance types and the validator only, never on the
matching engine or the solvers.  Size guards raise :class:`GuardExceeded`
instead of silently truncating the enumeration.
"""

from __future__ import annotations

from collections.abc import Iterator

from .errors import GuardExceeded
from .graph import CYCLE, PATH, Certificate, Graph, bridges
from .instances import MatchedDigraph
from .query import (ALTERNATING, LOCAL2, PROPERLY_COLORED, RAINBOW, TRANSITIONS,
                    Query)
from .validate import _underlying, check_certificate

VERTEX_GUARD = 8
EDGE_GUARD = 12
MATCHING_VERTEX_GUARD = 16
ORDERING_GUARD = 8


def _vertex_simple(q: Query) -> bool:
    return q.certificate_kind in (PATH, CYCLE)


def _guard(q: Query, limit: int | None) -> None:
    structure, directed = _underlying(q.instance)
    if _vertex_simple(q):
        cap = VERTEX_GUARD if limit is None else limit
        if structure.num_vertices() > cap:
            raise GuardExceeded(f"oracle refuses {structure.num_vertices()} vertices (guard {cap})")
    else:
        cap = EDGE_GUARD if limit is None else limit
        size = structure.num_arcs() if directed else structure.num_edges()
        if size > cap:
            raise GuardExceeded(f"oracle refuses {size} edges (guard {cap})")


def _compatible(q: Query, v: int, e: int, f: int) -> bool:
    inst = q.instance
    c = q.constraint
    if c == TRANSITIONS:
        return inst.allows(v, e, f)
    if c == PROPERLY_COLORED:
        return inst.colors[e] != inst.colors[f]
    if c == LOCAL2:
        return inst.side(e, v) != inst.side(f, v)
    if c == ALTERNATING:
        inside = inst.matching if isinstance(inst, MatchedDigraph) else inst.edges
        return (e in inside) != (f in inside)
    return True


def _closed_key(vs: tuple[int, ...], es: tuple[int, ...], directed: bool):
    """Rotation (and, undirected, reflection) invariant key: ``(edges, start vertex)``."""
    i = es.index(min(es))
    fwd = (es[i:] + es[:i], vs[i])
    if directed:
        return fwd
    res, rvs = es[::-1], vs[::-1]
    j = res.index(min(es))
    return min(fwd, (res[j:] + res[:j], rvs[j]))


def _sequences(q: Query) -> Iterator[Certificate]:
    structure, directed = _underlying(q.instance)
    kind = q.certificate_kind
    simple = _vertex_simple(q)
    rainbow = q.constraint == RAINBOW
    colors = getattr(q.instance, "colors", None)
    closed = q.closed
    if directed:
        def steps(v):
            for a in structure.out_arcs(v):
                yield a, structure.head(a)
    else:
        def steps(v):
            for e in structure.incident(v):
                yield e, structure.other(e, v)

    starts = [q.endpoints[0]] if q.endpoints else list(structure.vertices)
    target = q.endpoints[1] if q.endpoints else None
    seen_closed = set()
    for s in starts:
        vs = [s]
        es: list[int] = []
        used_e: set[int] = set()
        used_v = {s}
        used_c: set = set()

        def rec():
            v = vs[-1]
            for e, w in steps(v):
                if e in used_e:
                    continue
                if es and not _compatible(q, v, es[-1], e):
                    continue
                if rainbow and colors[e] in used_c:
                    continue
                if closed and w == s:
                    if len(es) >= 1 and _compatible(q, s, e, es[0]):
                        cvs = tuple(vs) + (s,)
                        ces = tuple(es) + (e,)
                        key = _closed_key(cvs, ces, directed)
                        if key not in seen_closed:
                            seen_closed.add(key)
                            yield Certificate(kind, cvs, ces, q.constraint)
                    if simple:
                        continue
                elif simple and w in used_v:
                    continue
                if not closed and w == target:
                    yield Certificate(kind, tuple(vs) + (w,), tuple(es) + (e,), q.constraint)
                    if simple:
                        continue
                vs.append(w)
                es.append(e)
                used_e.add(e)
                fresh = w not in used_v
                used_v.add(w)
                if rainbow:
                    used_c.add(colors[e])
                yield from rec()
                if rainbow:
                    used_c.discard(colors[e])
                if fresh:
                    used_v.discard(w)
                used_e.discard(e)
                es.pop()
                vs.pop()

        yield from rec()


def _canonical(cert: Certificate, directed: bool) -> Certificate:
    if not cert.closed:
        return cert
    es, start = _closed_key(cert.vertices, cert.edges, directed)
    step = {}
    for i, e in enumerate(cert.edges):
        step[(cert.vertices[i], e)] = cert.vertices[i + 1]
        step[(cert.vertices[i + 1], e)] = cert.vertices[i]
    vs = [start]
    for e in es:
        vs.append(step[(vs[-1], e)])
    return Certificate(cert.kind, tuple(vs), es, cert.constraint)


def _matches(q: Query, cert: Certificate) -> bool:
    if q.required is None:
        return True
    pool = cert.vertices if q.required_is_vertex else cert.edges
    return q.required in pool


def iter_certificates(q: Query, limit: int | None = None) -> Iterator[Certificate]:
    """Lazily enumerate every certificate answering ``q`` (closed ones canonicalized)."""
    _guard(q, limit)
    _, directed = _underlying(q.instance)
    for cert in _sequences(q):
        if not _matches(q, cert):
            continue
        cert = _canonical(cert, directed)
        check_certificate(q, cert)
        yield cert


def exhaustive_search(q: Query, limit: int | None = None) -> list[Certificate]:
    """All certificates answering ``q``."""
    return list(iter_certificates(q, limit))


def oracle_find(q: Query, limit: int | None = None) -> Certificate | None:
    """First certificate in enumeration order, or ``None``."""
    return next(iter_certificates(q, limit), None)


def oracle_exists(q: Query, limit: int | None = None) -> bool:
    return oracle_find(q, limit) is not None


# ---------------------------------------------------------------------------
# matchings


def all_perfect_matchings(g: Graph) -> list[frozenset[int]]:
    """Every perfect matching as a set of edge ids."""
    if g.num_vertices() > MATCHING_VERTEX_GUARD:
        raise GuardExceeded(f"oracle refuses {g.num_vertices()} vertices (guard {MATCHING_VERTEX_GUARD})")
    out: list[frozenset[int]] = []
    order = list(g.vertices)
    covered: set[int] = set()
    chosen: list[int] = []

    def rec(i: int):
        while i < len(order) and order[i] in covered:
            i += 1
        if i == len(order):
            out.append(frozenset(chosen))
            return
        v = order[i]
        covered.add(v)
        for e in g.incident(v):
            w = g.other(e, v)
            if w in covered:
                continue
            covered.add(w)
            chosen.append(e)
            rec(i + 1)
            chosen.pop()
            covered.discard(w)
        covered.discard(v)

    rec(0)
    return out


def all_matchings(g: Graph) -> list[frozenset[int]]:
    """Every matching (including the empty one)."""
    if g.num_edges() > 2 * MATCHING_VERTEX_GUARD:
        raise GuardExceeded(f"oracle refuses {g.num_edges()} edges")
    out = []
    es = g.edges

    def rec(i: int, covered: frozenset, chosen: tuple):
        if i == len(es):
            out.append(frozenset(chosen))
            return
        rec(i + 1, covered, chosen)
        u, v = g.ends(es[i])
        if u not in covered and v not in covered:
            rec(i + 1, covered | {u, v}, chosen + (es[i],))

    rec(0, frozenset(), ())
    return out


def all_bridge_deletion_orderings(g: Graph, matching) -> list[tuple[int, ...]]:
    """Every order in which the matching edges can be peeled off as bridges."""
    medges = frozenset(getattr(matching, "edges", matching))
    if len(medges) > ORDERING_GUARD:
        raise GuardExceeded(f"oracle refuses {len(medges)} matching edges (guard {ORDERING_GUARD})")
    covered = {x for e in medges for x in g.ends(e)}
    if covered != set(g.vertices) or 2 * len(medges) != len(covered):
        raise ValueError("bridge-deletion orderings need a perfect matching")
    out: list[tuple[int, ...]] = []

    def rec(cur: Graph, prefix: tuple[int, ...]):
        if cur.num_vertices() == 0:
            out.append(prefix)
            return
        for e in sorted(bridges(cur) & medges):
            rec(cur.without_vertices(cur.ends(e)), prefix + (e,))

    rec(g, ())
    return out


def precedence_from_orderings(orderings: list[tuple[int, ...]]) -> set[tuple[int, int]]:
    """Pairs ``(e, f)`` with ``e`` before ``f`` in every ordering."""
    if not orderings:
        return set()
    ground = orderings[0]
    rel = {(e, f) for e in ground for f in ground if e != f}
    for order in orderings:
        pos = {e: i for i, e in enumerate(order)}
        rel = {(e, f) for e, f in rel if pos[e] < pos[f]}
    return rel


def all_blossoms(g: Graph, matching) -> list[tuple[int, tuple[int, ...]]]:
    """Every blossom as ``(root, cycle edges)``, each cycle listed once per root."""
    medges = frozenset(getattr(matching, "edges", matching))
    if g.num_vertices() > 2 * VERTEX_GUARD:
        raise GuardExceeded(f"oracle refuses {g.num_vertices()} vertices")
    found = []
    seen = set()
    for root in g.vertices:
        # blossom cycles leave and re-enter the root by non-matching edges
        def rec(v, vs, es):
            for e in g.incident(v):
                if es and (e in medges) == (es[-1] in medges):
                    continue
                if not es and e in medges:
                    continue
                w = g.other(e, v)
                if w == root:
                    if len(es) >= 2 and e not in medges and len(es) % 2 == 0:
                        key = (root, frozenset(es + [e]))
                        if key not in seen:
                            seen.add(key)
                            found.append((root, tuple(es + [e])))
                    continue
                if w in vs:
                    continue
                vs.add(w)
                es.append(e)
                rec(w, vs, es)
                es.pop()
                vs.discard(w)

        rec(root, {root}, [])
    return found
