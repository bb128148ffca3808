"""Shared checks for certificate-level tests."""

from conpath.errors import CertificateError
from conpath.graph import Certificate
from conpath.oracle import iter_certificates
from conpath.query import Query
from conpath.validate import _underlying, check_constraint, check_shape

# one PASS/FAIL line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_REPORT: list[str] = []


def is_certificate(instance, cert: Certificate, constraint: str) -> bool:
    """Shape plus constraint, without endpoint or kind bookkeeping."""
    structure, directed = _underlying(instance)
    try:
        check_shape(structure, cert, directed)
        check_constraint(instance, cert, constraint)
    except CertificateError:
        return False
    return True


def canon(cert: Certificate, directed: bool = False):
    """Comparable form: open certificates as is, closed ones up to rotation (and reversal)."""
    vs, es = cert.vertices, cert.edges
    if not cert.closed:
        return (cert.kind, vs, es)
    body = vs[:-1]
    options = []
    seqs = [(body, es)]
    if not directed:
        # reversing v0 e0 v1 ... e_{k-1} v0 gives v0 e_{k-1} ... e0 v0
        seqs.append(((body[0],) + body[1:][::-1], es[::-1]))
    for b, e in seqs:
        k = len(e)
        for i in range(k):
            options.append((b[i:] + b[:i], e[i:] + e[:i]))
    return (cert.kind, min(options))


def certificates(instance, kind, constraint, endpoints=None, limit=None):
    return list(iter_certificates(Query(instance, kind, constraint, endpoints), limit))


def open_pairs(vertices):
    return [(a, b) for a in vertices for b in vertices if a != b]


def exhaustive_through(g, m, e) -> bool:
    """Whether some alternating path between the two exposed vertices uses ``e``."""
    s, t = m.exposed()
    out = []

    def rec(v, seen, es):
        if v == t:
            out.append(list(es))
            return
        for f in g.incident(v):
            if es and (f in m.edges) == (es[-1] in m.edges):
                continue
            if not es and f in m.edges:
                continue
            w = g.other(f, v)
            if w in seen:
                continue
            seen.add(w)
            es.append(f)
            rec(w, seen, es)
            es.pop()
            seen.discard(w)
    rec(s, {s}, [])
    return any(e in es and es[-1] not in m.edges for es in out)
