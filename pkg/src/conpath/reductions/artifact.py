"""Reduction artifacts: a produced instance plus certificate lifting both ways."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field

from ..errors import CertificateError
from ..graph import Certificate


@dataclass
class ReductionArtifact:
    """Target instance of a reduction with maps between source and target certificates.

    ``vertex_origin`` and ``edge_origin`` send target ids back to the source
    ids they stand for; ids created by the reduction itself (gadget interiors,
    matching edges of split vertices, auxiliary terminals) map to ``None`` or
    are absent.
    """

    source: object
    target: object
    to_target: Callable[[Certificate], Certificate]
    to_source: Callable[[Certificate], Certificate]
    vertex_origin: dict = field(default_factory=dict)
    edge_origin: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    def forward(self, cert: Certificate) -> Certificate:
        """Translate a source certificate into the target instance."""
        return self.to_target(cert)

    def backward(self, cert: Certificate, **options) -> Certificate:
        """Translate a target certificate back into the source instance."""
        return self.to_source(cert, **options)


def project(cert: Certificate, edge_map: Callable[[int], int | None],
            vertex_map: Callable[[int], int], kind: str, constraint: str) -> Certificate:
    """Keep the edges that ``edge_map`` sends to source edges, renaming vertices.

    Each kept edge is taken with its traversal direction.  The kept edges
    must chain up (the end of one is the start of the next after renaming),
    otherwise the target certificate does not describe a source certificate.
    """
    steps = []
    vs = cert.vertices
    for i, e in enumerate(cert.edges):
        src = edge_map(e)
        if src is not None:
            steps.append((vertex_map(vs[i]), src, vertex_map(vs[i + 1])))
    if not steps:
        raise CertificateError("certificate uses no edge of the source instance")
    out_vs = [steps[0][0]]
    out_es = []
    for a, e, b in steps:
        if a != out_vs[-1]:
            raise CertificateError("projected edges do not chain into a walk")
        out_es.append(e)
        out_vs.append(b)
    try:
        return Certificate(kind, tuple(out_vs), tuple(out_es), constraint)
    except ValueError as exc:
        raise CertificateError(str(exc)) from None
