"""Query descriptions shared by the solvers, the oracle and the validator."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import CLOSED_TRAIL, CYCLE, PATH, TRAIL

TRANSITIONS = "forbidden-transitions"
PROPERLY_COLORED = "properly-colored"
RAINBOW = "rainbow"
ALTERNATING = "alternating"
LOCAL2 = "locally-2-colored"
CONSTRAINTS = (TRANSITIONS, PROPERLY_COLORED, RAINBOW, ALTERNATING, LOCAL2)

CIRCUIT = "circuit"
DIRECTED_TRAIL = "directed-trail"
DIRECTED_PATH = "directed-path"
QUERY_KINDS = (PATH, TRAIL, CYCLE, CLOSED_TRAIL, CIRCUIT, DIRECTED_TRAIL, DIRECTED_PATH)
OPEN_KINDS = frozenset({PATH, TRAIL, DIRECTED_TRAIL, DIRECTED_PATH})
DIRECTED_KINDS = frozenset({CIRCUIT, DIRECTED_TRAIL, DIRECTED_PATH})

# shape of the certificate produced for each query kind
CERTIFICATE_KIND = {
    PATH: PATH, TRAIL: TRAIL, CYCLE: CYCLE, CLOSED_TRAIL: CLOSED_TRAIL,
    CIRCUIT: CYCLE, DIRECTED_TRAIL: TRAIL, DIRECTED_PATH: PATH,
}


@dataclass(frozen=True)
class Query:
    """A search request.

    ``instance`` is the decorated instance matching ``constraint``: a
    :class:`TransitionSystem` for forbidden transitions, an
    :class:`EdgeColoredGraph` (or :class:`ArcColoredDigraph` for directed
    kinds) for colored constraints, a :class:`Matching` (or
    :class:`MatchedDigraph`) for alternation, and a
    :class:`LocallyTwoColoredGraph` for local 2-colorings.
    """

    instance: object
    kind: str
    constraint: str
    endpoints: tuple[int, int] | None = None
    required: int | None = None
    required_is_vertex: bool = False

    def __post_init__(self):
        if self.kind not in QUERY_KINDS:
            raise ValueError(f"unknown query kind {self.kind!r}")
        if self.constraint not in CONSTRAINTS:
            raise ValueError(f"unknown constraint {self.constraint!r}")
        if self.kind in OPEN_KINDS:
            if self.endpoints is None:
                raise ValueError(f"{self.kind} queries need endpoints")
            s, t = self.endpoints
            if s == t:
                raise ValueError("endpoints must be distinct")
        elif self.endpoints is not None:
            raise ValueError(f"{self.kind} queries take no endpoints")

    @property
    def directed(self) -> bool:
        return self.kind in DIRECTED_KINDS

    @property
    def closed(self) -> bool:
        return self.kind not in OPEN_KINDS

    @property
    def certificate_kind(self) -> str:
        return CERTIFICATE_KIND[self.kind]
