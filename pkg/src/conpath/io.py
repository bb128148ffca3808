"""JSON instance documents.

One document covers every instance family::

    {"kind": "edge-colored",
     "vertices": ["a", "b", "c"],
     "edges": [{"ends": ["a", "b"], "color": 1}, {"ends": ["b", "c"], "color": 2}]}

Vertices get internal ids by position in ``vertices``; edges (or arcs) by
position in ``edges`` (``arcs``).  ``matching`` lists edge positions,
``transitions`` maps a vertex label to allowed pairs of edge positions and
locally 2-colored edges carry ``"sides": ["R", "B"]`` aligned with ``ends``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import GraphError, InputError
from .graph import Certificate, Digraph, Graph
from .instances import (ArcColoredDigraph, EdgeColoredGraph, LocallyTwoColoredGraph, MatchedDigraph,
                        TransitionSystem)
from .matching import Matching

GRAPH = "graph"
EDGE_COLORED = "edge-colored"
TRANSITIONS_KIND = "transitions"
LOCALLY2 = "locally2"
MATCHED = "matched"
DIGRAPH = "digraph"
ARC_COLORED = "arc-colored-digraph"
MATCHED_DIGRAPH = "matched-digraph"
KINDS = (GRAPH, EDGE_COLORED, TRANSITIONS_KIND, LOCALLY2, MATCHED, DIGRAPH, ARC_COLORED, MATCHED_DIGRAPH)
DIRECTED = (DIGRAPH, ARC_COLORED, MATCHED_DIGRAPH)


@dataclass
class Document:
    """A loaded instance with its vertex labels (``labels[id]``)."""

    kind: str
    instance: object
    labels: list[str]

    def vertex(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"unknown vertex label {label!r}") from None

    def label(self, v: int) -> str:
        return self.labels[v]


def kind_of(instance) -> str:
    for cls, kind in ((TransitionSystem, TRANSITIONS_KIND), (EdgeColoredGraph, EDGE_COLORED),
                      (LocallyTwoColoredGraph, LOCALLY2), (Matching, MATCHED),
                      (ArcColoredDigraph, ARC_COLORED), (MatchedDigraph, MATCHED_DIGRAPH),
                      (Digraph, DIGRAPH), (Graph, GRAPH)):
        if isinstance(instance, cls):
            return kind
    raise InputError(f"cannot serialize {type(instance).__name__}")


def structure_of(instance):
    """The underlying :class:`Graph` or :class:`Digraph`."""
    if isinstance(instance, (Graph, Digraph)):
        return instance
    if isinstance(instance, (ArcColoredDigraph, MatchedDigraph)):
        return instance.digraph
    return instance.graph


def _need(doc: dict, key: str):
    if key not in doc:
        raise InputError(f"document lacks field {key!r}")
    return doc[key]


def from_dict(doc: dict) -> Document:
    if not isinstance(doc, dict):
        raise InputError("an instance document must be a JSON object")
    kind = _need(doc, "kind")
    if kind not in KINDS:
        raise InputError(f"unknown instance kind {kind!r}")
    labels = [str(v) for v in _need(doc, "vertices")]
    if len(set(labels)) != len(labels):
        raise InputError("duplicate vertex labels")
    ids = {v: i for i, v in enumerate(labels)}
    key = "arcs" if kind in DIRECTED else "edges"
    items = _need(doc, key)
    ends = {}
    extra = []
    for i, item in enumerate(items):
        if isinstance(item, dict):
            pair = _need(item, "ends")
        else:
            pair, item = item, {}
        if len(pair) != 2:
            raise InputError(f"{key[:-1]} {i} does not have two ends")
        try:
            ends[i] = (ids[str(pair[0])], ids[str(pair[1])])
        except KeyError as exc:
            raise InputError(f"{key[:-1]} {i} mentions unknown vertex {exc.args[0]!r}") from None
        extra.append(item)
    n = len(labels)
    try:
        if kind in DIRECTED:
            d = Digraph(range(n), ends)
            if kind == DIGRAPH:
                inst = d
            elif kind == ARC_COLORED:
                inst = ArcColoredDigraph(d, {i: _need(x, "color") for i, x in enumerate(extra)})
            else:
                inst = MatchedDigraph(d, _positions(doc, len(items)))
        else:
            g = Graph(range(n), ends, multi=kind == LOCALLY2)
            if kind == GRAPH:
                inst = g
            elif kind == EDGE_COLORED:
                inst = EdgeColoredGraph(g, {i: _need(x, "color") for i, x in enumerate(extra)})
            elif kind == MATCHED:
                inst = Matching(g, _positions(doc, len(items)))
            elif kind == LOCALLY2:
                sides = {}
                for i, x in enumerate(extra):
                    s = _need(x, "sides")
                    sides[(i, ends[i][0])], sides[(i, ends[i][1])] = s[0], s[1]
                inst = LocallyTwoColoredGraph(g, sides)
            else:
                allowed = {}
                for v, pairs in _need(doc, "transitions").items():
                    if str(v) not in ids:
                        raise InputError(f"transitions mention unknown vertex {v!r}")
                    allowed[ids[str(v)]] = [tuple(p) for p in pairs]
                inst = TransitionSystem(g, allowed)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    return Document(kind, inst, labels)


def _positions(doc: dict, count: int) -> list[int]:
    out = _need(doc, "matching")
    for p in out:
        if not isinstance(p, int) or not 0 <= p < count:
            raise InputError(f"matching refers to missing edge {p!r}")
    return list(out)


def loads(text: str) -> Document:
    try:
        return from_dict(json.loads(text))
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {exc}") from None


def load(path: str) -> Document:
    try:
        with open(path, encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise InputError(str(exc)) from None


def to_dict(instance, labels=None) -> dict:
    """Document for ``instance``; vertex ``v`` is written as ``labels[v]`` (default ``str(v)``).

    Edges are written in ascending id order, so positions may differ from
    the ids of instances produced by reductions.
    """
    kind = kind_of(instance)
    s = structure_of(instance)
    name = (lambda v: str(v)) if labels is None else (lambda v: labels[v])
    pos = {e: i for i, e in enumerate(s.arcs if kind in DIRECTED else s.edges)}
    items = []
    for e in pos:
        a, b = s.ends(e)
        item: dict = {"ends": [name(a), name(b)]}
        if kind in (EDGE_COLORED, ARC_COLORED):
            item["color"] = instance.colors[e]
        if kind == LOCALLY2:
            item["sides"] = [instance.side(e, a), instance.side(e, b)]
        items.append(item)
    doc: dict = {"kind": kind, "vertices": [name(v) for v in s.vertices],
                 "arcs" if kind in DIRECTED else "edges": items}
    if kind == MATCHED:
        doc["matching"] = sorted(pos[e] for e in instance.edges)
    if kind == MATCHED_DIGRAPH:
        doc["matching"] = sorted(pos[e] for e in instance.matching)
    if kind == TRANSITIONS_KIND:
        doc["transitions"] = {name(v): [[pos[e], pos[f]] for e, f in instance.pairs(v)]
                              for v in s.vertices if instance.pairs(v)}
    return doc


def dumps(instance, labels=None) -> str:
    """Canonical text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(to_dict(instance, labels), sort_keys=True, indent=2) + "\n"


def certificate_to_dict(cert: Certificate, doc: Document | None = None) -> dict:
    """Label sequence, edge positions and constraint tag of a certificate."""
    name = (lambda v: str(v)) if doc is None else doc.label
    return {"kind": cert.kind, "constraint": cert.constraint,
            "vertices": [name(v) for v in cert.vertices], "edges": list(cert.edges)}


def certificate_from_dict(data: dict, doc: Document) -> Certificate:
    try:
        return Certificate(_need(data, "kind"), tuple(doc.vertex(str(v)) for v in _need(data, "vertices")),
                           tuple(_need(data, "edges")), _need(data, "constraint"))
    except (TypeError, ValueError) as exc:
        raise InputError(f"malformed certificate: {exc}") from None
