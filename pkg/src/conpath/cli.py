"""Command-line front end.

Exit status: 0 found, 1 not found, 2 precondition violation, 3 budget
exhausted, 4 input error.
"""

from __future__ import annotations

import argparse
import gc
import json
import os
import random
import statistics
import sys
import time

from . import generators as gen
from . import io
from .errors import (BudgetExhausted, CertificateError, GraphError, GuardExceeded, InputError,
                     PreconditionViolation)
from .query import ALTERNATING, LOCAL2, PROPERLY_COLORED, QUERY_KINDS, RAINBOW, TRANSITIONS, Query

FOUND, NOT_FOUND, PRECONDITION, BUDGET, INPUT = 0, 1, 2, 3, 4

CONSTRAINTS = {
    "transitions": TRANSITIONS, TRANSITIONS: TRANSITIONS,
    "pc": PROPERLY_COLORED, PROPERLY_COLORED: PROPERLY_COLORED,
    "rainbow": RAINBOW,
    "alternating": ALTERNATING,
    "local2": LOCAL2, LOCAL2: LOCAL2,
}

# instance kinds each constraint accepts
ACCEPTS = {
    TRANSITIONS: {io.TRANSITIONS_KIND},
    PROPERLY_COLORED: {io.EDGE_COLORED, io.ARC_COLORED},
    RAINBOW: {io.EDGE_COLORED},
    ALTERNATING: {io.MATCHED, io.MATCHED_DIGRAPH},
    LOCAL2: {io.LOCALLY2},
}

THEOREMS = ("kotzig", "yeo", "ft", "pc-trail", "rainbow-class", "multipartite")
REDUCTIONS = ("ec-line", "pm-line", "local2-matched", "local2-terminal", "matched-local2",
              "digraph-local2", "star", "pc-gadget", "pc-path-gadget", "gadget-replace",
              "arc-matched", "pc-path-circuit")
FAMILIES = ("graph", "edge-colored", "transitions", "locally2", "matched", "digraph",
            "arc-colored-digraph", "matched-digraph", "unique-pm", "pc-acyclic", "ft",
            "pc-trail-bridge", "rainbow-acyclic", "trail-bench", "directed-bench")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


class _Out:
    def __init__(self, fmt: str, stream=None):
        self.machine = fmt == "machine"
        self.stream = stream or sys.stdout

    def emit(self, text: str, data: dict) -> None:
        if self.machine:
            self.stream.write(json.dumps(data, sort_keys=True) + "\n")
        else:
            self.stream.write(text + "\n")


def _cert_text(cert, doc) -> str:
    return (f"{cert.kind} [{cert.constraint}]: " + " ".join(doc.label(v) for v in cert.vertices)
            + "\nedges: " + " ".join(str(e) for e in cert.edges))


def _query(doc, args) -> Query:
    constraint = CONSTRAINTS.get(args.constraint)
    if constraint is None:
        raise InputError(f"unknown constraint {args.constraint!r}")
    if doc.kind not in ACCEPTS[constraint]:
        raise InputError(f"a {doc.kind} instance cannot answer {constraint} queries")
    ends = None
    if args.source is not None or args.target is not None:
        if args.source is None or args.target is None:
            raise InputError("--from and --to go together")
        ends = (doc.vertex(args.source), doc.vertex(args.target))
    required, is_vertex = None, False
    if getattr(args, "required_edge", None) is not None:
        required = args.required_edge
    if getattr(args, "via", None) is not None:
        required, is_vertex = doc.vertex(args.via), True
    try:
        return Query(doc.instance, args.kind, constraint, ends, required, is_vertex)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _solve(args, out: _Out) -> int:
    from .solvers import solve
    from .validate import check_certificate
    doc = io.load(args.instance)
    q = _query(doc, args)
    if args.validate_only:
        text = open(args.certificate, encoding="utf-8").read() if args.certificate else sys.stdin.read()
        try:
            cert = io.certificate_from_dict(json.loads(text), doc)
        except json.JSONDecodeError as exc:
            raise InputError(f"certificate is not valid JSON: {exc}") from None
        try:
            check_certificate(q, cert)
        except CertificateError as exc:
            out.emit(f"invalid: {exc}", {"status": "invalid", "reason": str(exc)})
            return NOT_FOUND
        out.emit("valid", {"status": "valid"})
        return FOUND
    cert = solve(q, budget=args.budget)
    if cert is None:
        out.emit("not found", {"status": "not-found"})
        return NOT_FOUND
    check_certificate(q, cert)
    out.emit("found " + _cert_text(cert, doc),
             {"status": "found", "certificate": io.certificate_to_dict(cert, doc)})
    return FOUND


def _oracle(args, out: _Out) -> int:
    from .oracle import exhaustive_search
    doc = io.load(args.instance)
    q = _query(doc, args)
    found = exhaustive_search(q, args.limit)
    out.emit(f"{len(found)} certificate(s)" + "".join("\n" + _cert_text(c, doc) for c in found),
             {"status": "found" if found else "not-found", "count": len(found),
              "certificates": [io.certificate_to_dict(c, doc) for c in found]})
    return FOUND if found else NOT_FOUND


def _need_kind(doc, *kinds) -> None:
    if doc.kind not in kinds:
        raise InputError(f"expected a {' or '.join(kinds)} instance, got {doc.kind}")


def _structure(args, out: _Out) -> int:
    from . import structure as st
    from .validate import (check_bridge, check_color_separating_vertex, check_matching_bridge,
                           check_multipartite_partition, check_separating_class)
    doc = io.load(args.instance)
    inst = doc.instance
    name = doc.label
    if args.theorem == "kotzig":
        _need_kind(doc, io.MATCHED)
        e = st.kotzig_bridge(inst.graph, inst)
        check_matching_bridge(inst.graph, inst.edges, e)
        out.emit(f"matching bridge: edge {e}", {"status": "found", "edge": e})
    elif args.theorem == "yeo":
        _need_kind(doc, io.EDGE_COLORED)
        u, assignment = st.yeo_separating_vertex(inst)
        check_color_separating_vertex(inst, u, assignment)
        comps = [{"component": sorted(name(v) for v in comp), "color": c} for comp, c in assignment.items()]
        comps.sort(key=lambda x: x["component"])
        out.emit(f"color-separating vertex: {name(u)}" + "".join(
            f"\n  {' '.join(x['component'])}: {x['color']}" for x in comps),
            {"status": "found", "vertex": name(u), "components": comps})
    elif args.theorem in ("ft", "pc-trail"):
        if args.theorem == "ft":
            _need_kind(doc, io.TRANSITIONS_KIND)
            e = st.ft_bridge(inst.graph, inst)
        else:
            _need_kind(doc, io.EDGE_COLORED)
            e = st.pc_trail_bridge(inst)
        check_bridge(inst.graph, e)
        out.emit(f"bridge: edge {e}", {"status": "found", "edge": e})
    elif args.theorem == "rainbow-class":
        _need_kind(doc, io.EDGE_COLORED)
        c, parts = st.rainbow_separating_class(inst)
        check_separating_class(inst, c, parts)
        named = sorted(sorted(name(v) for v in p) for p in parts)
        out.emit(f"separating class {c}: " + " | ".join(" ".join(p) for p in named),
                 {"status": "found", "color": c, "parts": named})
    else:
        _need_kind(doc, io.GRAPH)
        parts = st.complete_multipartite_partition(inst)
        if parts is None:
            out.emit("not complete multipartite", {"status": "not-found"})
            return NOT_FOUND
        check_multipartite_partition(inst, parts)
        named = sorted(sorted(name(v) for v in p) for p in parts)
        out.emit("parts: " + " | ".join(" ".join(p) for p in named), {"status": "found", "parts": named})
    return FOUND


def _classify(args, out: _Out) -> int:
    from .solvers import classify_color_classes
    doc = io.load(args.instance)
    _need_kind(doc, io.EDGE_COLORED)
    v = classify_color_classes(doc.instance)
    if v.tractable:
        parts = {str(c): sorted(sorted(doc.label(x) for x in p) for p in ps) for c, ps in v.partitions.items()}
        out.emit("tractable: every color class is complete multipartite",
                 {"verdict": "tractable", "partitions": parts})
    else:
        quad = [doc.label(x) for x in v.witness]
        out.emit(f"hard: class {v.hard_class} induces {v.witness_kind} on {' '.join(quad)}",
                 {"verdict": "hard", "class": v.hard_class, "witness": quad, "pattern": v.witness_kind})
    return FOUND


def _reduce(args, out: _Out) -> int:
    from . import reductions as red
    doc = io.load(args.instance)
    inst = doc.instance
    r = args.reduction
    ends = None
    if args.source is not None and args.target is not None:
        ends = (doc.vertex(args.source), doc.vertex(args.target))
    if r in ("local2-terminal", "pc-path-gadget", "pc-path-circuit") and ends is None:
        raise InputError(f"{r} needs --from and --to")
    art = None
    if r in ("ec-line", "pm-line"):
        _need_kind(doc, io.TRANSITIONS_KIND)
        art = (red.ec_line_graph if r == "ec-line" else red.pm_line_graph)(inst.graph, inst)
    elif r in ("local2-matched", "local2-terminal"):
        _need_kind(doc, io.LOCALLY2)
        art = red.to_matched_graph(inst) if r == "local2-matched" else red.terminal_matched_graph(inst, *ends)
    elif r == "matched-local2":
        _need_kind(doc, io.MATCHED)
        target = red.from_matched_graph(inst)
    elif r == "digraph-local2":
        _need_kind(doc, io.DIGRAPH)
        target = red.digraph_to_local2(inst)
    elif r in ("star", "pc-gadget", "pc-path-gadget", "gadget-replace"):
        _need_kind(doc, io.EDGE_COLORED)
        if r == "star":
            art = red.rainbow_star_reduction(inst)
        elif r == "pc-gadget":
            art = red.pc_gadget_graph(inst)
        elif r == "pc-path-gadget":
            art = red.pc_path_gadget_graph(inst, *ends)
        else:
            if not args.gamma or not args.glue:
                raise InputError("gadget-replace needs --gamma and --glue")
            gdoc = io.load(args.gamma)
            _need_kind(gdoc, io.GRAPH)
            w = tuple(gdoc.vertex(x) for x in args.glue.split(","))
            art = red.replace_color_classes_with_gadget(inst, gdoc.instance, w)
    else:
        _need_kind(doc, io.ARC_COLORED)
        if r == "arc-matched":
            art = red.arc_colored_to_matched_digraph(inst)
        else:
            art = red.pc_path_to_pc_circuit(inst, *ends, trusted=args.trusted, budget=args.budget)
    if art is not None:
        target = art.target
        vmap = {str(v): (None if o is None else doc.label(o)) for v, o in art.vertex_origin.items()}
        emap = art.edge_origin
    else:
        vmap = {str(v): doc.label(v) for v in io.structure_of(target).vertices} if r == "digraph-local2" else {}
        emap = {}
    tdoc = io.to_dict(target)
    s = io.structure_of(target)
    ids = s.arcs if tdoc["kind"] in io.DIRECTED else s.edges
    edge_origin = {str(i): emap.get(e) for i, e in enumerate(ids)} if emap else {}
    data = {"reduction": r, "target": tdoc, "vertex_origin": vmap, "edge_origin": edge_origin}
    text = json.dumps(data, sort_keys=True, indent=2)
    out.emit(text, data)
    return FOUND


def _generate(family: str, size: int, rng: random.Random):
    if family == "graph":
        return gen.random_graph(rng, size)
    if family == "edge-colored":
        return gen.random_edge_colored(rng, size)
    if family == "transitions":
        return gen.random_transitions(rng, gen.random_graph(rng, size))
    if family == "locally2":
        return gen.random_local2(rng, size, 2 * size)
    if family == "matched":
        return gen.random_matched_graph(rng, max(1, size // 2), size)
    if family == "digraph":
        return gen.random_digraph(rng, size, 2 * size)
    if family == "arc-colored-digraph":
        return gen.random_arc_colored(rng, size, 2 * size)
    if family == "matched-digraph":
        return gen.random_matched_digraph(rng, max(1, size // 2), size)
    if family == "unique-pm":
        return gen.unique_pm_graph(rng, max(1, size // 2))
    if family == "pc-acyclic":
        return gen.pc_acyclic_graph(rng, size)
    if family == "ft":
        return gen.ft_instance(rng, max(2, size))[1]
    if family == "pc-trail-bridge":
        return gen.pc_trail_bridge_instance(rng, max(1, size // 3))
    if family == "rainbow-acyclic":
        return gen.rainbow_acyclic_decomposition(rng, max(1, size // 2))
    if family == "trail-bench":
        return gen.trail_bench_instance(rng, size)[1]
    return gen.directed_bench_instance(rng, size)[0]


def _gen(args, out: _Out) -> int:
    rng = random.Random(args.seed)
    docs = [io.dumps(_generate(args.family, args.size, rng)) for _ in range(args.count)]
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for i, text in enumerate(docs):
            with open(os.path.join(args.out, f"{args.family}-{args.seed}-{i}.json"), "w", encoding="utf-8") as fh:
                fh.write(text)
        out.emit(f"wrote {len(docs)} instance(s) to {args.out}", {"written": len(docs), "dir": args.out})
    elif len(docs) == 1:
        out.stream.write(docs[0])
    else:
        for text in docs:
            out.stream.write(json.dumps(json.loads(text), sort_keys=True) + "\n")
    return FOUND


def bench_times(family: str, exponents, repeats: int = 5, seed: int = 0,
                min_sample: float = 0.02) -> list[tuple[int, int, float]]:
    """``(exponent, measured size, median seconds per solve)`` per exponent.

    Size is the number of allowed transitions for the trail family and the
    number of arcs for the directed family.  All instances are built and
    solved once untimed first.  The ``repeats`` rounds then visit every size
    in turn, so slow drift of the machine hits all sizes alike; within a
    round a size is solved in a loop lasting at least ``min_sample`` seconds
    and the per-solve mean is recorded.  The collector is paused while
    timing.
    """
    from .solvers import compatible_trail, pc_directed_trail
    cases = []
    for k in exponents:
        rng = random.Random(seed + k)
        if family == "trail":
            g, t, s, u = gen.trail_bench_instance(rng, 2 ** k)
            cases.append((k, t.size(), lambda g=g, t=t, s=s, u=u: compatible_trail(g, t, s, u)))
        else:
            d, s, u = gen.directed_bench_instance(rng, 2 ** k)
            cases.append((k, d.digraph.num_arcs(), lambda d=d, s=s, u=u: pc_directed_trail(d, s, u)))
    samples: dict[int, list[float]] = {k: [] for k, _, _ in cases}
    loops = {}
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        for k, _, run in cases:
            t0 = time.perf_counter()
            run()
            loops[k] = max(1, int(min_sample / max(time.perf_counter() - t0, 1e-9)) + 1)
            gc.collect()
        for _ in range(repeats):
            for k, _, run in cases:
                n = loops[k]
                t0 = time.perf_counter()
                for _ in range(n):
                    run()
                samples[k].append((time.perf_counter() - t0) / n)
                gc.collect()
    finally:
        if was_enabled:
            gc.enable()
    return [(k, size, statistics.median(samples[k])) for k, size, _ in cases]


def _bench(args, out: _Out) -> int:
    rows = bench_times(args.family, range(args.min_exp, args.max_exp + 1), args.repeats, args.seed)
    lines = [f"{'exp':>4} {'size':>9} {'median_s':>10} {'ratio':>6}"]
    data = []
    prev = None
    for k, size, med in rows:
        ratio = None if prev is None else med / prev
        lines.append(f"{k:>4} {size:>9} {med:>10.4f} {'' if ratio is None else f'{ratio:.2f}':>6}")
        data.append({"exp": k, "size": size, "median": med, "ratio": ratio})
        prev = med
    out.emit("\n".join(lines), {"family": args.family, "rows": data})
    return FOUND


def _add_query_args(p) -> None:
    p.add_argument("instance")
    p.add_argument("--kind", required=True, choices=QUERY_KINDS)
    p.add_argument("--constraint", required=True, choices=sorted(CONSTRAINTS))
    p.add_argument("--from", dest="source")
    p.add_argument("--to", dest="target")


def _add_common(p, defaults: bool) -> None:
    # accepted before or after the subcommand; subcommand copies must not clobber earlier values
    kw = (lambda v: {"default": v}) if defaults else (lambda v: {"default": argparse.SUPPRESS})
    p.add_argument("--format", choices=("text", "machine"), **kw("text"))
    p.add_argument("--budget", type=int, help="node limit for budgeted searches", **kw(10**6))
    p.add_argument("--seed", type=int, **kw(0))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="conpath", description="Constrained paths, trails and cycles on graphs.")
    _add_common(parser, True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="answer a query")
    _add_query_args(p)
    p.add_argument("--required-edge", type=int, help="edge position the answer must use")
    p.add_argument("--via", help="vertex label the path must visit")
    p.add_argument("--validate-only", action="store_true", help="check a certificate instead of solving")
    p.add_argument("--certificate", help="certificate file for --validate-only (default: stdin)")

    p = sub.add_parser("oracle", help="enumerate every certificate by brute force")
    _add_query_args(p)
    p.add_argument("--limit", type=int, default=None, help="override the instance-size guard")

    p = sub.add_parser("structure", help="extract a structure guaranteed by acyclicity")
    p.add_argument("instance")
    p.add_argument("--theorem", required=True, choices=THEOREMS)

    p = sub.add_parser("classify", help="classify the color classes of an edge-colored graph")
    p.add_argument("instance")

    p = sub.add_parser("reduce", help="apply a reduction and print the target with its back-maps")
    p.add_argument("instance")
    p.add_argument("--reduction", required=True, choices=REDUCTIONS)
    p.add_argument("--from", dest="source")
    p.add_argument("--to", dest="target")
    p.add_argument("--gamma", help="gadget graph for gadget-replace")
    p.add_argument("--glue", help="four comma-separated gadget vertex labels for gadget-replace")
    p.add_argument("--trusted", action="store_true", help="skip the circuit-free check of pc-path-circuit")

    p = sub.add_parser("gen", help="generate seeded random instances")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--size", type=int, default=6)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out", help="directory for the generated files")

    p = sub.add_parser("bench", help="time the linear-time solvers on doubling instance sizes")
    p.add_argument("--family", choices=("trail", "directed-trail"), default="trail")
    p.add_argument("--min-exp", type=int, default=12)
    p.add_argument("--max-exp", type=int, default=18)
    p.add_argument("--repeats", type=int, default=5)
    for p in sub.choices.values():
        _add_common(p, False)
    return parser


HANDLERS = {"solve": _solve, "oracle": _oracle, "structure": _structure, "classify": _classify,
            "reduce": _reduce, "gen": _gen, "bench": _bench}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except InputError as exc:
        stderr.write(f"error: {exc}\n")
        return INPUT
    except SystemExit as exc:  # --help
        return FOUND if not exc.code else INPUT
    out = _Out(args.format, stdout)
    try:
        return HANDLERS[args.command](args, out)
    except (PreconditionViolation, GuardExceeded) as exc:
        stderr.write(f"precondition violated: {exc}\n")
        return PRECONDITION
    except BudgetExhausted as exc:
        stderr.write(f"{exc}\n")
        return BUDGET
    except (InputError, GraphError, OSError) as exc:
        stderr.write(f"input error: {exc}\n")
        return INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
