"""Acceptance suite: one test per criterion.

Each test records a single PASS/FAIL line (with counts and elapsed time)
that the conftest prints under "acceptance criteria" at the end of the run.
Everything is seeded; nothing here depends on wall-clock except criterion 7.
"""

from __future__ import annotations

import random
import time
from contextlib import contextmanager
from itertools import combinations

import pytest

from conpath.cli import bench_times
from conpath.errors import BudgetExhausted, PreconditionViolation
from conpath.generators import (ft_instance, pc_acyclic_graph, pc_trail_bridge_instance,
                                random_arc_colored, random_digraph, random_edge_colored, random_graph,
                                random_local2, random_matched_graph, random_transitions,
                                rainbow_acyclic_decomposition, unique_pm_graph)
from conpath.graph import Graph
from conpath.instances import EdgeColoredGraph
from conpath.kingdom import kingdom_order
from conpath.matching import Matching, augmenting_path_through_edge
from conpath.multipartite import K2_K2, L4, P4
from conpath.oracle import (all_bridge_deletion_orderings, all_perfect_matchings, oracle_exists,
                            precedence_from_orderings)
from conpath.query import (ALTERNATING, CIRCUIT, CLOSED_TRAIL, CYCLE, DIRECTED_TRAIL, LOCAL2, PATH,
                           PROPERLY_COLORED, RAINBOW, TRAIL, TRANSITIONS, Query)
from conpath.reductions import class_partitions, from_matched_graph, to_matched_graph
from conpath.solvers import (classify_color_classes, compatible_closed_trail, compatible_trail,
                             local2_search, pc_directed_trail, pc_search, rainbow_search)
from conpath.structure import (ft_bridge, kotzig_bridge, pc_trail_bridge, rainbow_separating_class,
                               yeo_separating_vertex)
from conpath.validate import (check_bridge, check_certificate, check_color_separating_vertex,
                              check_constraint, check_matching_bridge, check_separating_class,
                              check_shape)

from . import lifting, sweep
from .helpers import ACCEPTANCE_REPORT, exhaustive_through

LADDER = Graph(range(6), [(0, 1), (2, 3), (1, 4), (4, 5), (5, 2)])


@contextmanager
def criterion(number: int, title: str):
    stats: dict = {}
    t0 = time.perf_counter()
    ok = False
    try:
        yield stats
        ok = True
    finally:
        detail = ", ".join(f"{k}={v}" for k, v in stats.items())
        line = (f"criterion {number} [{title}]: {'PASS' if ok else 'FAIL'}"
                f" ({detail}; {time.perf_counter() - t0:.1f}s)")
        print(line)
        ACCEPTANCE_REPORT.append(line)


def _agree(q: Query, cert, limit=None) -> bool:
    """Solver answer equals the oracle's; a returned certificate must validate."""
    exists = oracle_exists(q, limit)
    assert (cert is not None) == exists, (q.kind, q.constraint, q.endpoints, q.instance)
    if cert is not None:
        check_certificate(q, cert)
    return exists


# -- criterion 1: oracle equivalence ----------------------------------------

# Caps on the exhaustive sweep; each family is complete up to its cap and
# sampled (seeded) beyond it.  Pinned so the sweep stays inside its budget.
SWEEP_VERTICES = 5
PC_THREE_COLOR_EDGES = 6          # 2-colorings: every graph; 3-colorings: up to this many edges
RAINBOW_ALL_PARTITIONS_EDGES = 6  # every color partition up to here, at most 3 classes beyond
RAINBOW_BLOCKS_BEYOND = 3
TRANSITION_PAIRS_CAP = 10         # candidate transition pairs enumerated exhaustively
SIDE_SLOTS_CAP = 10               # (edge, endpoint) slots enumerated exhaustively
SAMPLES_BEYOND_CAP = 256
ARC_SWEEP = ((4, 12), (5, 5))     # (vertices, max arcs) for the 2-colored digraph sweep
RANDOM_PER_SOLVER = 1000


def _sweep_pc(counts):
    for g in sweep.graphs(SWEEP_VERTICES):
        m = g.num_edges()
        cols = list(sweep.colorings(m, 2))
        if m <= PC_THREE_COLOR_EDGES:
            cols += [c for c in sweep.colorings(m, 3) if 2 in c]
        for col in cols:
            ecg = sweep.edge_colored(g, col)
            for kind in (CYCLE, CLOSED_TRAIL):
                _agree(Query(ecg, kind, PROPERLY_COLORED), pc_search(ecg, kind))
                counts[f"pc-{kind}"] += 1
            for s, u in combinations(g.vertices, 2):
                for kind in (PATH, TRAIL):
                    _agree(Query(ecg, kind, PROPERLY_COLORED, (s, u)), pc_search(ecg, kind, (s, u)))
                    counts[f"pc-{kind}"] += 1


def _sweep_rainbow(counts):
    for g in sweep.graphs(SWEEP_VERTICES):
        m = g.num_edges()
        blocks = None if m <= RAINBOW_ALL_PARTITIONS_EDGES else RAINBOW_BLOCKS_BEYOND
        for col in sweep.partitions(m, blocks):
            ecg = sweep.edge_colored(g, col)
            _agree(Query(ecg, CYCLE, RAINBOW), rainbow_search(ecg, CYCLE))
            counts["rainbow-cycle"] += 1
            for s, u in combinations(g.vertices, 2):
                _agree(Query(ecg, PATH, RAINBOW, (s, u)), rainbow_search(ecg, PATH, (s, u)))
                counts["rainbow-path"] += 1


def _sweep_transitions(counts):
    rng = random.Random(101)
    for g in sweep.graphs(SWEEP_VERTICES):
        for t in sweep.transition_systems(g, TRANSITION_PAIRS_CAP, SAMPLES_BEYOND_CAP, rng):
            _agree(Query(t, CLOSED_TRAIL, TRANSITIONS), compatible_closed_trail(g, t))
            counts["compatible-closed-trail"] += 1
            for s, u in combinations(g.vertices, 2):
                _agree(Query(t, TRAIL, TRANSITIONS, (s, u)), compatible_trail(g, t, s, u))
                counts["compatible-trail"] += 1


def _sweep_local2(counts):
    rng = random.Random(102)
    for g in sweep.graphs(SWEEP_VERTICES):
        for l2 in sweep.side_assignments(g, SIDE_SLOTS_CAP, SAMPLES_BEYOND_CAP, rng):
            _agree(Query(l2, CYCLE, LOCAL2), local2_search(l2, CYCLE))
            counts["local2-cycle"] += 1
            for s, u in combinations(g.vertices, 2):
                _agree(Query(l2, PATH, LOCAL2, (s, u)), local2_search(l2, PATH, (s, u)))
                counts["local2-path"] += 1


def _sweep_directed(counts):
    for n, arcs in ARC_SWEEP:
        for d in sweep.arc_colored_sized(n, arcs):
            for s in d.digraph.vertices:
                for u in d.digraph.vertices:
                    if s != u:
                        _agree(Query(d, DIRECTED_TRAIL, PROPERLY_COLORED, (s, u)), pc_directed_trail(d, s, u))
                        counts["pc-directed-trail"] += 1


def _random_case(solver: str, rng: random.Random):
    """A random query on at most 8 vertices together with the solver call answering it."""
    n = rng.randint(2, 8)
    s, u = rng.sample(range(n), 2)
    if solver.startswith("compatible"):
        g = random_graph(rng, n, rng.randint(1, 10))
        t = random_transitions(rng, g, rng.choice((0.3, 0.5, 0.8)))
        if solver == "compatible-trail":
            return Query(t, TRAIL, TRANSITIONS, (s, u)), lambda: compatible_trail(g, t, s, u)
        return Query(t, CLOSED_TRAIL, TRANSITIONS), lambda: compatible_closed_trail(g, t)
    if solver.startswith("pc-directed"):
        d = random_arc_colored(rng, n, rng.randint(1, 12), colors=rng.randint(1, 3))
        return Query(d, DIRECTED_TRAIL, PROPERLY_COLORED, (s, u)), lambda: pc_directed_trail(d, s, u)
    if solver.startswith("pc-"):
        kind = solver[3:]
        cap = 10 if kind in (TRAIL, CLOSED_TRAIL) else 14
        ecg = random_edge_colored(rng, n, rng.randint(1, cap), colors=rng.randint(2, 3))
        ends = (s, u) if kind in (PATH, TRAIL) else None
        return Query(ecg, kind, PROPERLY_COLORED, ends), lambda: pc_search(ecg, kind, ends)
    if solver.startswith("local2-"):
        kind = solver[7:]
        l2 = random_local2(rng, n, rng.randint(1, 12))
        ends = (s, u) if kind == PATH else None
        return Query(l2, kind, LOCAL2, ends), lambda: local2_search(l2, kind, ends)
    kind = solver[8:]
    ecg = random_edge_colored(rng, n, rng.randint(1, 14), colors=rng.randint(2, 7))
    ends = (s, u) if kind == PATH else None
    return Query(ecg, kind, RAINBOW, ends), lambda: rainbow_search(ecg, kind, ends)


SOLVERS = ("compatible-trail", "compatible-closed-trail", "pc-path", "pc-trail", "pc-cycle",
           "pc-closed-trail", "local2-path", "local2-cycle", "rainbow-path", "rainbow-cycle",
           "pc-directed-trail")


def test_criterion_1_oracle_equivalence():
    from collections import Counter
    with criterion(1, "oracle equivalence") as stats:
        sweep_counts: Counter = Counter()
        for family in (_sweep_pc, _sweep_rainbow, _sweep_transitions, _sweep_local2, _sweep_directed):
            family(sweep_counts)
        assert set(sweep_counts) == set(SOLVERS)
        stats["sweep queries"] = sum(sweep_counts.values())
        stats["min per solver"] = min(sweep_counts.values())
        yes = 0
        for i, solver in enumerate(SOLVERS):
            rng = random.Random(1000 * i + 1)
            for _ in range(RANDOM_PER_SOLVER):
                q, call = _random_case(solver, rng)
                yes += _agree(q, call())
        stats["random queries"] = RANDOM_PER_SOLVER * len(SOLVERS)
        stats["random yes"] = yes
        assert 0 < yes < RANDOM_PER_SOLVER * len(SOLVERS)


# -- criterion 2: kingdom order ----------------------------------------------

def test_criterion_2_kingdom_order():
    with criterion(2, "kingdom order equals ordering precedence") as stats:
        related = 0
        for i in range(300):
            rng = random.Random(i)
            m = unique_pm_graph(rng, 1 + i % 6)
            g = m.graph
            assert g.num_vertices() <= 12
            want = precedence_from_orderings(all_bridge_deletion_orderings(g, m.edges))
            got = set(kingdom_order(g, m).precedes)
            assert got == want, (g.edge_map(), sorted(m.edges))
            related += bool(got)
        stats["instances"] = 300
        stats["with nonempty order"] = related
        assert related > 100


# -- criterion 3: structure from acyclicity ---------------------------------

def _kotzig(rng):
    m = unique_pm_graph(rng, rng.randint(1, 6))
    assert all_perfect_matchings(m.graph) == [m.edges]
    check_matching_bridge(m.graph, m.edges, kotzig_bridge(m.graph, m))
    return m.graph


def _yeo(rng):
    ecg = pc_acyclic_graph(rng, rng.randint(1, 8))
    assert not oracle_exists(Query(ecg, CYCLE, PROPERLY_COLORED))
    u, assignment = yeo_separating_vertex(ecg)
    check_color_separating_vertex(ecg, u, assignment)
    return ecg.graph


def _ft(rng):
    g, t = ft_instance(rng, rng.randint(2, 7))
    assert not oracle_exists(Query(t, CLOSED_TRAIL, TRANSITIONS), limit=g.num_edges())
    check_bridge(g, ft_bridge(g, t))
    return g


def _pc_trail(rng):
    ecg = pc_trail_bridge_instance(rng, rng.randint(2, 3))
    g = ecg.graph
    assert all(ecg.chromatic_degree(v) >= 2 for v in g.vertices if g.degree(v))
    assert not oracle_exists(Query(ecg, CLOSED_TRAIL, PROPERLY_COLORED), limit=g.num_edges())
    check_bridge(g, pc_trail_bridge(ecg))
    return g


def _rainbow_class(rng):
    ecg = rainbow_acyclic_decomposition(rng, rng.randint(1, 4))
    class_partitions(ecg)
    assert not oracle_exists(Query(ecg, CYCLE, RAINBOW), limit=ecg.graph.num_vertices())
    c, parts = rainbow_separating_class(ecg)
    check_separating_class(ecg, c, parts)
    return ecg.graph


@pytest.mark.parametrize("name, extract", [
    ("kotzig", _kotzig), ("yeo", _yeo), ("ft", _ft), ("pc-trail", _pc_trail),
    ("rainbow-class", _rainbow_class),
])
def test_criterion_3_structure(name, extract):
    with criterion(3, f"structure from acyclicity: {name}") as stats:
        graphs = [extract(random.Random(i)) for i in range(500)]
        stats["instances"] = len(graphs)
        stats["max vertices"] = max(g.num_vertices() for g in graphs)
        stats["max edges"] = max(g.num_edges() for g in graphs)


# -- criterion 4: reduction soundness ----------------------------------------

def _pair(rng, n):
    return tuple(rng.sample(range(n), 2))


def _ts(rng, max_n, max_m):
    g = random_graph(rng, rng.randint(2, max_n), rng.randint(0, max_m))
    return random_transitions(rng, g, rng.choice((0.3, 0.6, 0.9)))


def _red_terminal(rng):
    n = rng.randint(2, 3)
    return lifting.check_terminal_matched_graph(random_local2(rng, n, rng.randint(0, 6)), *_pair(rng, n))


def _red_pc_path_gadget(rng):
    n = rng.randint(2, 6)
    ecg = random_edge_colored(rng, n, rng.randint(0, 8), colors=rng.randint(1, 3))
    return lifting.check_pc_path_gadget_graph(ecg, *_pair(rng, n))


def _circuit_free(rng):
    while True:
        d = random_arc_colored(rng, rng.randint(2, 6), rng.randint(1, 9), colors=rng.choice((1, 2, 3)))
        if not oracle_exists(Query(d, CIRCUIT, PROPERLY_COLORED)):
            return d


def _red_pc_path_circuit(rng):
    d = _circuit_free(rng)
    return lifting.check_pc_path_to_pc_circuit(d, *_pair(rng, d.digraph.num_vertices()))


REDUCTIONS = {
    "ec-line": lambda rng: lifting.check_ec_line_graph(_ts(rng, 5, 6)),
    "pm-line": lambda rng: lifting.check_pm_line_graph(_ts(rng, 5, 5)),
    "local2-matched": lambda rng: lifting.check_to_matched_graph(
        random_local2(rng, rng.randint(1, 4), rng.randint(0, 6))),
    "local2-terminal": _red_terminal,
    "matched-local2": lambda rng: lifting.check_from_matched_graph(
        random_matched_graph(rng, rng.randint(1, 3), rng.randint(0, 8))),
    "digraph-local2": lambda rng: lifting.check_digraph_to_local2(
        random_digraph(rng, rng.randint(2, 5), rng.randint(0, 8))),
    "star": lambda rng: lifting.check_rainbow_star(lifting.multipartite_instance(rng, rng.randint(2, 6))),
    "pc-gadget": lambda rng: lifting.check_pc_gadget_graph(
        random_edge_colored(rng, rng.randint(1, 5), rng.randint(0, 7), colors=rng.randint(1, 3))),
    "pc-path-gadget": _red_pc_path_gadget,
    "gadget-replace": lambda rng: lifting.check_gadget_replacement(
        lifting.matching_class_instance(rng, rng.randint(2, 5)), LADDER, (0, 1, 2, 3)),
    "arc-matched": lambda rng: lifting.check_arc_colored_to_matched_digraph(
        random_arc_colored(rng, rng.randint(1, 6), rng.randint(0, 9), colors=rng.randint(1, 2))),
    "pc-path-circuit": _red_pc_path_circuit,
}


@pytest.mark.parametrize("name", sorted(REDUCTIONS))
def test_criterion_4_reduction_lifting(name):
    with criterion(4, f"reduction soundness: {name}") as stats:
        compared = sum(REDUCTIONS[name](random.Random(i)) for i in range(300))
        stats["instances"] = 300
        stats["certificates"] = compared
        assert compared > 0


def test_criterion_4_bijection_round_trip():
    with criterion(4, "local2 <-> matched bijection, exhaustive") as stats:
        matched = 0
        for k in (1, 2, 3):
            n = 2 * k
            pairs = [(2 * i, 2 * i + 1) for i in range(k)]
            others = [p for p in combinations(range(n), 2) if p not in pairs]
            for mask in range(1 << len(others)):
                chosen = [p for j, p in enumerate(others) if mask >> j & 1]
                g = Graph(range(n), pairs + chosen)
                lifting.check_from_matched_graph(Matching(g, range(k)))
                matched += 1
        local = 0
        for l2 in sweep.local2_multigraphs(3):
            back = from_matched_graph(to_matched_graph(l2).target)
            assert back.graph.vertices == l2.graph.vertices
            assert back.graph.edge_map() == l2.graph.edge_map() and back.sides == l2.sides
            local += 1
        stats["matched graphs"] = matched
        stats["locally 2-colored graphs"] = local


# -- criterion 5: dichotomy routing ------------------------------------------

# an induced four-vertex pattern is fixed by its edge count and degree sequence
SIGNATURES = {(2, (1, 1, 1, 1)): K2_K2, (3, (1, 1, 2, 2)): P4, (4, (1, 2, 2, 3)): L4}


def _pattern(pairs: set, quad) -> str | None:
    sub = [p for p in combinations(quad, 2) if frozenset(p) in pairs]
    degrees = tuple(sorted(sum(v in p for p in sub) for v in quad))
    return SIGNATURES.get((len(sub), degrees))


def _direct_verdict(ecg: EdgeColoredGraph) -> bool:
    """Tractable iff no class induces K2+K2, P4 or L4 on four of its vertices."""
    g = ecg.graph
    for cls in ecg.color_classes().values():
        pairs = {frozenset(g.ends(e)) for e in cls}
        verts = sorted({v for p in pairs for v in p})
        if any(_pattern(pairs, quad) for quad in combinations(verts, 4)):
            return False
    return True


def _classify_checked(ecg: EdgeColoredGraph) -> bool:
    verdict = classify_color_classes(ecg)
    assert verdict.tractable == _direct_verdict(ecg), ecg
    if not verdict.tractable:
        cls = ecg.color_classes()[verdict.hard_class]
        pairs = {frozenset(ecg.graph.ends(e)) for e in cls}
        assert _pattern(pairs, verdict.witness) == verdict.witness_kind
    return verdict.tractable


def test_criterion_5_dichotomy():
    with criterion(5, "dichotomy routing") as stats:
        # every class graph on at most six labelled vertices
        single = 0
        for n in range(1, 7):
            slots = list(combinations(range(n), 2))
            for mask in range(1 << len(slots)):
                g = Graph(range(n), [p for j, p in enumerate(slots) if mask >> j & 1])
                _classify_checked(EdgeColoredGraph(g, {e: 0 for e in g.edges}))
                single += 1
        # every coloring with at most three classes of every graph on at most five vertices
        colored = tractable = exact = 0
        for g in sweep.graphs(5):
            for col in sweep.partitions(g.num_edges(), 3):
                ecg = sweep.edge_colored(g, col)
                colored += 1
                if not _classify_checked(ecg):
                    continue
                tractable += 1
                # a budget of one node would trip any search; tractable queries must not search
                _agree(Query(ecg, CYCLE, RAINBOW), rainbow_search(ecg, CYCLE, budget=1))
                for s, u in combinations(g.vertices, 2):
                    _agree(Query(ecg, PATH, RAINBOW, (s, u)), rainbow_search(ecg, PATH, (s, u), budget=1))
                    exact += 1
        # random six-vertex colorings with more classes
        rng = random.Random(55)
        for _ in range(3000):
            ecg = random_edge_colored(rng, 6, colors=rng.randint(2, 8), p=rng.choice((0.3, 0.5, 0.8)))
            colored += 1
            if _classify_checked(ecg):
                tractable += 1
                s, u = _pair(rng, 6)
                try:
                    _agree(Query(ecg, PATH, RAINBOW, (s, u)), rainbow_search(ecg, PATH, (s, u), budget=1))
                except BudgetExhausted:
                    pytest.fail(f"tractable instance exhausted its budget: {ecg}")
                exact += 1
        stats["class graphs"] = single
        stats["colored graphs"] = colored
        stats["tractable"] = tractable
        stats["exact rainbow queries"] = exact


# -- criterion 6: hardness transformers --------------------------------------

def _yes_gadget(rng):
    ecg = lifting.matching_class_instance(rng, rng.randint(2, 6))
    lifting.check_gadget_replacement(ecg, LADDER, (0, 1, 2, 3))
    s, u = _pair(rng, ecg.graph.num_vertices())
    return oracle_exists(Query(ecg, PATH, RAINBOW, (s, u)))


def _yes_return(rng):
    d = _circuit_free(rng)
    s, u = _pair(rng, d.digraph.num_vertices())
    lifting.check_pc_path_to_pc_circuit(d, s, u)
    return oracle_exists(Query(d, "directed-path", PROPERLY_COLORED, (s, u)))


def _yes_arc(rng):
    d = random_arc_colored(rng, rng.randint(2, 6), rng.randint(1, 10), colors=2)
    lifting.check_arc_colored_to_matched_digraph(d)
    return oracle_exists(Query(d, CIRCUIT, PROPERLY_COLORED))


@pytest.mark.parametrize("name, run", [
    ("replace_color_classes_with_gadget", _yes_gadget),
    ("pc_path_to_pc_circuit", _yes_return),
    ("arc_colored_to_matched_digraph", _yes_arc),
])
def test_criterion_6_transformers(name, run):
    with criterion(6, f"hardness transformer: {name}") as stats:
        yes = sum(run(random.Random(10_000 + i)) for i in range(200))
        stats["instances"] = 200
        stats["yes"] = yes
        assert 0 < yes < 200


# -- criterion 7: empirical near-linearity -----------------------------------

@pytest.mark.slow
@pytest.mark.parametrize("family", ["trail", "directed-trail"])
def test_criterion_7_scaling(family):
    with criterion(7, f"near-linear scaling: {family}") as stats:
        rows = bench_times(family, range(12, 19), repeats=5)
        ratios = [b[2] / a[2] for a, b in zip(rows, rows[1:])]
        stats["sizes"] = "/".join(str(size) for _, size, _ in rows)
        stats["ratios"] = "/".join(f"{r:.2f}" for r in ratios)
        stats["max ratio"] = f"{max(ratios):.2f}"
        assert max(ratios) <= 3.0


# -- criterion 8: prescribed-edge augmenting paths ---------------------------

def _through_instance(rng):
    """Planted matching ``(2i, 2i+1)`` leaving the last two vertices exposed, plus random edges."""
    pairs = rng.randint(1, 4)
    n = 2 * pairs + 2
    planted = [(2 * i, 2 * i + 1) for i in range(pairs)]
    p = rng.choice((0.2, 0.3, 0.45))
    extra = [q for q in combinations(range(n), 2) if q not in planted and rng.random() < p]
    if rng.random() < 0.2:
        # sometimes leave more vertices exposed
        planted = planted[:-1]
    g = Graph(range(n), planted + extra)
    return g, Matching(g, range(len(planted)))


def test_criterion_8_through_edge():
    with criterion(8, "augmenting path through an edge") as stats:
        rng = random.Random(88)
        instances = found = queries = 0
        violations = {"not a matching edge": 0, "exposed count": 0, "alternating cycle": 0}
        while instances < 500 or min(violations.values()) < 50:
            g, m = _through_instance(rng)
            if not m.edges:
                continue
            exposed = len(m.exposed())
            cyclic = oracle_exists(Query(m, CYCLE, ALTERNATING), limit=g.num_vertices())
            if exposed == 2 and not cyclic:
                if instances >= 500:
                    continue
                for e in m.edges:
                    queries += 1
                    got = augmenting_path_through_edge(g, m, e)
                    assert (got is not None) == exhaustive_through(g, m, e)
                    if got is not None:
                        assert e in got.edges
                        check_shape(g, got, False)
                        check_constraint(m, got, ALTERNATING)
                        found += 1
                non_matching = [e for e in g.edges if e not in m.edges]
                if non_matching:
                    with pytest.raises(PreconditionViolation):
                        augmenting_path_through_edge(g, m, rng.choice(non_matching))
                    violations["not a matching edge"] += 1
                instances += 1
                continue
            key = "alternating cycle" if cyclic else "exposed count"
            with pytest.raises(PreconditionViolation):
                augmenting_path_through_edge(g, m, next(iter(m.edges)))
            violations[key] += 1
        stats["instances"] = instances
        stats["edge queries"] = queries
        stats["paths found"] = found
        stats.update(violations)
        assert 0 < found < queries
