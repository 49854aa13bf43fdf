"""Check every identity against brute force on single graphs or corpora."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Iterable, Iterator

from . import calculus as calc
from . import reductions as red
from . import splitting as spl
from .graph import (
    Graph,
    component_masks,
    corona,
    delete_edge,
    delete_vertices,
    make_splitting,
    mask_of,
    vertices_of,
)
from .matrices import kron_all
from .oracle import (
    Condition,
    OracleEvaluator,
    brute_force_conditioned,
    brute_force_puv,
)

EXHAUSTIVE_MAX_N = 5
RANDOM_SEED = 20240611
RANDOM_COUNT = 200
SINGLE_GRAPH_MAX_N = 12

IDENTITY_IDS = (
    "t:red",
    "p_w",
    "arbitrary_rec",
    "c:nbr",
    "c:nbr:2",
    "c:not",
    "e:wnot",
    "clearing",
    "path5",
    "irrelevant",
    "domination-covered",
    "corona",
    "articulation-Q",
    "articulation-Dinv",
    "one-conn",
    "split-Q",
    "split-Dinv",
    "edge-split",
    "u-to-d",
    "d-general",
    "d_in",
    "der-i",
    "reconstruct",
)


@dataclass
class Tally:
    passed: int = 0
    failed: int = 0
    first_failure: str | None = None


@dataclass
class Report:
    tallies: dict[str, Tally] = field(default_factory=lambda: {i: Tally() for i in IDENTITY_IDS})
    graphs: int = 0

    def record(self, ident: str, ok: bool, context: Callable[[], str]) -> None:
        t = self.tallies[ident]
        if ok:
            t.passed += 1
        else:
            t.failed += 1
            if t.first_failure is None:
                t.first_failure = context()

    @property
    def ok(self) -> bool:
        return all(t.failed == 0 for t in self.tallies.values())

    def failing(self) -> list[str]:
        return [i for i, t in self.tallies.items() if t.failed]

    def lines(self) -> list[str]:
        out = []
        for ident, t in self.tallies.items():
            status = "PASS" if t.failed == 0 else "FAIL"
            line = f"{status} {ident:<20} passed={t.passed} failed={t.failed}"
            if t.first_failure:
                line += f"  first: {t.first_failure}"
            out.append(line)
        return out


# -- corpora -----------------------------------------------------------------


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if code >> i & 1])


def exhaustive_corpus(max_n: int = EXHAUSTIVE_MAX_N) -> Iterator[Graph]:
    for n in range(max_n + 1):
        yield from all_labeled_graphs(n)


def random_corpus(
    count: int = RANDOM_COUNT, n_min: int = 6, n_max: int = 9, seed: int = RANDOM_SEED
) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        density = rng.uniform(0.15, 0.85)
        edges = [p for p in combinations(range(n), 2) if rng.random() < density]
        out.append(Graph.from_edges(n, edges))
    return out


def corpus(max_n: int) -> list[Graph]:
    """Every labeled graph up to min(max_n, 5) vertices, plus the fixed random
    sample on 6..max_n vertices when max_n > 5."""
    graphs = list(exhaustive_corpus(min(max_n, EXHAUSTIVE_MAX_N)))
    if max_n > EXHAUSTIVE_MAX_N:
        graphs += random_corpus(n_max=max_n)
    return graphs


# -- enumerating applicable instances -------------------------------------


def splittings(g: Graph, max_x: int) -> Iterator:
    """Every splitting with |X| <= max_x: each X, each way to group the
    components of G - X into side 1, and each placement of edges inside X."""
    for k in range(1, max_x + 1):
        for xs in combinations(g.vertices, k):
            xmask = mask_of(xs)
            if xmask == g.vertex_mask:
                continue
            inner = [e for e in g.edges() if xmask >> e[0] & 1 and xmask >> e[1] & 1]
            rest = delete_vertices(g, xs)
            comps = component_masks(rest)
            for pick in range(1 << len(comps)):
                side1 = 0
                for i, c in enumerate(comps):
                    if pick >> i & 1:
                        side1 |= c
                for place in range(1 << len(inner)):
                    assign = {e: 2 if place >> i & 1 else 1 for i, e in enumerate(inner)}
                    yield make_splitting(g, xs, side1=vertices_of(side1), side_assignment=assign)


def path5_instances(g: Graph) -> Iterator[list[int]]:
    for w in g.vertices:
        if g.degree(w) != 2:
            continue
        for v, y in permutations(g.neighbors(w), 2):
            if g.degree(v) != 2 or g.degree(y) != 2:
                continue
            (u,) = [a for a in g.neighbors(v) if a != w]
            (z,) = [a for a in g.neighbors(y) if a != w]
            if len({u, v, w, y, z}) == 5:
                yield [u, v, w, y, z]


def _desc(g: Graph, extra: str = "") -> str:
    return f"n={g.n} edges={g.edges()}" + (f" {extra}" if extra else "")


# -- the suite -----------------------------------------------------------------


def check_graph(g: Graph, report: Report, ev: OracleEvaluator, skip: Iterable[str] = ()) -> None:
    skip = set(skip)
    want = ev.D(g)
    rec = report.record

    def on(ident: str) -> bool:
        return ident not in skip

    verts = g.vertices
    edges = g.edges()

    if on("t:red"):
        for u in verts:
            rec("t:red", red.vertex_reduction(g, u, ev) == want, lambda: _desc(g, f"u={u}"))
            out, inside = red.split_in_out(g, u, ev)
            ok = out == brute_force_conditioned(g, Condition.excludes(u)) and inside == (
                brute_force_conditioned(g, Condition.contains(u))
            )
            rec("t:red", ok, lambda: _desc(g, f"in/out u={u}"))
    if on("p_w"):
        for a, b in edges:
            for u, v in ((a, b), (b, a)):
                ok = red.puv_via_lemma(g, (u, v), ev) == brute_force_puv(g, u, v)
                rec("p_w", ok, lambda: _desc(g, f"u={u} v={v}"))
    if on("arbitrary_rec"):
        for e in edges:
            rec("arbitrary_rec", red.edge_recurrence(g, e, ev) == want, lambda: _desc(g, f"e={e}"))
    for u in verts:
        for v in verts:
            if u == v:
                continue
            if not g.closed_mask(v) & ~g.closed_mask(u):
                if on("c:nbr"):
                    ok = red.nbr_containment_reduction(g, u, v, ev, 1) == want
                    rec("c:nbr", ok, lambda: _desc(g, f"u={u} v={v}"))
                if on("c:nbr:2"):
                    ok = red.nbr_containment_reduction(g, u, v, ev, 2) == want
                    rec("c:nbr:2", ok, lambda: _desc(g, f"u={u} v={v}"))
            if on("c:not") and g.adjacency_mask(u) == g.adjacency_mask(v):
                rec("c:not", red.twin_reduction(g, u, v, ev) == want, lambda: _desc(g, f"u={u} w={v}"))
            if on("e:wnot") and not g.adjacency_mask(v) & ~g.adjacency_mask(u):
                ok = red.subset_nbr_reduction(g, u, v, ev) == want
                rec("e:wnot", ok, lambda: _desc(g, f"u={u} w={v}"))
    if on("clearing"):
        for u in verts:
            ok = red.triangle_clear_reduction(g, u, ev) == want
            rec("clearing", ok, lambda: _desc(g, f"u={u}"))
    if on("path5"):
        for path in path5_instances(g):
            rec("path5", red.path5_reduction(g, path, ev) == want, lambda: _desc(g, f"path={path}"))
    if on("irrelevant"):
        for e in edges:
            same = ev.D(delete_edge(g, e)) == want
            rec("irrelevant", red.is_irrelevant_edge(g, e) == same, lambda: _desc(g, f"e={e}"))
    if on("domination-covered"):
        for v in verts:
            ok = red.is_domination_covered(g, v) == red.is_domination_covered_by_definition(g, v, ev)
            rec("domination-covered", ok, lambda: _desc(g, f"v={v}"))
    if on("corona") and g.n:
        k1 = Graph.from_edges(1)
        for a, b in ((g, k1), (k1, g)):
            if a.n * (1 + b.n) <= 12:
                ok = red.corona_formula(a, b, ev) == ev.D(corona(a, b))
                rec("corona", ok, lambda: _desc(g, "corona"))
    if g.n >= 2:
        for s in splittings(g, 2):
            label = lambda: _desc(g, f"X={s.x_set} side1={s.g1.vertices}")
            if len(s.x_set) == 1:
                if on("articulation-Q"):
                    rec("articulation-Q", spl.articulation_split_Q(s, ev) == want, label)
                if on("articulation-Dinv"):
                    rec("articulation-Dinv", spl.articulation_split_Dinv(s, ev) == want, label)
                if on("one-conn"):
                    rec("one-conn", spl.one_conn_recurrence(s, ev) == want, label)
            if on("split-Q"):
                rec("split-Q", spl.split_general_Q(s) == want, label)
            if on("split-Dinv"):
                rec("split-Dinv", spl.split_general_Dinv(s, ev) == want, label)
    if on("edge-split"):
        for e in edges:
            rec("edge-split", spl.edge_split_formula(g, e, ev) == want, lambda: _desc(g, f"e={e}"))
    if on("u-to-d"):
        for v in verts:
            ok = spl.u_to_d(spl.u_vector(g, v, ev)) == spl.d_vector(g, v, ev)
            rec("u-to-d", ok, lambda: _desc(g, f"v={v}"))
    if on("d-general"):
        for k in (1, 2):
            if g.n < k:
                continue
            pq = kron_all([spl._P @ spl._Q] * k)
            for xs in combinations(verts, k):
                u = spl.state_vector(g, xs).entries
                d = spl.d_vector_general(g, xs, ev).entries
                rec("d-general", pq.apply(list(u)) == list(d), lambda: _desc(g, f"X={xs}"))
    if on("d_in"):
        for u in verts:
            ok = calc.d_in_via_lemma(g, u, ev) == brute_force_conditioned(g, Condition.contains(u))
            rec("d_in", ok, lambda: _desc(g, f"u={u}"))
    if on("der-i"):
        for i in range(g.n):
            rec("der-i", calc.check_derivative_identity(g, i, ev), lambda: _desc(g, f"i={i}"))
    if on("reconstruct") and g.n:
        rec("reconstruct", calc.reconstruct_from_A(g, ev) == want, lambda: _desc(g))
    report.graphs += 1


def run_suite(graphs: Iterable[Graph], skip: Iterable[str] = ()) -> Report:
    report = Report()
    skip = tuple(skip)
    for ident in skip:
        report.tallies.pop(ident, None)
    ev = OracleEvaluator()
    for g in graphs:
        check_graph(g, report, ev, skip)
    return report
