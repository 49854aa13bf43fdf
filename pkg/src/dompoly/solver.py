"""Strategy dispatch and memoization for computing D(G, x) on larger graphs."""

from __future__ import annotations

import enum
import sys
from dataclasses import dataclass, field
from itertools import combinations

from . import reductions as red
from .graph import (
    Graph,
    GraphError,
    Splitting,
    component_masks,
    contract_vertex,
    delete_edge,
    delete_vertex,
    extract_closed_neighborhood,
    find_articulations,
    induced_subgraph,
    make_splitting,
    mask_of,
    relabel_dense,
    vertices_of,
)
from .oracle import ORACLE_MAX_N, Condition, ConditionKind, brute_force_D, count_subsets
from .polynomial import ONE, X, ZERO, Polynomial
from .splitting import MAX_SEPARATOR, articulation_split_Dinv, split_general_Dinv

AUTO_ORACLE_MAX_N = 20
MAX_SEARCH_SEPARATOR = 3
_RECURSION_LIMIT = 20000


class Strategy(enum.Enum):
    AUTO = "auto"
    BRUTE = "brute"
    VERTEX_REC = "vertex"
    EDGE_REC = "edge"
    SPLIT = "split"


def memo_key(g: Graph) -> bytes:
    """Byte encoding of g after relabelling its vertices to 0..n-1 in order."""
    dense, _ = relabel_dense(g)
    return bytes([dense.n]) + b"".join(m.to_bytes(8, "little") for m in dense.masks().values())


def _key_with_mask(g: Graph, mask: int) -> bytes:
    dense, mapping = relabel_dense(g)
    mapped = 0
    for v in vertices_of(mask):
        mapped |= 1 << mapping[v]
    return (
        bytes([dense.n])
        + b"".join(m.to_bytes(8, "little") for m in dense.masks().values())
        + b"|"
        + mapped.to_bytes(8, "little")
    )


@dataclass
class MemoStats:
    hits: int = 0
    misses: int = 0
    steps: dict = field(default_factory=dict)

    def note(self, step: str) -> None:
        self.steps[step] = self.steps.get(step, 0) + 1


def balanced_side(comps: list[int], x_size: int) -> int | None:
    """Greedy bipartition of component masks; None unless both sides exceed |X|."""
    total = sum(c.bit_count() for c in comps)
    side, size = 0, 0
    for c in sorted(comps, key=lambda c: (-c.bit_count(), c & -c)):
        if size + c.bit_count() <= total // 2 or side == 0:
            side |= c
            size += c.bit_count()
    if min(size, total - size) <= x_size:
        return None
    return side


class Solver:
    """Memoized evaluator of D(G) and p_u(G) under one strategy.

    ``oracle_max_n`` sets the size up to which enumeration is used as a base
    case. It defaults to 20 for AUTO and to none for the forced strategies,
    which then bottom out only at null, edgeless and disconnected graphs.
    """

    def __init__(self, strategy: Strategy = Strategy.AUTO, oracle_max_n: int | None = -1):
        self.strategy = strategy
        if oracle_max_n == -1:
            oracle_max_n = AUTO_ORACLE_MAX_N if strategy is Strategy.AUTO else None
        if strategy is Strategy.BRUTE:
            oracle_max_n = ORACLE_MAX_N
        self.oracle_max_n = oracle_max_n
        self._memo: dict[bytes, Polynomial] = {}
        self._memo_f: dict[bytes, Polynomial] = {}
        self.stats = MemoStats()

    @property
    def memo_hits(self) -> int:
        return self.stats.hits

    # -- evaluator interface ----------------------------------------------

    def D(self, g: Graph) -> Polynomial:
        if g.n == 0:
            return ONE
        key = memo_key(g)
        hit = self._memo.get(key)
        if hit is not None:
            self.stats.hits += 1
            return hit
        self.stats.misses += 1
        value = self._compute(g)
        return self._memo.setdefault(key, value)

    def p(self, g: Graph, u: int) -> Polynomial:
        """p_u(G): dominating sets of G - u that avoid N(u)."""
        nb = g.adjacency_mask(u)
        known = self._memo.get(memo_key(g))
        if known is not None:
            self.stats.hits += 1
            return ((X * self.D(contract_vertex(g, u)) + self.D(delete_vertex(g, u))
                     + X * self.D(extract_closed_neighborhood(g, u)) - known)
                    .divide_exact(red.ONE_PLUS_X))
        return self.forbidden(delete_vertex(g, u), nb)

    def forbidden(self, h: Graph, s: int) -> Polynomial:
        """Dominating sets of h that avoid every vertex in the mask s."""
        s &= h.vertex_mask
        if not s:
            return self.D(h)
        masks = h.masks()
        for f in vertices_of(s):
            if not masks[f]:
                return ZERO
        key = _key_with_mask(h, s)
        hit = self._memo_f.get(key)
        if hit is not None:
            self.stats.hits += 1
            return hit
        self.stats.misses += 1
        value = self._compute_forbidden(h, s)
        return self._memo_f.setdefault(key, value)

    def _compute_forbidden(self, h: Graph, s: int) -> Polynomial:
        comps = component_masks(h)
        if len(comps) > 1:
            out = ONE
            for c in comps:
                out = out * self.forbidden(induced_subgraph(h, vertices_of(c)), s & c)
            return out
        # enumeration only ranges over the vertices that are not forbidden
        if self.oracle_max_n is not None and h.n - s.bit_count() <= self.oracle_max_n:
            return Polynomial(count_subsets(h, must_out=s))
        # split off the largest forbidden vertex f: sets avoiding S - f, minus
        # those containing f
        f = s.bit_length() - 1
        rest = s & ~(1 << f)
        nf = h.adjacency_mask(f)
        with_f = (
            self.forbidden(extract_closed_neighborhood(h, f), rest & ~nf)
            + self.forbidden(contract_vertex(h, f), rest)
            - self.forbidden(delete_vertex(h, f), rest | nf)
        )
        return self.forbidden(h, rest) - X * with_f

    # -- strategies --------------------------------------------------------

    def _compute(self, g: Graph) -> Polynomial:
        if g.is_edgeless():
            return X ** g.n
        if 2 * g.m == g.n * (g.n - 1):
            # every non-empty subset of a clique dominates it
            self.stats.note("complete")
            return (ONE + X) ** g.n - ONE
        comps = component_masks(g)
        if len(comps) > 1:
            self.stats.note("components")
            out = ONE
            for c in comps:
                out = out * self.D(induced_subgraph(g, vertices_of(c)))
            return out
        if self.oracle_max_n is not None and g.n <= self.oracle_max_n:
            self.stats.note("oracle")
            return brute_force_D(g)
        st = self.strategy
        if st is Strategy.BRUTE:
            return brute_force_D(g)
        if st is Strategy.VERTEX_REC:
            return self._vertex_step(g)
        if st is Strategy.EDGE_REC:
            self.stats.note("edge")
            return red.edge_recurrence(g, g.edges()[0], self)
        if st is Strategy.SPLIT:
            s = find_separator_split(g, MAX_SEARCH_SEPARATOR)
            if s is not None:
                self.stats.note(f"split{len(s.x_set)}")
                return split_general_Dinv(s, self)
            return self._vertex_step(g)
        return self._auto(g)

    def _vertex_step(self, g: Graph) -> Polynomial:
        self.stats.note("vertex")
        u = max(g.vertices, key=lambda v: (g.degree(v), -v))
        return red.vertex_reduction(g, u, self)

    def _auto(self, g: Graph) -> Polynomial:
        h = remove_irrelevant_edges(g)
        if h != g:
            self.stats.note("irrelevant")
            return self.D(h)
        for v in g.vertices:
            if g.degree(v) == 1:
                self.stats.note("leaf")
                (u,) = g.neighbors(v)
                return red.nbr_containment_reduction(g, u, v, self)
        twins = find_open_twins(g)
        if twins is not None:
            self.stats.note("twins")
            return red.twin_reduction(g, *twins, self)
        path = red.find_path5(g)
        if path is not None:
            self.stats.note("path5")
            return red.path5_reduction(g, path, self)
        s = best_articulation_split(g)
        if s is not None:
            self.stats.note("articulation")
            return articulation_split_Dinv(s, self)
        s = find_separator_split(g, MAX_SEARCH_SEPARATOR, min_size=2, balance=4)
        if s is not None:
            self.stats.note(f"split{len(s.x_set)}")
            return split_general_Dinv(s, self)
        return self._vertex_step(g)


# -- structural searches -----------------------------------------------------


def remove_irrelevant_edges(g: Graph) -> Graph:
    """Delete irrelevant edges one at a time in lexicographic order."""
    h = g
    for e in g.edges():
        if red.is_irrelevant_edge(h, e):
            h = delete_edge(h, e)
    return h


def find_open_twins(g: Graph) -> tuple[int, int] | None:
    seen: dict[int, int] = {}
    for v in g.vertices:
        m = g.adjacency_mask(v)
        if m and m in seen:
            return seen[m], v
        seen.setdefault(m, v)
    return None


def _split_for(g: Graph, xs: tuple[int, ...], balance: int | None) -> Splitting | None:
    xmask = mask_of(xs)
    rest = induced_subgraph(g, vertices_of(g.vertex_mask & ~xmask))
    comps = component_masks(rest)
    if len(comps) < 2:
        return None
    side = balanced_side(comps, len(xs))
    if side is None:
        return None
    if balance is not None:
        small = min(side.bit_count(), rest.n - side.bit_count())
        if small * balance < rest.n:
            return None
    return make_splitting(g, xs, side1=vertices_of(side))


def best_articulation_split(g: Graph) -> Splitting | None:
    """Split at the cut vertex giving the most even sides."""
    best, best_score = None, None
    for v in find_articulations(g):
        s = _split_for(g, (v,), None)
        if s is None:
            continue
        score = max(s.g1.n, s.g2.n)
        if best_score is None or score < best_score:
            best, best_score = s, score
    return best


def find_separator_split(
    g: Graph, max_size: int, min_size: int = 1, balance: int | None = None
) -> Splitting | None:
    """First separator in lexicographic order, by size, that splits g usefully.

    Useful means both sides keep more than |X| private vertices, so every
    graph in the d-vectors is smaller than g. With ``balance=b`` the smaller
    side must also hold at least 1/b of the vertices outside X.
    """
    max_size = min(max_size, MAX_SEPARATOR)
    for k in range(min_size, max_size + 1):
        if g.n < 2 * k + 2 + k:
            break
        for xs in combinations(g.vertices, k):
            s = _split_for(g, xs, balance)
            if s is not None:
                return s
    return None


# -- public entry points ------------------------------------------------------


def _as_strategy(strategy: Strategy | str) -> Strategy:
    return strategy if isinstance(strategy, Strategy) else Strategy(strategy)


def compute(
    g: Graph, strategy: Strategy | str = Strategy.AUTO, solver: Solver | None = None
) -> Polynomial:
    """D(G, x) under the chosen strategy."""
    if g.n > 63:
        raise GraphError("graphs are limited to 63 vertices")
    solver = solver or Solver(_as_strategy(strategy))
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, _RECURSION_LIMIT))
    try:
        return solver.D(g)
    finally:
        sys.setrecursionlimit(old)


def compute_conditioned(
    g: Graph,
    c: Condition,
    strategy: Strategy | str = Strategy.AUTO,
    solver: Solver | None = None,
) -> Polynomial:
    """D_C(G, x) for the supported side conditions."""
    s = solver or Solver(_as_strategy(strategy))
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, _RECURSION_LIMIT))
    try:
        k = c.kind
        if k is ConditionKind.NONE:
            return s.D(g)
        if k is ConditionKind.NONEMPTY:
            d = s.D(g)
            return d - Polynomial((d[0],))
        if k is ConditionKind.CONTAINS:
            return red.d_contains(g, c.u, s)
        if k is ConditionKind.EXCLUDES:
            return s.D(delete_vertex(g, c.u)) - s.p(g, c.u)
        if k is ConditionKind.NOT_DOMINATED:
            return s.p(g, c.u)
        if k is ConditionKind.EXACT_ONE_NEIGHBOR:
            return red.puv_via_lemma(g, (c.u, c.v), s)
    finally:
        sys.setrecursionlimit(old)
    raise ValueError(f"unsupported condition {c!r}")
