"""Brute-force ground truth by enumerating vertex subsets.

Every quantity here is computed directly from its definition: a sum of
``x**|W|`` over the subsets W that meet some membership and domination
constraints. Nothing is pruned beyond fixing forced members.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, GraphError, delete_vertex, mask_of, vertices_of
from .polynomial import Polynomial

ORACLE_MAX_N = 25
# free-vertex count above which the numpy enumerator takes over
_NUMPY_FROM = 15
_LOW_BITS = 16


class OracleTooLarge(GraphError):
    pass


class ConditionKind(enum.Enum):
    NONE = "none"
    NONEMPTY = "nonempty"
    CONTAINS = "contains"
    EXCLUDES = "excludes"
    NOT_DOMINATED = "not_dominated"
    EXACT_ONE_NEIGHBOR = "exact_one_neighbor"


@dataclass(frozen=True)
class Condition:
    """A side condition on the counted dominating sets.

    NOT_DOMINATED(u) and EXACT_ONE_NEIGHBOR(u, v) count dominating sets of
    G - u, with u's neighbourhood taken in G. NOT_DOMINATED(u) gives p_u and
    EXACT_ONE_NEIGHBOR(u, v) gives p_{u,v}.
    """

    kind: ConditionKind
    u: int | None = None
    v: int | None = None

    @classmethod
    def none(cls) -> "Condition":
        return cls(ConditionKind.NONE)

    @classmethod
    def nonempty(cls) -> "Condition":
        return cls(ConditionKind.NONEMPTY)

    @classmethod
    def contains(cls, u: int) -> "Condition":
        return cls(ConditionKind.CONTAINS, u)

    @classmethod
    def excludes(cls, u: int) -> "Condition":
        return cls(ConditionKind.EXCLUDES, u)

    @classmethod
    def not_dominated(cls, u: int) -> "Condition":
        return cls(ConditionKind.NOT_DOMINATED, u)

    @classmethod
    def exact_one_neighbor(cls, u: int, v: int) -> "Condition":
        return cls(ConditionKind.EXACT_ONE_NEIGHBOR, u, v)


@dataclass(frozen=True)
class StateIndex:
    """A boundary state (A, B): A the chosen and B the dominated vertices of X."""

    a_set: frozenset
    b_set: frozenset

    def __post_init__(self):
        object.__setattr__(self, "a_set", frozenset(self.a_set))
        object.__setattr__(self, "b_set", frozenset(self.b_set))
        if not self.a_set <= self.b_set:
            raise ValueError("A must be a subset of B")

    def __repr__(self):
        a = "{" + ",".join(map(str, sorted(self.a_set))) + "}"
        b = "{" + ",".join(map(str, sorted(self.b_set))) + "}"
        return f"({a},{b})"


# -- the enumerator --------------------------------------------------------


def _closed_masks(g: Graph, vs: Sequence[int]) -> list[int]:
    masks = g.masks()
    return [masks[v] | (1 << v) for v in vs]


def count_subsets(
    g: Graph,
    must_in: int = 0,
    must_out: int = 0,
    need: int | None = None,
    avoid: int = 0,
) -> list[int]:
    """Counts by size of subsets W with the given constraints.

    W contains ``must_in``, misses ``must_out``, its closed neighbourhood
    covers ``need`` (default: all vertices) and misses ``avoid``. Entry i of
    the result is the number of such W with |W| = i.
    """
    vmask = g.vertex_mask
    if need is None:
        need = vmask
    if must_in & must_out:
        return [0] * (g.n + 1)
    free = vertices_of(vmask & ~must_in & ~must_out)
    base = 0
    for c in _closed_masks(g, vertices_of(must_in)):
        base |= c
    offset = must_in.bit_count()
    counts = [0] * (g.n + 1)
    if base & avoid:
        return counts
    cms = _closed_masks(g, free)
    if len(free) < _NUMPY_FROM:
        by_size = _count_python(base, cms, need, avoid)
    else:
        by_size = _count_numpy(base, cms, need, avoid)
    for i, c in enumerate(by_size):
        counts[i + offset] += c
    return counts


def _count_python(base: int, cms: list[int], need: int, avoid: int) -> list[int]:
    unions = [base]
    sizes = [0]
    for c in cms:
        unions += [u | c for u in unions]
        sizes += [s + 1 for s in sizes]
    out = [0] * (len(cms) + 1)
    for u, s in zip(unions, sizes):
        if u & need == need and not u & avoid:
            out[s] += 1
    return out


def _count_numpy(base: int, cms: list[int], need: int, avoid: int) -> list[int]:
    low, high = cms[:_LOW_BITS], cms[_LOW_BITS:]
    unions = np.zeros(1, dtype=np.int64)
    sizes = np.zeros(1, dtype=np.int64)
    for c in low:
        unions = np.concatenate([unions, unions | np.int64(c)])
        sizes = np.concatenate([sizes, sizes + 1])
    need64, avoid64 = np.int64(need), np.int64(avoid)
    out = np.zeros(len(cms) + 1, dtype=np.int64)
    hu, hs = [base], [0]
    for c in high:
        hu += [u | c for u in hu]
        hs += [s + 1 for s in hs]
    for hmask, hsize in zip(hu, hs):
        full = unions | np.int64(hmask)
        ok = (full & need64) == need64
        if avoid:
            ok &= (full & avoid64) == 0
        out += np.bincount(sizes[ok] + hsize, minlength=len(out))[: len(out)]
    return [int(c) for c in out]


def count_subsets_reference(
    g: Graph, must_in: int = 0, must_out: int = 0, need: int | None = None, avoid: int = 0
) -> list[int]:
    """Same result as count_subsets, one subset at a time over integers 0..2^n-1."""
    vs = g.vertices
    if need is None:
        need = g.vertex_mask
    cms = _closed_masks(g, vs)
    counts = [0] * (g.n + 1)
    for code in range(1 << len(vs)):
        w, nb = 0, 0
        for i, v in enumerate(vs):
            if code >> i & 1:
                w |= 1 << v
                nb |= cms[i]
        if w & must_in != must_in or w & must_out:
            continue
        if nb & need == need and not nb & avoid:
            counts[w.bit_count()] += 1
    return counts


def _guard(g: Graph) -> None:
    if g.n > ORACLE_MAX_N:
        raise OracleTooLarge(
            f"brute force is limited to {ORACLE_MAX_N} vertices (got {g.n}); "
            "use dompoly.solver.compute instead"
        )


# -- public oracle ---------------------------------------------------------


def brute_force_D(g: Graph) -> Polynomial:
    """Domination polynomial by exhaustive enumeration."""
    _guard(g)
    return Polynomial(count_subsets(g))


def forbidden_D(g: Graph, forbidden: Iterable[int]) -> Polynomial:
    """Dominating sets of g that avoid every vertex of ``forbidden``."""
    _guard(g)
    return Polynomial(count_subsets(g, must_out=mask_of(forbidden)))


def brute_force_conditioned(g: Graph, c: Condition) -> Polynomial:
    _guard(g)
    k = c.kind
    if k is ConditionKind.NONE:
        return brute_force_D(g)
    if k is ConditionKind.NONEMPTY:
        counts = count_subsets(g)
        counts[0] = 0
        return Polynomial(counts)
    g._check(c.u)
    if k is ConditionKind.CONTAINS:
        return Polynomial(count_subsets(g, must_in=1 << c.u))
    if k is ConditionKind.EXCLUDES:
        return Polynomial(count_subsets(g, must_out=1 << c.u))
    if k is ConditionKind.NOT_DOMINATED:
        return brute_force_p(g, c.u)
    if k is ConditionKind.EXACT_ONE_NEIGHBOR:
        return brute_force_puv(g, c.u, c.v)
    raise ValueError(f"unsupported condition {c!r}")


def brute_force_p(g: Graph, u: int) -> Polynomial:
    """p_u: dominating sets of G - u containing no neighbour of u."""
    _guard(g)
    nb = g.adjacency_mask(u)
    return Polynomial(count_subsets(delete_vertex(g, u), must_out=nb))


def brute_force_puv(g: Graph, u: int, v: int) -> Polynomial:
    """p_{u,v}: dominating sets of G - u meeting N(u) exactly in {v}."""
    _guard(g)
    if not g.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    nb = g.adjacency_mask(u)
    return Polynomial(
        count_subsets(delete_vertex(g, u), must_in=1 << v, must_out=nb & ~(1 << v))
    )


def brute_force_state(g: Graph, x_set: Iterable[int], s: StateIndex) -> Polynomial:
    """State polynomial: W meets X in A, N[W] meets X in B, V - X fully dominated.

    Each W is weighted by x**|W - X|.
    """
    _guard(g)
    xs = set(x_set)
    for v in xs:
        g._check(v)
    if not s.b_set <= xs:
        raise ValueError("state index does not fit the separator")
    xmask = mask_of(xs)
    a, b = mask_of(s.a_set), mask_of(s.b_set)
    counts = count_subsets(
        g,
        must_in=a,
        must_out=xmask & ~a,
        need=(g.vertex_mask & ~xmask) | b,
        avoid=xmask & ~b,
    )
    return Polynomial(counts[len(s.a_set):])


class OracleEvaluator:
    """Evaluator backed entirely by the oracle, memoized per graph."""

    def __init__(self):
        self._d: dict[Graph, Polynomial] = {}
        self._p: dict[tuple[Graph, int], Polynomial] = {}

    def D(self, g: Graph) -> Polynomial:
        r = self._d.get(g)
        if r is None:
            r = self._d[g] = brute_force_D(g)
        return r

    def p(self, g: Graph, u: int) -> Polynomial:
        key = (g, u)
        r = self._p.get(key)
        if r is None:
            r = self._p[key] = brute_force_p(g, u)
        return r

    def contains(self, g: Graph, u: int) -> Polynomial:
        return brute_force_conditioned(g, Condition.contains(u))

    def state(self, g: Graph, x_set: Sequence[int], s: StateIndex) -> Polynomial:
        return brute_force_state(g, x_set, s)
