"""Recurrences and special-case reductions for the domination polynomial.

Each function takes an evaluator ``dep`` with ``dep.D(g)`` and ``dep.p(g, u)``
and asks it for the values of smaller instances, so memoization and strategy
choice stay with the caller.
"""

from __future__ import annotations

from typing import Protocol, Sequence

from .graph import (
    Graph,
    GraphError,
    clear_neighborhood_edges,
    contract_vertex,
    delete_edge,
    delete_vertex,
    delete_vertices,
    extract_closed_neighborhood,
)
from .polynomial import X, Polynomial

ONE_PLUS_X = Polynomial((1, 1))
X_MINUS_ONE = Polynomial((-1, 1))


class Evaluator(Protocol):
    def D(self, g: Graph) -> Polynomial: ...

    def p(self, g: Graph, u: int) -> Polynomial: ...


class PreconditionError(GraphError):
    """A reduction was applied where its hypothesis does not hold."""


def _edge(g: Graph, e: Sequence[int]) -> tuple[int, int]:
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"unknown edge {u}-{v}")
    return u, v


def vertex_reduction(g: Graph, u: int, dep: Evaluator) -> Polynomial:
    """D(G) = x D(G/u) + D(G-u) + x D(G-N[u]) - (1+x) p_u(G)."""
    g.closed_mask(u)
    return (
        X * dep.D(contract_vertex(g, u))
        + dep.D(delete_vertex(g, u))
        + X * dep.D(extract_closed_neighborhood(g, u))
        - ONE_PLUS_X * dep.p(g, u)
    )


def split_in_out(g: Graph, u: int, dep: Evaluator) -> tuple[Polynomial, Polynomial]:
    """(D_{u not in W}(G), D_{u in W}(G))."""
    pu = dep.p(g, u)
    out = dep.D(delete_vertex(g, u)) - pu
    inside = X * dep.D(extract_closed_neighborhood(g, u)) + X * (
        dep.D(contract_vertex(g, u)) - pu
    )
    return out, inside


def d_contains(g: Graph, u: int, dep: Evaluator) -> Polynomial:
    """D_{u in W}(G) = D(G) - D(G-u) + p_u(G)."""
    return dep.D(g) - dep.D(delete_vertex(g, u)) + dep.p(g, u)


def puv_via_lemma(g: Graph, e: Sequence[int], dep: Evaluator) -> Polynomial:
    """p_{u,v}(G) = p_u(G-e) - p_u(G) for the edge e = (u, v)."""
    u, v = _edge(g, e)
    return dep.p(delete_edge(g, (u, v)), u) - dep.p(g, u)


def edge_bracket(g: Graph, e: Sequence[int], dep: Evaluator) -> Polynomial:
    """The eight-term bracket multiplying x/(x-1) in the edge recurrence."""
    u, v = _edge(g, e)
    h = delete_edge(g, (u, v))
    return (
        dep.D(contract_vertex(h, u))
        + dep.D(contract_vertex(h, v))
        - dep.D(contract_vertex(g, u))
        - dep.D(contract_vertex(g, v))
        - dep.D(extract_closed_neighborhood(g, u))
        - dep.D(extract_closed_neighborhood(g, v))
        + dep.D(extract_closed_neighborhood(h, u))
        + dep.D(extract_closed_neighborhood(h, v))
    )


def edge_recurrence(g: Graph, e: Sequence[int], dep: Evaluator) -> Polynomial:
    """D(G) = D(G-e) + x/(x-1) * bracket, evaluated without the pole at x = 1.

    The quotient x*bracket/(x-1) is a polynomial; an inexact division here
    means an inconsistent evaluator.
    """
    u, v = _edge(g, e)
    h = delete_edge(g, (u, v))
    return dep.D(h) + (X * edge_bracket(g, e, dep)).divide_exact(X_MINUS_ONE)


def _require_closed_containment(g: Graph, u: int, v: int) -> None:
    if u == v:
        raise PreconditionError("u and v must be distinct")
    if g.closed_mask(v) & ~g.closed_mask(u):
        raise PreconditionError(f"N[{v}] is not contained in N[{u}]")


def nbr_containment_reduction(
    g: Graph, u: int, v: int, dep: Evaluator, variant: int = 1
) -> Polynomial:
    """Reduction for N[v] a subset of N[u].

    Variant 1 is x D(G/u) + D(G-u) + x D(G-N[u]).
    Variant 2 is (1+x) D(G-u) + D_{u in W}(G - (N[v] - {u})), and is wrong in
    general: it drops the dominating sets that contain u and a vertex of
    N[v] - {u} but whose remainder fails to dominate G - u.
    """
    _require_closed_containment(g, u, v)
    if variant == 1:
        return (
            X * dep.D(contract_vertex(g, u))
            + dep.D(delete_vertex(g, u))
            + X * dep.D(extract_closed_neighborhood(g, u))
        )
    if variant == 2:
        rest = [w for w in g.closed_neighborhood(v) if w != u]
        h = delete_vertices(g, rest)
        return ONE_PLUS_X * dep.D(delete_vertex(g, u)) + d_contains(h, u, dep)
    raise ValueError("variant must be 1 or 2")


def degree_one_reduction(g: Graph, v: int, dep: Evaluator) -> Polynomial:
    """For a leaf v with neighbour u: x [D(G/u) + D(G-u-v) + D(G-N[u])]."""
    if g.degree(v) != 1:
        raise PreconditionError(f"{v} is not a leaf")
    (u,) = g.neighbors(v)
    return X * (
        dep.D(contract_vertex(g, u))
        + dep.D(delete_vertices(g, (u, v)))
        + dep.D(extract_closed_neighborhood(g, u))
    )


def twin_reduction(g: Graph, u: int, w: int, dep: Evaluator) -> Polynomial:
    """For N(u) = N(w): x D(G/u) + D(G-u) - x D(G-N[u]-w)."""
    if u == w or g.adjacency_mask(u) != g.adjacency_mask(w):
        raise PreconditionError(f"{u} and {w} are not open twins")
    return (
        X * dep.D(contract_vertex(g, u))
        + dep.D(delete_vertex(g, u))
        - X * dep.D(delete_vertex(extract_closed_neighborhood(g, u), w))
    )


def subset_nbr_reduction(g: Graph, u: int, w: int, dep: Evaluator) -> Polynomial:
    """For N(w) a subset of N(u).

    x D(G/u) + D(G-u) + x D(G-N[w]) - x^2 D((G-N[w])/u) - x D(G-N[w]-u).
    """
    if u == w or g.adjacency_mask(w) & ~g.adjacency_mask(u):
        raise PreconditionError(f"N({w}) is not contained in N({u})")
    h = extract_closed_neighborhood(g, w)
    return (
        X * dep.D(contract_vertex(g, u))
        + dep.D(delete_vertex(g, u))
        + X * dep.D(h)
        - X * X * dep.D(contract_vertex(h, u))
        - X * dep.D(delete_vertex(h, u))
    )


def triangle_clear_reduction(g: Graph, u: int, dep: Evaluator) -> Polynomial:
    """D(G-u) + D(G cleared at u) - D(G cleared at u, minus u)."""
    c = clear_neighborhood_edges(g, u)
    return dep.D(delete_vertex(g, u)) + dep.D(c) - dep.D(delete_vertex(c, u))


def check_path5(g: Graph, path: Sequence[int]) -> None:
    if len(path) != 5 or len(set(path)) != 5:
        raise PreconditionError("need five distinct vertices")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise PreconditionError(f"{a}-{b} is not an edge")
    for mid in path[1:4]:
        if g.degree(mid) != 2:
            raise PreconditionError(f"inner vertex {mid} does not have degree 2")


def path5_reduction(g: Graph, path: Sequence[int], dep: Evaluator) -> Polynomial:
    """x [D(G/w) + D(G/v/w) + D(G/v/w/y)] for a path u-v-w-y-z with inner degree 2."""
    check_path5(g, path)
    _, v, w, y, _ = path
    gv = contract_vertex(g, v)
    gvw = contract_vertex(gv, w)
    return X * (
        dep.D(contract_vertex(g, w)) + dep.D(gvw) + dep.D(contract_vertex(gvw, y))
    )


def find_path5(g: Graph) -> list[int] | None:
    """First path u-v-w-y-z whose three inner vertices have degree 2."""
    for w in g.vertices:
        if g.degree(w) != 2:
            continue
        v, y = g.neighbors(w)
        if g.degree(v) != 2 or g.degree(y) != 2:
            continue
        (u,) = [a for a in g.neighbors(v) if a != w]
        (z,) = [a for a in g.neighbors(y) if a != w]
        if len({u, v, w, y, z}) == 5:
            return [u, v, w, y, z]
    return None


def is_domination_covered(g: Graph, v: int) -> bool:
    """True iff some neighbour u of v has N[u] inside N[v]."""
    nv = g.closed_mask(v)
    return any(not g.closed_mask(u) & ~nv for u in g.neighbors(v))


def is_domination_covered_by_definition(g: Graph, v: int, dep: Evaluator) -> bool:
    """Every dominating set of G - v meets N(v), i.e. p_v(G) vanishes."""
    return dep.p(g, v).is_zero()


def is_irrelevant_edge(g: Graph, e: Sequence[int]) -> bool:
    u, v = _edge(g, e)
    h = delete_edge(g, (u, v))
    return is_domination_covered(h, u) and is_domination_covered(h, v)


def corona_formula(g: Graph, h: Graph, dep: Evaluator) -> Polynomial:
    """[x (1+x)^|V(H)| + D(H)]^|V(G)|."""
    if g.n == 0 or h.n == 0:
        raise GraphError("corona formula needs non-empty graphs")
    return (X * ONE_PLUS_X ** h.n + dep.D(h)) ** g.n


__all__ = [
    "Evaluator",
    "PreconditionError",
    "corona_formula",
    "d_contains",
    "degree_one_reduction",
    "edge_bracket",
    "edge_recurrence",
    "find_path5",
    "is_domination_covered",
    "is_domination_covered_by_definition",
    "is_irrelevant_edge",
    "nbr_containment_reduction",
    "path5_reduction",
    "puv_via_lemma",
    "split_in_out",
    "subset_nbr_reduction",
    "triangle_clear_reduction",
    "twin_reduction",
    "vertex_reduction",
]
