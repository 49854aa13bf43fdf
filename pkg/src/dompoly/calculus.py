"""Derivative identities linking D(G, x) to the vertex sum A(G, x)."""

from __future__ import annotations

from math import factorial

from .graph import Graph, GraphError, contract_vertex, delete_vertex, extract_closed_neighborhood
from .polynomial import ONE, ZERO, InexactDivisionError, Polynomial
from .reductions import ONE_PLUS_X, Evaluator, d_contains


def d_in_via_lemma(g: Graph, u: int, dep: Evaluator) -> Polynomial:
    """D_{u in W}(G) = D(G) - D(G-u) + p_u(G)."""
    return d_contains(g, u, dep)


def a_sum(g: Graph, dep: Evaluator) -> Polynomial:
    """A(G) = sum over v of D(G-v) - D(G/v) - D(G-N[v])."""
    total = ZERO
    for v in g.vertices:
        total = (
            total
            + dep.D(delete_vertex(g, v))
            - dep.D(contract_vertex(g, v))
            - dep.D(extract_closed_neighborhood(g, v))
        )
    return total


def check_derivative_identity(g: Graph, i: int, dep: Evaluator) -> bool:
    """(n - i) D^(i) == (1+x) D^(i+1) + A^(i), exactly."""
    n = g.n
    if not 0 <= i < n:
        raise GraphError(f"derivative order {i} outside 0..{n - 1}")
    d = dep.D(g)
    a = a_sum(g, dep)
    lhs = d.derivative(i) * (n - i)
    rhs = ONE_PLUS_X * d.derivative(i + 1) + a.derivative(i)
    return lhs == rhs


def reconstruct_from_A(g: Graph, dep: Evaluator) -> Polynomial:
    """D(G) = (1+x)^n + sum_i (1+x)^i (n-i-1)!/n! A^(i)(G).

    Computed as n! D = n! (1+x)^n + sum_i (1+x)^i (n-i-1)! A^(i), then an
    exact division by n!.
    """
    n = g.n
    if n < 1:
        raise GraphError("reconstruction needs at least one vertex")
    a = a_sum(g, dep)
    nf = factorial(n)
    total = ONE_PLUS_X**n * nf
    power = ONE
    for i in range(n):
        total = total + power * a.derivative(i) * factorial(n - i - 1)
        power = power * ONE_PLUS_X
    try:
        return total.divide_exact(nf)
    except InexactDivisionError as exc:
        raise InexactDivisionError(
            "reconstruction from A(G, x) produced non-integer coefficients", exc.remainder
        ) from exc
