import pytest
from conftest import graph_with_vertex, graphs
from hypothesis import given

from dompoly import calculus as calc
from dompoly.graph import Graph, GraphError
from dompoly.oracle import Condition, OracleEvaluator, brute_force_conditioned, brute_force_D

ev = OracleEvaluator()


@given(graph_with_vertex())
def test_contains_lemma(gv):
    g, u = gv
    assert calc.d_in_via_lemma(g, u, ev) == brute_force_conditioned(g, Condition.contains(u))


@given(graphs(min_n=1, max_n=7))
def test_derivative_identity_every_order(g):
    for i in range(g.n):
        assert calc.check_derivative_identity(g, i, ev)


def test_derivative_order_range():
    with pytest.raises(GraphError):
        calc.check_derivative_identity(Graph.path(3), 3, ev)


@given(graphs(min_n=1, max_n=7))
def test_reconstruction_from_vertex_sum(g):
    assert calc.reconstruct_from_A(g, ev) == brute_force_D(g)


def test_vertex_sum_of_k1():
    # A(K_1) = D(null) - D(null) - D(null) = -1
    assert calc.a_sum(Graph.complete(1), ev).coeffs == (-1,)


def test_reconstruction_needs_a_vertex():
    with pytest.raises(GraphError):
        calc.reconstruct_from_A(Graph.empty(0), ev)
