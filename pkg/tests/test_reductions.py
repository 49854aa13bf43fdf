import pytest
from conftest import graph_with_edge, graph_with_vertex, graphs
from hypothesis import assume, given
from hypothesis import strategies as st

from dompoly import reductions as red
from dompoly.graph import Graph, GraphError, corona, delete_edge
from dompoly.oracle import (
    Condition,
    OracleEvaluator,
    brute_force_conditioned,
    brute_force_D,
    brute_force_puv,
)
from dompoly.polynomial import poly

ev = OracleEvaluator()
P3 = Graph.path(3)


@given(graph_with_vertex())
def test_vertex_reduction(gv):
    g, u = gv
    assert red.vertex_reduction(g, u, ev) == brute_force_D(g)


def test_vertex_reduction_on_p3_centre():
    # x(2x+x^2) + x^2 + x*1 - (1+x)*0
    assert red.vertex_reduction(P3, 1, ev) == poly(0, 1, 3, 1)


@given(graph_with_vertex())
def test_in_out_parts(gv):
    g, u = gv
    out, inside = red.split_in_out(g, u, ev)
    assert out == brute_force_conditioned(g, Condition.excludes(u))
    assert inside == brute_force_conditioned(g, Condition.contains(u))


@given(graph_with_edge())
def test_puv_lemma(ge):
    g, (u, v) = ge
    assert red.puv_via_lemma(g, (u, v), ev) == brute_force_puv(g, u, v)


@given(graph_with_edge())
def test_edge_recurrence(ge):
    g, e = ge
    assert red.edge_recurrence(g, e, ev) == brute_force_D(g)


@given(graphs(min_n=2, max_n=7), st.data())
def test_closed_containment_reduction(g, data):
    pairs = [(u, v) for u in g.vertices for v in g.vertices
             if u != v and not g.closed_mask(v) & ~g.closed_mask(u)]
    assume(pairs)
    u, v = data.draw(st.sampled_from(pairs))
    assert red.nbr_containment_reduction(g, u, v, ev) == brute_force_D(g)


def test_second_containment_form_fails_on_p3():
    # N[a] is inside N[b], yet the second form disagrees with the oracle
    assert red.nbr_containment_reduction(P3, 1, 0, ev, variant=2) != brute_force_D(P3)
    assert red.nbr_containment_reduction(P3, 1, 0, ev, variant=1) == brute_force_D(P3)


def test_containment_preconditions():
    with pytest.raises(red.PreconditionError):
        red.nbr_containment_reduction(P3, 0, 1, ev)
    with pytest.raises(red.PreconditionError):
        red.nbr_containment_reduction(P3, 1, 1, ev)
    with pytest.raises(ValueError):
        red.nbr_containment_reduction(P3, 1, 0, ev, variant=3)


@given(graph_with_vertex(min_n=2))
def test_leaf_reduction(gv):
    g, v = gv
    assume(g.degree(v) == 1)
    assert red.degree_one_reduction(g, v, ev) == brute_force_D(g)


def test_leaf_reduction_needs_a_leaf():
    with pytest.raises(red.PreconditionError):
        red.degree_one_reduction(P3, 1, ev)


@given(graphs(min_n=2, max_n=7), st.data())
def test_open_twin_reduction(g, data):
    twins = [(u, w) for u in g.vertices for w in g.vertices
             if u != w and g.adjacency_mask(u) == g.adjacency_mask(w)]
    assume(twins)
    u, w = data.draw(st.sampled_from(twins))
    assert red.twin_reduction(g, u, w, ev) == brute_force_D(g)


@given(graphs(min_n=2, max_n=7), st.data())
def test_open_containment_reduction(g, data):
    pairs = [(u, w) for u in g.vertices for w in g.vertices
             if u != w and not g.adjacency_mask(w) & ~g.adjacency_mask(u)]
    assume(pairs)
    u, w = data.draw(st.sampled_from(pairs))
    assert red.subset_nbr_reduction(g, u, w, ev) == brute_force_D(g)


def test_twin_and_subset_preconditions():
    with pytest.raises(red.PreconditionError):
        red.twin_reduction(P3, 0, 1, ev)
    with pytest.raises(red.PreconditionError):
        red.subset_nbr_reduction(P3, 0, 1, ev)


@given(graph_with_vertex())
def test_triangle_clearing(gv):
    g, u = gv
    assert red.triangle_clear_reduction(g, u, ev) == brute_force_D(g)


@pytest.mark.parametrize("n", [5, 6, 7, 9])
def test_path5_on_paths_and_cycles(n):
    for g in (Graph.path(n), Graph.cycle(n)):
        path = red.find_path5(g)
        assert path is not None
        assert red.path5_reduction(g, path, ev) == brute_force_D(g)


def test_path5_absent_and_checked():
    assert red.find_path5(Graph.complete(5)) is None
    with pytest.raises(red.PreconditionError):
        red.path5_reduction(Graph.path(5), [0, 1, 2, 3, 3], ev)
    with pytest.raises(red.PreconditionError):
        red.check_path5(Graph.star(4), [1, 0, 2, 0, 3])


@given(graph_with_vertex())
def test_domination_covered_matches_definition(gv):
    g, v = gv
    assert red.is_domination_covered(g, v) == red.is_domination_covered_by_definition(g, v, ev)


def test_isolated_vertex_is_not_covered():
    assert not red.is_domination_covered(Graph.complete(1), 0)
    assert red.is_domination_covered(Graph.complete(3), 0)


@given(graph_with_edge())
def test_irrelevant_edges_leave_D_unchanged(ge):
    g, e = ge
    same = brute_force_D(delete_edge(g, e)) == brute_force_D(g)
    assert red.is_irrelevant_edge(g, e) == same


@given(graphs(min_n=1, max_n=3), graphs(min_n=1, max_n=3))
def test_corona_formula(g, h):
    assert red.corona_formula(g, h, ev) == brute_force_D(corona(g, h))


def test_corona_formula_rejects_empty_factor():
    with pytest.raises(GraphError):
        red.corona_formula(Graph.complete(1), Graph.empty(0), ev)
