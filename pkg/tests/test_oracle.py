from itertools import combinations

import pytest
from conftest import graph_with_edge, graph_with_vertex, graphs
from hypothesis import given, settings
from hypothesis import strategies as st

from dompoly.graph import Graph, delete_vertex, mask_of
from dompoly.oracle import (
    Condition,
    OracleTooLarge,
    StateIndex,
    brute_force_conditioned,
    brute_force_D,
    brute_force_p,
    brute_force_puv,
    brute_force_state,
    count_subsets,
    count_subsets_reference,
)
from dompoly.polynomial import Polynomial, poly


def naive_D(g: Graph, keep=lambda w: True) -> Polynomial:
    """Set-based count, sharing no code with the bitmask enumerator."""
    counts = [0] * (g.n + 1)
    for k in range(g.n + 1):
        for w in combinations(g.vertices, k):
            covered = set(w).union(*(g.neighbors(v) for v in w))
            if covered == set(g.vertices) and keep(set(w)):
                counts[k] += 1
    return Polynomial(counts)


def test_known_values():
    assert brute_force_D(Graph.empty(0)) == poly(1)
    assert brute_force_D(Graph.complete(1)) == poly(0, 1)
    assert brute_force_D(Graph.complete(3)) == poly(0, 3, 3, 1)
    assert brute_force_D(Graph.path(4)) == poly(0, 0, 4, 4, 1)
    assert brute_force_D(Graph.empty(3)) == poly(0, 0, 0, 1)


@given(graphs(max_n=8))
def test_matches_set_based_count(g):
    assert brute_force_D(g) == naive_D(g)


@settings(max_examples=30, deadline=None)
@given(graphs(min_n=15, max_n=17), st.data())
def test_numpy_path_matches_reference(g, data):
    must_in = data.draw(st.sets(st.sampled_from(g.vertices), max_size=2))
    must_out = data.draw(st.sets(st.sampled_from(g.vertices), max_size=2)) - must_in
    args = dict(must_in=mask_of(must_in), must_out=mask_of(must_out))
    assert count_subsets(g, **args) == count_subsets_reference(g, **args)


@given(graph_with_vertex())
def test_in_out_split_sums_to_whole(gv):
    g, u = gv
    d_in = brute_force_conditioned(g, Condition.contains(u))
    d_out = brute_force_conditioned(g, Condition.excludes(u))
    assert d_in + d_out == brute_force_D(g)
    assert d_in == naive_D(g, lambda w: u in w)


@given(graph_with_vertex())
def test_p_counts_sets_avoiding_the_neighbourhood(gv):
    g, u = gv
    nb = set(g.neighbors(u))
    want = naive_D(delete_vertex(g, u), lambda w: not w & nb)
    assert brute_force_p(g, u) == want
    assert brute_force_conditioned(g, Condition.not_dominated(u)) == want


@given(graph_with_edge())
def test_puv_counts_exactly_one_neighbour(ge):
    g, (u, v) = ge
    nb = set(g.neighbors(u))
    want = naive_D(delete_vertex(g, u), lambda w: w & nb == {v})
    assert brute_force_puv(g, u, v) == want


@given(graphs(max_n=7))
def test_nonempty_drops_constant(g):
    d = brute_force_conditioned(g, Condition.nonempty())
    assert d == brute_force_D(g) - Polynomial([brute_force_D(g)[0]])


def test_state_polynomials_of_an_edge():
    k2 = Graph.complete(2)
    # X = {0}: private vertex 1 must be dominated
    assert brute_force_state(k2, [0], StateIndex({0}, {0})) == poly(1, 1)
    assert brute_force_state(k2, [0], StateIndex(set(), {0})) == poly(0, 1)
    assert brute_force_state(k2, [0], StateIndex(set(), set())) == poly(0)


@given(graphs(min_n=1, max_n=6), st.data())
def test_states_cover_every_dominating_set(g, data):
    xs = data.draw(st.sets(st.sampled_from(g.vertices), min_size=1, max_size=2))
    total = Polynomial([0])
    x = poly(0, 1)
    # fully dominated states, W meeting X in A
    for k in range(len(xs) + 1):
        for a in combinations(sorted(xs), k):
            total = total + brute_force_state(g, xs, StateIndex(a, xs)) * x**k
    assert total == brute_force_D(g)


def test_state_index_checks_containment():
    with pytest.raises(ValueError):
        StateIndex({1}, set())
    assert repr(StateIndex({3}, {3, 5})) == "({3},{3,5})"


def test_size_guard():
    with pytest.raises(OracleTooLarge):
        brute_force_D(Graph.empty(26))
