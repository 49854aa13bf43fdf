import pytest
from conftest import graph_with_edge, graph_with_vertex, graphs
from hypothesis import given

from dompoly.graph import (
    MAX_VERTICES,
    Graph,
    GraphError,
    append_pendant,
    clear_neighborhood_edges,
    component_masks,
    contract_edge,
    contract_vertex,
    corona,
    delete_edge,
    delete_vertex,
    disjoint_union,
    extract_closed_neighborhood,
    extract_edge,
    find_articulations,
    induced_subgraph,
    is_connected,
    make_splitting,
    neighborhood_contract,
    relabel_dense,
    union_on_shared,
    vertices_of,
)

P3 = Graph.path(3)  # a=0 - b=1 - c=2


def test_factories():
    assert Graph.complete(4).m == 6
    assert Graph.path(5).edges() == [(0, 1), (1, 2), (2, 3), (3, 4)]
    assert Graph.cycle(4).m == 4
    assert Graph.star(3).degree(0) == 3
    assert Graph.empty(0).n == 0
    with pytest.raises(GraphError):
        Graph.cycle(2)


def test_construction_rejects_bad_input():
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(GraphError):
        Graph([MAX_VERTICES])


def test_vertex_operations_on_p3():
    assert delete_vertex(P3, 1) == Graph([0, 2])
    assert contract_vertex(P3, 1) == Graph([0, 2], [(0, 2)])
    assert contract_vertex(P3, 0) == Graph([1, 2], [(1, 2)])
    assert extract_closed_neighborhood(P3, 0) == Graph([2])
    assert neighborhood_contract(P3, 0) == Graph([0, 2], [(0, 2)])
    assert neighborhood_contract(P3, 1) == Graph([1])


def test_contracting_isolated_vertex_is_deletion():
    g = Graph.from_edges(3, [(0, 1)])
    assert contract_vertex(g, 2) == delete_vertex(g, 2)


def test_edge_operations():
    k3 = Graph.complete(3)
    assert delete_edge(k3, (0, 1)) == Graph.from_edges(3, [(0, 2), (1, 2)])
    assert contract_edge(k3, (1, 2)) == Graph([0, 1], [(0, 1)])
    assert extract_edge(k3, (0, 1)) == Graph([2])
    with pytest.raises(GraphError):
        delete_edge(Graph.path(3), (0, 2))


def test_pendant_gets_smallest_free_id():
    g = Graph([0, 2, 3], [(0, 2)])
    h = append_pendant(g, 3)
    assert h.vertices == (0, 1, 2, 3)
    assert h.neighbors(1) == (3,)


def test_clear_neighborhood_edges():
    g = clear_neighborhood_edges(Graph.complete(4), 0)
    assert g.edges() == [(0, 1), (0, 2), (0, 3)]


@given(graph_with_vertex())
def test_operations_never_mutate(gv):
    g, v = gv
    before = (g.vertices, g.edges())
    for op in (delete_vertex, contract_vertex, extract_closed_neighborhood,
               neighborhood_contract, append_pendant, clear_neighborhood_edges):
        op(g, v)
    assert (g.vertices, g.edges()) == before


@given(graph_with_vertex())
def test_contraction_makes_neighbourhood_a_clique(gv):
    g, v = gv
    h = contract_vertex(g, v)
    nb = g.neighbors(v)
    assert v not in h.vertices
    assert all(h.has_edge(a, b) for a in nb for b in nb if a < b)
    assert h.m >= g.m - g.degree(v)


@given(graph_with_edge())
def test_edge_contraction_keeps_smaller_id(ge):
    g, (a, b) = ge
    h = contract_edge(g, (a, b))
    assert a in h.vertices and b not in h.vertices
    want = (set(g.neighbors(a)) | set(g.neighbors(b))) - {a, b}
    assert set(h.neighbors(a)) == want


@given(graphs())
def test_components_partition_vertices(g):
    comps = component_masks(g)
    total = 0
    for c in comps:
        assert total & c == 0
        total |= c
        assert is_connected(induced_subgraph(g, vertices_of(c)))
    assert total == g.vertex_mask


def _naive_cut_vertices(g):
    base = len(component_masks(g))
    return [v for v in g.vertices if len(component_masks(delete_vertex(g, v))) > base]


@given(graphs(max_n=9))
def test_articulations_match_naive(g):
    assert find_articulations(g) == _naive_cut_vertices(g)


@given(graphs())
def test_dense_relabel_preserves_structure(g):
    h, mapping = relabel_dense(g)
    assert h.vertices == tuple(range(g.n))
    assert sorted((mapping[a], mapping[b]) for a, b in g.edges()) == h.edges()


def test_disjoint_union_and_shared_union():
    u = disjoint_union(Graph.complete(2), Graph([2, 3, 4], [(2, 3), (3, 4), (2, 4)]))
    assert (u.n, u.m, len(component_masks(u))) == (5, 4, 2)
    with pytest.raises(GraphError):
        disjoint_union(Graph.complete(2), Graph.complete(3))
    s = union_on_shared(Graph([0, 1], [(0, 1)]), Graph([1, 2], [(1, 2)]))
    assert s == Graph.path(3)


def test_corona_shape():
    c = corona(Graph.path(2), Graph.complete(2))
    assert c.n == 6 and c.m == 1 + 2 * (1 + 2)
    with pytest.raises(GraphError):
        corona(Graph.empty(0), Graph.complete(1))


@given(graphs(min_n=1, max_n=4), graphs(min_n=0, max_n=3))
def test_corona_degrees(g, h):
    c = corona(g, h)
    assert c.n == g.n * (1 + h.n)
    for v in g.vertices:
        assert c.degree(v) == g.degree(v) + h.n


def test_make_splitting_at_cut_vertex():
    s = make_splitting(P3, [1])
    s.validate()
    assert s.g1.vertices == (0, 1) and s.g2.vertices == (1, 2)
    assert s.graph == P3


def test_make_splitting_errors():
    with pytest.raises(GraphError):
        make_splitting(P3, [])
    with pytest.raises(GraphError):
        make_splitting(P3, [0, 1, 2])
    with pytest.raises(GraphError):
        make_splitting(Graph.complete(3), [0])
    with pytest.raises(GraphError):
        make_splitting(Graph.path(4), [1], side1=[2])


def test_splitting_places_inner_edges():
    k3 = Graph.complete(3)
    s1 = make_splitting(k3, [0, 1], side1=[])
    s2 = make_splitting(k3, [0, 1], side1=[], side_assignment={(0, 1): 2})
    assert s1.g1.edges() == [(0, 1)] and not s2.g1.edges()
    assert s1.graph == s2.graph == k3
