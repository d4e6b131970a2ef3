import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trimatch.errors import StructureError
from trimatch.hypergraph import Hypergraph, gen_random_33, named_instance
from trimatch.intersection import (
    IGraph,
    build_line_graph,
    check_structure,
    non_cut_vertex,
)


def k7():
    return IGraph.from_edges(7, [(i, j) for i in range(7) for j in range(i + 1, 7)])


def star_k14():
    return IGraph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])


def path(n):
    return IGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def test_line_graph_disjoint_triples():
    g = build_line_graph(named_instance("two-disjoint"))
    assert len(g) == 2 and g.edge_count() == 0


def test_line_graph_sharing_triples():
    g = build_line_graph(named_instance("two-sharing"))
    assert len(g) == 2 and g.edge_count() == 1


def test_line_graph_fano_is_k7():
    g = build_line_graph(named_instance("fano"))
    assert len(g) == 7 and g.edge_count() == 21


def test_structure_passes_on_corpus(corpus_graphs):
    for _, g in corpus_graphs:
        report = check_structure(g)
        assert report.passes
        assert report.max_degree <= 6
        assert not report.claw_witnesses


def test_structure_fails_on_star():
    report = check_structure(star_k14())
    assert not report.claw_free_4
    assert report.claw_witnesses == (frozenset(range(5)),)
    assert not report.passes


def test_structure_passes_on_k7():
    report = check_structure(k7())
    assert report.passes
    assert report.max_degree == 6


def test_structure_neighborhood_violation():
    # degree-5 vertex whose neighborhood spans a single edge: 3 isolated > 1
    edges = [(0, i) for i in range(1, 6)] + [(1, 2)]
    report = check_structure(IGraph.from_edges(6, edges))
    assert not report.neighborhood_ok
    assert report.neighborhood_witnesses


def test_induced_identity_and_empty():
    g = k7()
    assert g.induced(()) == g
    assert g.induced(range(7)).is_empty()


def test_induced_k7_minus_vertex():
    g = k7().induced({3})
    assert len(g) == 6 and g.edge_count() == 15
    assert 3 not in g.neighbors(0)


def test_induced_composition(corpus_graphs):
    for _, g in corpus_graphs:
        verts = g.vertices()
        if len(verts) < 3:
            continue
        a, b = {verts[0]}, {verts[-1]}
        assert g.induced(a).induced(b) == g.induced(a | b)


def test_components_and_connectivity():
    g = IGraph.from_edges(2, [])
    assert g.connected_components() == [frozenset({0}), frozenset({1})]
    assert k7().connected_components() == [frozenset(range(7))]
    p = path(3).induced({1})
    assert len(p.connected_components()) == 2
    assert IGraph.from_edges(0, []).connected_components() == []


def test_non_cut_vertex_examples():
    single = IGraph.from_edges(1, [])
    assert non_cut_vertex(single) == 0
    assert non_cut_vertex(path(3)) == 0  # never the middle vertex
    assert non_cut_vertex(k7()) == 0


def test_non_cut_vertex_star_center_avoided():
    assert non_cut_vertex(star_k14()) in {1, 2, 3, 4}


def test_non_cut_vertex_errors():
    with pytest.raises(StructureError):
        non_cut_vertex(IGraph.from_edges(0, []))
    with pytest.raises(StructureError):
        non_cut_vertex(IGraph.from_edges(2, []))


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_non_cut_vertex_keeps_connected(seed):
    h = gen_random_33(10, 8, seed)
    g = build_line_graph(h)
    for comp in g.connected_components():
        sub = g.restricted(comp)
        if len(sub) < 2:
            continue
        v = non_cut_vertex(sub)
        assert sub.induced({v}).is_connected()


def test_max_degree_bound_on_line_graphs(corpus_graphs):
    # each of the 3 vertices of an edge lies in at most 2 other edges
    for _, g in corpus_graphs:
        assert g.max_degree() <= 6


def test_neighbor_queries_respect_mask():
    g = k7()
    view = g.induced({1, 2})
    assert view.neighbors(0) == [3, 4, 5, 6]
    assert view.degree(0) == 4
    assert not view.has_edge(0, 1)
    with pytest.raises(ValueError):
        view.induced({1})
