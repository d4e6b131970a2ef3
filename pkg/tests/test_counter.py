from fractions import Fraction

import pytest

from trimatch.blocks import enumerate_simplicial_blocks
from trimatch.counter import (
    count_is,
    count_matchings,
    count_matchings_exact_mode,
    working_precision,
)
from trimatch.decay import PhiParams, as_fraction, required_t, saturation_t
from trimatch.exact import exact_zi, exact_zm
from trimatch.hypergraph import Hypergraph, gen_random_33, named_instance
from trimatch.intersection import IGraph, build_line_graph


def test_count_is_single_vertex():
    g = IGraph.from_edges(1, [])
    val = count_is(g, {0}, PhiParams(t=4))
    assert abs(val - 2) < 1e-30


def test_count_is_triangle_saturated():
    g = IGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    val = count_is(g, {0}, PhiParams(t=saturation_t(3)))
    assert abs(val - 4) < 1e-30


def test_count_is_truncation_zero_gives_one():
    g = IGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert count_is(g, {0}, PhiParams(t=0)) == 1


def test_fixture_counts():
    for name, expected in (("triple", 2), ("two-disjoint", 4), ("two-sharing", 3), ("fano", 8)):
        res = count_matchings(named_instance(name), 0.1)
        assert abs(res.value - expected) <= 0.1 * expected
        assert res.certified


def test_exact_mode_delegates():
    h = named_instance("fano")
    assert count_matchings_exact_mode(h) == exact_zm(h) == 8
    assert count_matchings_exact_mode(h, Fraction(1, 2)) == exact_zm(h, Fraction(1, 2))


def test_no_edges_counts_one():
    h = Hypergraph.from_edges(5, [])
    res = count_matchings(h, 0.5)
    assert res.value == 1
    assert res.n_components == 0
    assert res.certified


def test_rejects_invalid_inputs():
    h = Hypergraph.from_edges(9, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (0, 7, 8)])
    with pytest.raises(ValueError):
        count_matchings(h, 0.1)
    with pytest.raises(ValueError):
        count_matchings(named_instance("triple"), 0.0)
    with pytest.raises(ValueError):
        count_matchings(named_instance("triple"), 1.0)


def test_metadata_fields():
    h = named_instance("fano")
    res = count_matchings(h, 0.25)
    g = build_line_graph(h)
    assert res.n_vertices == len(g) == 7
    assert res.required_t == required_t(7, 0.25)
    assert res.t_used == min(res.required_t, saturation_t(7))
    assert res.precision == working_precision(7)
    assert res.epsilon == 0.25


def test_effort_monotone_in_epsilon():
    h = gen_random_33(12, 9, 17)
    prev = -1
    for eps in (0.9, 0.5, 0.1, 0.01):
        res = count_matchings(h, eps)
        assert res.t_used >= prev
        prev = res.t_used


def test_component_factorization_is_exact_product():
    h = Hypergraph.from_edges(12, [(0, 1, 2), (3, 4, 5), (6, 7, 8), (6, 9, 10)])
    res = count_matchings(h, 0.1)
    parts = [
        count_matchings(Hypergraph.from_edges(12, [e for e in h.edges if set(e) & comp]), 0.1)
        for comp in ({0, 1, 2}, {3, 4, 5}, {6, 7, 8, 9, 10})
    ]
    product = parts[0].value * parts[1].value * parts[2].value
    assert res.value == product
    assert res.n_components == 3


def test_saturated_runs_match_oracle_tightly():
    for seed in range(6):
        h = gen_random_33(11, 9, seed)
        n = len(build_line_graph(h))
        res = count_matchings(h, 0.1, t=saturation_t(n))
        exact = exact_zm(h)
        rel = abs(as_fraction(res.value) - exact) / exact
        assert rel <= Fraction(1, 10**12)


def test_t_override_and_certification():
    h = named_instance("fano")
    res = count_matchings(h, 0.1, t=0)
    assert not res.certified
    # K_7 peels never reach the truncated recurrence (F - N[v] is always
    # empty), so even t=0 yields the exact count here
    assert res.value == 8
    res2 = count_matchings(h, 0.1, t=saturation_t(7))
    assert res2.certified


def test_t_zero_truly_truncates_on_sparse_instance():
    h = gen_random_33(12, 8, 4)
    res = count_matchings(h, 0.1, t=0)
    # every count_is factor collapses to 1, so each component contributes
    # 1 + lambda * (number of peeled vertices)
    g = build_line_graph(h)
    expected = 1
    for comp in g.connected_components():
        expected *= 1 + len(comp)
    assert res.value == expected
    assert float(res.value) != float(exact_zm(h))


def test_uncertified_lambda_flagged():
    h = named_instance("triple")
    res = count_matchings(h, 0.1, lam=Fraction(12, 10))
    assert not res.certified
    # saturated truncation still yields the exact weighted count
    assert abs(as_fraction(res.value) - (1 + Fraction(12, 10))) < Fraction(1, 2**80)


def test_weighted_counts_match_oracle():
    for seed in (2, 9, 23):
        h = gen_random_33(10, 8, seed)
        for lam in (Fraction(1, 4), Fraction(1, 2), Fraction(1077, 1000)):
            res = count_matchings(h, 0.1, lam=lam)
            target = exact_zm(h, lam)
            assert abs(float(res.value) - float(target)) <= 0.1 * float(target)


def test_count_is_matches_zi_on_components(corpus_graphs):
    for _, g in corpus_graphs[:12]:
        for comp in g.connected_components():
            sub = g.restricted(comp)
            seed_block = next(iter(enumerate_simplicial_blocks(sub)), None)
            if seed_block is None:
                continue
            val = count_is(sub, seed_block, PhiParams(t=saturation_t(len(sub))))
            assert abs(val - float(exact_zi(sub))) < 1e-20 * float(exact_zi(sub))
