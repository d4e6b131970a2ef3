"""Shared corpus: the named fixtures plus 50 seeded random instances."""

from __future__ import annotations

import pytest

from trimatch.hypergraph import Hypergraph, gen_random_33, named_instance
from trimatch.intersection import IGraph, build_line_graph

FIXTURE_NAMES = ("triple", "two-disjoint", "two-sharing", "fano")


def seeded_instances(count: int = 50) -> list[Hypergraph]:
    """Deterministic corpus of (3,3)-graphs with 6..12 edges."""
    out = []
    for seed in range(count):
        n = 9 + seed % 7
        m = 6 + (seed * 5) % 7
        out.append(gen_random_33(n, m, seed))
    return out


@pytest.fixture(scope="session")
def corpus() -> list[Hypergraph]:
    return [named_instance(name) for name in FIXTURE_NAMES] + seeded_instances()


@pytest.fixture(scope="session")
def corpus_graphs(corpus) -> list[tuple[Hypergraph, IGraph]]:
    return [(h, build_line_graph(h)) for h in corpus]
