"""Top-level approximate counters.

`count_is` evaluates the telescoping product over a block partition:
Z_I(G) is estimated by prod_i 1/Phi_{G_i}(K_i, t) with G_{i+1} = G_i - K_i.
`count_matchings` peels non-cut vertices off each component of the
intersection graph (Z_I(F) = Z_I(F - v) + lam * Z_I(F - N[v])), counts
the second term per component with seed blocks from the post-deletion
construction, and multiplies component results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .blocks import block_partition, seed_blocks_after_delete
from .decay import (
    LAMBDA_CERTIFIED_MAX,
    PhiCache,
    PhiParams,
    _phi,
    _to_mpf,
    required_t,
    saturation_t,
)
from .exact import exact_zm
from .hypergraph import Hypergraph, validate_33
from .intersection import IGraph, build_line_graph, non_cut_vertex


@dataclass(frozen=True)
class ApproxCount:
    """FPTAS output: the estimate plus everything needed to audit it."""

    value: object  # mpmath mpf
    epsilon: float
    t_used: int
    certified: bool
    lam: Fraction
    n_vertices: int
    n_components: int
    required_t: int
    precision: int

    def __float__(self) -> float:
        return float(self.value)


def working_precision(n: int) -> int:
    """128-bit mantissa plus guard bits for a product that can reach 9^n."""
    return 128 + math.ceil(n * math.log2(9)) if n > 0 else 128


def count_is(g: IGraph, seed, params: PhiParams, cache: PhiCache | None = None):
    """Estimate Z_I(g, lam) for connected g from a simplicial seed block."""
    if cache is None:
        cache = PhiCache()
    cache.bind(g, params)
    with mp.workprec(params.prec):
        lam = _to_mpf(params.lam)
        return _count_is(g, frozenset(seed), params.t, lam, cache)


def _count_is(g: IGraph, seed: frozenset[int], t: int, lam, cache: PhiCache):
    result = mp.mpf(1)
    current = g
    for part in block_partition(g, seed):
        result /= _phi(current, part, t, lam, cache)
        current = current.induced(part)
    return result


def count_matchings(
    h: Hypergraph,
    epsilon: float,
    lam=1,
    t: int | None = None,
    prec: int | None = None,
) -> ApproxCount:
    """Approximate Z_M(h, lam) within relative error epsilon.

    The truncation depth defaults to min(required_t, 2|V(G)|+2): past the
    saturation depth Phi is constant in t (and exact), so the clamp loses
    nothing while keeping desk-scale runs fast.  A run is certified when
    lam lies in the proven interval and the depth reaches that minimum.
    """
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must lie in (0, 1)")
    report = validate_33(h)
    if not report.ok:
        raise ValueError(f"input is not a (3,3)-graph: {report}")
    g = build_line_graph(h)
    n = len(g)
    needed = required_t(n, epsilon) if n else 0
    sat = saturation_t(n)
    t_used = min(needed, sat) if t is None else t
    if t_used < 0:
        raise ValueError("t must be nonnegative")
    if prec is None:
        prec = working_precision(n)
    params = PhiParams(t=t_used, lam=lam, prec=prec)
    certified = params.lambda_certified and t_used >= min(needed, sat)
    cache = PhiCache()
    if n:
        cache.bind(g, params)
    components = g.connected_components()
    with mp.workprec(prec):
        lam_mp = _to_mpf(params.lam)
        value = mp.mpf(1)
        for comp in components:
            value *= _peel_component(g.restricted(comp), t_used, lam_mp, cache)
    return ApproxCount(
        value=value,
        epsilon=epsilon,
        t_used=t_used,
        certified=certified,
        lam=params.lam,
        n_vertices=n,
        n_components=len(components),
        required_t=needed,
        precision=prec,
    )


def _peel_component(g: IGraph, t: int, lam, cache: PhiCache):
    """One component of the peel loop; caller holds the precision context.

    Z starts at 1 (the empty independent set, reached when the peel
    exhausts the graph); each peeled vertex v adds lam times the estimate
    for Z_I(F - N[v]), the sets containing v.
    """
    z = mp.mpf(1)
    current = g
    while not current.is_empty():
        v = non_cut_vertex(current)
        beyond = current.induced(current.closed_neighborhood(v))
        if beyond.is_empty():
            z += lam
        else:
            term = lam
            for comp, seed in seed_blocks_after_delete(current, v):
                term *= _count_is(current.restricted(comp), seed, t, lam, cache)
            z += term
        current = current.induced({v})
    return z


def count_matchings_exact_mode(h: Hypergraph, lam=1) -> Fraction:
    """Dispatch to the exact rational oracle (small inputs / on request)."""
    return exact_zm(h, lam)
