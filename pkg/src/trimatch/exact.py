"""Exact brute-force oracles for matching and independent-set counts.

Everything here is exact rational arithmetic (`fractions.Fraction`), so
identities like the telescoping product and the occupation-probability
recurrence can be asserted with zero tolerance.  Two independent routes
are provided for the independence polynomial: a branching recursion
with component splitting (`exact_zi`) and a per-subset enumeration
(`zi_by_enumeration`); tests double-book one against the other.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .blocks import pair_residual_block, residual_block
from .hypergraph import Hypergraph
from .intersection import IGraph, build_line_graph

Rational = Fraction | int


def exact_zi(g: IGraph, lam: Rational = 1) -> Fraction:
    """Sum of lam^|I| over independent sets I of g (empty set included).

    Branches on a maximum-degree vertex v via
    Z(G) = Z(G-v) + lam * Z(G-N[v]) and splits across connected
    components.  Exponential time; intended for desk-scale inputs.
    """
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError("lam must be positive")
    return _zi_branch(g, lam)


def _zi_branch(g: IGraph, lam: Fraction) -> Fraction:
    if g.is_empty():
        return Fraction(1)
    comps = g.connected_components()
    if len(comps) > 1:
        result = Fraction(1)
        for comp in comps:
            result *= _zi_branch(g.restricted(comp), lam)
        return result
    verts = g.vertices()
    v = max(verts, key=lambda u: (g.degree(u), -u))
    if g.degree(v) == 0:
        # single isolated vertex (the graph is connected here)
        return 1 + lam
    return _zi_branch(g.induced({v}), lam) + lam * _zi_branch(
        g.induced(g.closed_neighborhood(v)), lam
    )


def zi_by_enumeration(g: IGraph, lam: Rational = 1) -> Fraction:
    """Independent-set polynomial by checking all 2^n vertex subsets.

    Deliberately naive (the double-entry oracle for exact_zi); capped at
    24 active vertices.
    """
    lam = Fraction(lam)
    verts = g.vertices()
    n = len(verts)
    if n > 24:
        raise ValueError("enumeration oracle capped at 24 vertices")
    if n == 0:
        return Fraction(1)
    masks = np.arange(1 << n, dtype=np.int64)
    dependent = np.zeros(1 << n, dtype=bool)
    index = {v: i for i, v in enumerate(verts)}
    for v in verts:
        for u in g.neighbors(v):
            if u < v:
                both = (1 << index[u]) | (1 << index[v])
                dependent |= (masks & both) == both
    sizes = _popcount(masks[~dependent])
    counts = np.bincount(sizes, minlength=n + 1)
    total = Fraction(0)
    power = Fraction(1)
    for k in range(n + 1):
        total += int(counts[k]) * power
        power *= lam
    return total


def _popcount(a: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(a)
    out = np.zeros(a.shape, dtype=np.int64)
    work = a.copy()
    while work.any():
        out += work & 1
        work >>= 1
    return out


def exact_zm(h: Hypergraph, lam: Rational = 1) -> Fraction:
    """Matching partition function of h: Z_M(H, lam) = Z_I(L(H), lam)."""
    return exact_zi(build_line_graph(h), lam)


def exact_pi(g: IGraph, k, lam: Rational = 1) -> Fraction:
    """Probability that a lam-weighted random independent set avoids k:
    Z_I(g-k) / Z_I(g)."""
    k = frozenset(k)
    if not k <= g.active:
        raise ValueError("k contains inactive vertices")
    lam = Fraction(lam)
    return _zi_branch(g.induced(k), lam) / _zi_branch(g, lam)


def pi_inverse_via_recurrence(g: IGraph, k, lam: Rational = 1) -> Fraction:
    """1/Pi_G(K) assembled from the occupation recurrence over residual
    blocks, each factor evaluated by the exact oracle.

    For a simplicial block K:
        1/Pi = 1 + lam * sum_v Pi_{G-K}(K_v)
                     * (1 + lam/2 * sum_u Pi_{G-K-K_v}(K_uv))
    with the inner sum over ordered pairs (u, v) of distinct nonadjacent
    members.  Exact rational identity against 1/exact_pi(g, k).
    """
    k = frozenset(k)
    lam = Fraction(lam)
    g_k = g.induced(k)
    total = Fraction(1)
    for v in sorted(k):
        kv = residual_block(g, k, v)
        pi_v = exact_pi(g_k, kv, lam)
        inner = Fraction(0)
        for u in sorted(k):
            if u == v or g.has_edge(u, v):
                continue
            kuv = pair_residual_block(g, k, u, v)
            inner += exact_pi(g_k.induced(kv), kuv, lam)
        total += lam * pi_v * (1 + Fraction(lam, 2) * inner)
    return total
