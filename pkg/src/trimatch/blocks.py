"""Blocks, simplicial blocks, and the constructive block machinery.

A block is a vertex set K with no independent triple inside, |K| <= 4,
and no isolated vertex in G[K] when |K| = 4 (the empty set is a block).
A block is simplicial if each member's residual neighborhood N(v)\\K is
again a block in G-K.  On intersection graphs of (3,3)-graphs these
notions are self-reproducing: residual neighborhoods of simplicial
blocks are simplicial blocks of the residual graph, which is what makes
the telescoping product and the decay recurrence well defined.

The guarantees only hold on graphs with the structural properties of
such intersection graphs.  When claim verification is enabled (default:
on under __debug__), every derived block is re-checked and a
StructureError with a diagnostic is raised on violation; with it
disabled the claims are trusted.
"""

from __future__ import annotations

from itertools import combinations

from .errors import StructureError
from .intersection import IGraph

_verify_claims = __debug__


def set_claim_verification(enabled: bool) -> bool:
    """Toggle re-checking of claim-guaranteed simpliciality; returns old value."""
    global _verify_claims
    old = _verify_claims
    _verify_claims = bool(enabled)
    return old


def claim_verification_enabled() -> bool:
    return _verify_claims


def is_block(g: IGraph, s) -> bool:
    """True iff s is a block of g: alpha(G[s]) <= 2, |s| <= 4, and
    no isolated vertex inside when |s| = 4."""
    s = frozenset(s)
    if not s <= g.active:
        raise ValueError("set contains inactive vertices")
    if len(s) > 4:
        return False
    for triple in combinations(sorted(s), 3):
        if all(not g.has_edge(a, b) for a, b in combinations(triple, 2)):
            return False
    if len(s) == 4:
        for v in s:
            if all(not g.has_edge(v, u) for u in s if u != v):
                return False
    return True


def is_simplicial_block(g: IGraph, s) -> bool:
    """True iff s is a block and every member's residual neighborhood
    N(v)\\s is a block of g-s."""
    s = frozenset(s)
    if not is_block(g, s):
        return False
    residual = g.induced(s)
    return all(is_block(residual, g.neighborhood(v) - s) for v in s)


def _require_block(g_res: IGraph, s: frozenset[int], what: str) -> frozenset[int]:
    """Validate a claim-derived set; size-5 residuals and other failures
    mean the input graph lacks the assumed structure."""
    if len(s) > 4:
        raise StructureError(
            f"{what} has size {len(s)} > 4: the graph does not have the "
            "neighborhood structure of an intersection graph of a (3,3)-graph"
        )
    if not is_block(g_res, s):
        raise StructureError(f"{what} {sorted(s)} is not a block of the residual graph")
    if _verify_claims and not is_simplicial_block(g_res, s):
        raise StructureError(
            f"{what} {sorted(s)} is not simplicial in the residual graph "
            "(claim verification enabled)"
        )
    return s


def residual_block(g: IGraph, k, v: int) -> frozenset[int]:
    """K_v = N(v)\\K as a block of g-K, for v in the simplicial block K."""
    k = frozenset(k)
    if v not in k:
        raise ValueError(f"vertex {v} not in the block")
    kv = g.neighborhood(v) - k
    return _require_block(g.induced(k), kv, f"residual neighborhood of {v}")


def pair_residual_block(g: IGraph, k, u: int, v: int) -> frozenset[int]:
    """K_uv = N(u)\\(N(v) u K) as a block of g-K-K_v, for a non-adjacent
    ordered pair u != v inside the simplicial block K."""
    k = frozenset(k)
    if u not in k or v not in k:
        raise ValueError("u and v must both lie in the block")
    if u == v:
        raise ValueError("u and v must be distinct")
    if g.has_edge(u, v):
        raise ValueError(f"{u} and {v} are adjacent inside the block")
    kv = g.neighborhood(v) - k
    kuv = g.neighborhood(u) - g.neighborhood(v) - k
    return _require_block(
        g.induced(k | kv), kuv, f"pair residual neighborhood of ({u},{v})"
    )


def block_partition(g: IGraph, seed) -> list[frozenset[int]]:
    """Partition the vertices of connected g into nested simplicial blocks.

    K_1 is the seed; while vertices remain, the earliest placed vertex
    (blocks in placement order, ids ascending within a block) with a
    neighbor in the residual R contributes N(v) & R as the next block.
    """
    seed = frozenset(seed)
    if g.is_empty():
        raise StructureError("block_partition on an empty graph")
    if not seed:
        raise StructureError("seed block must be nonempty")
    if not g.is_connected():
        raise StructureError("block_partition requires a connected graph")
    if _verify_claims and not is_simplicial_block(g, seed):
        raise StructureError(f"seed {sorted(seed)} is not a simplicial block")
    parts = [seed]
    remaining = g.active - seed
    placed_order = sorted(seed)
    while remaining:
        grower = None
        for v in placed_order:
            if g.neighborhood(v) & remaining:
                grower = v
                break
        if grower is None:
            raise StructureError("residual set unreachable from placed blocks")
        nxt = g.neighborhood(grower) & remaining
        if _verify_claims and not is_simplicial_block(g.restricted(remaining), nxt):
            raise StructureError(
                f"derived block {sorted(nxt)} is not simplicial in the residual"
            )
        parts.append(frozenset(nxt))
        placed_order.extend(sorted(nxt))
        remaining -= nxt
    return parts


def seed_blocks_after_delete(g: IGraph, v: int) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Seed blocks for the components of g - N[v].

    For each component C, the smallest neighbor u of v with a neighbor
    in C yields the block N(u) & C, simplicial in g[C].  Requires g and
    g - v connected (v from non_cut_vertex).
    """
    if v not in g.active:
        raise ValueError(f"vertex {v} not active")
    gv = g.induced(g.closed_neighborhood(v))
    out = []
    for comp in gv.connected_components():
        block = None
        for u in sorted(g.neighborhood(v)):
            hit = g.neighborhood(u) & comp
            if hit:
                block = hit
                break
        if block is None:
            raise StructureError(
                f"component {sorted(comp)} of g - N[{v}] has no neighbor of a "
                f"neighbor of {v}; is g - {v} connected?"
            )
        comp_graph = g.restricted(comp)
        _require_block(comp_graph, block, f"seed block for component of g - N[{v}]")
        out.append((comp, block))
    return out


def enumerate_simplicial_blocks(g: IGraph, include_empty: bool = False):
    """Yield every simplicial block of g (sizes 1..4, plus optionally the
    empty one), in lexicographic order of the sorted member tuple."""
    if include_empty:
        yield frozenset()
    verts = g.vertices()
    for size in (1, 2, 3, 4):
        for combo in combinations(verts, size):
            s = frozenset(combo)
            if is_simplicial_block(g, s):
                yield s
