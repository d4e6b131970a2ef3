"""Intersection graphs and induced-subgraph views.

The intersection graph of a hypergraph has one vertex per hyperedge,
two vertices being adjacent iff the edges share a vertex.  For a
(3,3)-graph the result is 4-claw-free with maximum degree 6, and every
vertex of degree d >= 5 has at most 6-d isolated vertices in its
induced neighborhood; `check_structure` verifies exactly these three
properties.

Induced subgraphs are mask-based views sharing the base adjacency, so
the deeply nested residual graphs of the decay recursion stay cheap and
their active-vertex sets double as memoization keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import StructureError
from .hypergraph import Hypergraph


class IGraph:
    """Simple undirected graph with an active-vertex mask.

    The base adjacency (`_adj`) is immutable and shared between views;
    `active` is the frozenset of vertices the view exposes.  Neighbor
    queries reflect only active vertices.
    """

    __slots__ = ("_adj", "active")

    def __init__(self, adj: tuple[tuple[int, ...], ...], active: frozenset[int] | None = None):
        self._adj = adj
        self.active = frozenset(range(len(adj))) if active is None else active

    @classmethod
    def from_edges(cls, n: int, pairs) -> "IGraph":
        """Build a standalone graph from vertex count and edge pairs."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in pairs:
            if u == v:
                raise ValueError("loops are not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(tuple(sorted(s)) for s in nbrs))

    # -- basic queries -------------------------------------------------

    def __len__(self) -> int:
        return len(self.active)

    def is_empty(self) -> bool:
        return not self.active

    def vertices(self) -> list[int]:
        return sorted(self.active)

    def neighbors(self, v: int) -> list[int]:
        return [u for u in self._adj[v] if u in self.active]

    def neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(self.neighbors(v))

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.neighborhood(v) | {v}

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def max_degree(self) -> int:
        return max((self.degree(v) for v in self.active), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return u in self.active and v in self.active and v in self._adj[u]

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in self.active) // 2

    # -- views ---------------------------------------------------------

    def induced(self, removed) -> "IGraph":
        """View with `removed` deactivated; the base graph is unchanged."""
        removed = frozenset(removed)
        if not removed <= self.active:
            raise ValueError("removed set contains inactive or unknown vertices")
        return IGraph(self._adj, self.active - removed)

    def restricted(self, keep) -> "IGraph":
        """View exposing only `keep` (must be a subset of the active set)."""
        keep = frozenset(keep)
        if not keep <= self.active:
            raise ValueError("keep set contains inactive or unknown vertices")
        return IGraph(self._adj, keep)

    def same_base(self, other: "IGraph") -> bool:
        return self._adj is other._adj

    def __eq__(self, other) -> bool:
        if not isinstance(other, IGraph):
            return NotImplemented
        return self._adj is other._adj and self.active == other.active

    def __hash__(self):
        return hash((id(self._adj), self.active))

    def __repr__(self) -> str:
        return f"IGraph({len(self.active)} active of {len(self._adj)}, {self.edge_count()} edges)"

    # -- connectivity --------------------------------------------------

    def connected_components(self) -> list[frozenset[int]]:
        """Maximal connected active vertex sets, ordered by smallest id."""
        seen: set[int] = set()
        comps = []
        for start in self.vertices():
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            seen.add(start)
            while stack:
                v = stack.pop()
                for u in self.neighbors(v):
                    if u not in seen:
                        seen.add(u)
                        comp.add(u)
                        stack.append(u)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1


def build_line_graph(h: Hypergraph) -> IGraph:
    """Intersection graph: one vertex per edge of h, adjacent iff they meet."""
    incident: dict[int, list[int]] = {}
    for i, e in enumerate(h.edges):
        for v in e:
            incident.setdefault(v, []).append(i)
    nbrs: list[set[int]] = [set() for _ in range(h.m)]
    for ids in incident.values():
        for i, j in combinations(ids, 2):
            nbrs[i].add(j)
            nbrs[j].add(i)
    return IGraph(tuple(tuple(sorted(s)) for s in nbrs))


@dataclass(frozen=True)
class StructReport:
    """Result of the three structural checks on an intersection graph."""

    claw_free_4: bool
    max_degree: int
    neighborhood_ok: bool
    claw_witnesses: tuple[frozenset[int], ...]
    degree_witnesses: tuple[int, ...]
    neighborhood_witnesses: tuple[frozenset[int], ...]

    @property
    def passes(self) -> bool:
        return self.claw_free_4 and self.max_degree <= 6 and self.neighborhood_ok


def check_structure(g: IGraph) -> StructReport:
    """Check 4-claw-freeness, the degree bound 6, and the neighborhood rule.

    The neighborhood rule: every vertex of degree d >= 5 induces a
    neighborhood with at most 6-d isolated vertices.  Witnesses are the
    violating vertex sets (at most one claw per center is recorded).
    """
    claws = []
    nbhd_bad = []
    deg_bad = []
    for v in g.vertices():
        nb = g.neighbors(v)
        d = len(nb)
        if d > 6:
            deg_bad.append(v)
        for four in combinations(nb, 4):
            if all(not g.has_edge(a, b) for a, b in combinations(four, 2)):
                claws.append(frozenset((v, *four)))
                break
        if d >= 5:
            isolated = [
                u for u in nb if all(not g.has_edge(u, w) for w in nb if w != u)
            ]
            if len(isolated) > 6 - d:
                nbhd_bad.append(frozenset((v, *isolated)))
    return StructReport(
        claw_free_4=not claws,
        max_degree=g.max_degree(),
        neighborhood_ok=not nbhd_bad,
        claw_witnesses=tuple(claws),
        degree_witnesses=tuple(deg_bad),
        neighborhood_witnesses=tuple(nbhd_bad),
    )


def non_cut_vertex(g: IGraph) -> int:
    """A vertex whose removal keeps g connected, chosen reproducibly.

    Builds a depth-first spanning tree from the smallest active id and
    returns the smallest vertex of tree degree 1 (the root counts when
    it has a single child; such a root is never a cut vertex of a DFS
    tree, and neither is any leaf).
    """
    verts = g.vertices()
    if not verts:
        raise StructureError("non_cut_vertex on an empty graph")
    if len(verts) == 1:
        return verts[0]
    root = verts[0]
    tree_deg = {v: 0 for v in verts}
    seen = {root}
    stack: list[tuple[int, list[int]]] = [(root, g.neighbors(root))]
    while stack:
        v, pending = stack[-1]
        while pending:
            u = pending.pop(0)
            if u not in seen:
                seen.add(u)
                tree_deg[v] += 1
                tree_deg[u] += 1
                stack.append((u, g.neighbors(u)))
                break
        else:
            stack.pop()
    if len(seen) != len(verts):
        raise StructureError("non_cut_vertex on a disconnected graph")
    return min(v for v in verts if tree_deg[v] == 1)
