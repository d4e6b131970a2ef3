"""3-uniform hypergraphs with bounded vertex degree.

Vertices are dense integer ids 0..n-1; edges are stored as sorted
3-tuples, and the edge list itself is kept sorted, so that the position
of an edge (its EdgeId) is reproducible across runs. Isolated vertices
are permitted: they join no edge and therefore affect no matching.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import ParseError

Edge = tuple[int, int, int]

MAX_DEGREE = 3


@dataclass(frozen=True)
class Hypergraph:
    """A 3-uniform hypergraph on vertex ids 0..n-1.

    `edges` is a lexicographically sorted tuple of sorted 3-tuples.
    Instances built through `from_edges` / `parse` / `gen_random_33` are
    well formed; `validate_33` re-checks everything and reports the
    degree bound.
    """

    n: int
    edges: tuple[Edge, ...]

    @classmethod
    def from_edges(cls, n: int, edges) -> "Hypergraph":
        """Canonicalize and build, rejecting malformed or duplicate edges."""
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = []
        for e in edges:
            e = tuple(sorted(e))
            if len(e) != 3 or len(set(e)) != 3:
                raise ValueError(f"edge {e} does not have 3 distinct vertices")
            if e[0] < 0 or e[2] >= n:
                raise ValueError(f"edge {e} has a vertex outside 0..{n - 1}")
            canon.append(e)
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        return cls(n, tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        d = [0] * self.n
        for e in self.edges:
            for v in e:
                d[v] += 1
        return d

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the (3,3)-membership test, with every violation listed."""

    ok: bool
    max_degree: int
    degree_violations: tuple[tuple[int, int], ...]  # (vertex, degree)
    edge_violations: tuple[tuple[int, str], ...]  # (edge index, reason)


def validate_33(h: Hypergraph) -> ValidationReport:
    """Check that h is a (3,3)-graph; never raises, reports all failures."""
    edge_bad = []
    degree = [0] * max(h.n, 0)
    for i, e in enumerate(h.edges):
        if len(e) != 3 or len(set(e)) != 3:
            edge_bad.append((i, "not 3 distinct vertices"))
            continue
        if min(e) < 0 or max(e) >= h.n:
            edge_bad.append((i, "vertex id out of range"))
            continue
        for v in e:
            degree[v] += 1
    for i, e in enumerate(h.edges):
        if i > 0 and h.edges[i - 1] == e:
            edge_bad.append((i, "duplicate edge"))
    deg_bad = tuple((v, d) for v, d in enumerate(degree) if d > MAX_DEGREE)
    max_deg = max(degree, default=0)
    ok = not edge_bad and not deg_bad
    return ValidationReport(ok, max_deg, deg_bad, tuple(edge_bad))


def components(h: Hypergraph) -> list[Hypergraph]:
    """Split h into maximal groups of edges connected by shared vertices.

    Components keep the original vertex ids (and n); they are returned
    ordered by their smallest edge index.
    """
    m = h.m
    parent = list(range(m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_vertex: dict[int, int] = {}
    for i, e in enumerate(h.edges):
        for v in e:
            if v in by_vertex:
                ra, rb = find(by_vertex[v]), find(i)
                if ra != rb:
                    parent[rb] = ra
            else:
                by_vertex[v] = i
    groups: dict[int, list[Edge]] = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(h.edges[i])
    return [
        Hypergraph.from_edges(h.n, grp)
        for _, grp in sorted(groups.items())
    ]


def parse(text) -> Hypergraph:
    """Parse the canonical text format.

    Lines starting with '#' are comments.  The first data line is
    "n m"; then m lines each with three space-separated vertex ids.
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    header: tuple[int, int] | None = None
    edges: list[tuple[int, ...]] = []
    header_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            fields = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(fields) != 2:
                raise ParseError("expected header 'n m'", lineno)
            header = (fields[0], fields[1])
            header_line = lineno
            if header[0] < 0 or header[1] < 0:
                raise ParseError("n and m must be nonnegative", lineno)
            continue
        if len(fields) != 3:
            raise ParseError(f"edge arity {len(fields)} != 3", lineno)
        if len(set(fields)) != 3:
            raise ParseError("edge vertices not distinct", lineno)
        if min(fields) < 0 or max(fields) >= header[0]:
            raise ParseError("vertex id out of range", lineno)
        edges.append(tuple(fields))
    if header is None:
        raise ParseError("no header line found")
    n, m = header
    if len(edges) != m:
        raise ParseError(
            f"header promised {m} edges, found {len(edges)}", header_line
        )
    try:
        return Hypergraph.from_edges(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def serialize(h: Hypergraph) -> str:
    """Canonical text form; parse(serialize(h)) == h."""
    lines = [f"{h.n} {h.m}"]
    lines.extend(f"{a} {b} {c}" for a, b, c in h.edges)
    return "\n".join(lines) + "\n"


def gen_random_33(n: int, m: int, seed: int) -> Hypergraph:
    """Seeded rejection sampler for (3,3)-graphs with at most m edges.

    Repeatedly draws a uniform 3-subset of the vertices and accepts it
    iff it is new and all three degrees stay below 3.  Gives up after
    100*m draws, so the result may have fewer than m edges.
    """
    if n < 3:
        raise ValueError("need at least 3 vertices")
    rng = random.Random(seed)
    degree = [0] * n
    chosen: set[Edge] = set()
    budget = 100 * m
    while len(chosen) < m and budget > 0:
        budget -= 1
        e = tuple(sorted(rng.sample(range(n), 3)))
        if e in chosen:
            continue
        if any(degree[v] >= MAX_DEGREE for v in e):
            continue
        chosen.add(e)
        for v in e:
            degree[v] += 1
    return Hypergraph.from_edges(n, sorted(chosen))


#: Fixture catalog.  "fano" is the 7-point Fano plane: every point lies on
#: exactly 3 lines and any two lines meet, so its intersection graph is K_7.
_FANO_LINES = (
    (0, 1, 2), (0, 3, 4), (0, 5, 6),
    (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5),
)

_CATALOG: dict[str, tuple[int, tuple[tuple[int, int, int], ...]]] = {
    "triple": (3, ((0, 1, 2),)),
    "two-disjoint": (6, ((0, 1, 2), (3, 4, 5))),
    "two-sharing": (5, ((0, 1, 2), (2, 3, 4))),
    "fano": (7, _FANO_LINES),
}


def named_instance(name: str) -> Hypergraph:
    """Look up a fixture by name ('triple', 'two-disjoint', 'two-sharing', 'fano')."""
    try:
        n, edges = _CATALOG[name]
    except KeyError:
        raise KeyError(
            f"unknown instance {name!r}; known: {', '.join(sorted(_CATALOG))}"
        ) from None
    return Hypergraph.from_edges(n, edges)


def instance_names() -> list[str]:
    return sorted(_CATALOG)
