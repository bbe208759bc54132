"""Bit-vector graphs.

A graph on n vertices is stored as one Python int per vertex: bit j of
``rows[i]`` is set iff i and j are adjacent.  All searches in this package
work directly on these row tuples; the :class:`Graph` wrapper validates and
hashes them at API boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidGraph, OrderTooLarge

MAX_VERTICES = 64
MAX_VERTICES_EXTENDED = 128


def bits(mask: int):
    """Iterate over the set bit positions of mask, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class Graph:
    """Immutable undirected simple graph with bit-vector adjacency rows."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows, max_vertices: int = MAX_VERTICES_EXTENDED):
        rows = tuple(rows)
        if n < 0 or n > max_vertices:
            raise OrderTooLarge(f"order {n} outside [0, {max_vertices}]")
        if len(rows) != n:
            raise InvalidGraph(f"expected {n} rows, got {len(rows)}")
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row & ~full:
                raise InvalidGraph(f"row {u} has bits at positions >= {n}")
            if row >> u & 1:
                raise InvalidGraph(f"self-loop at vertex {u}")
        for u in range(n):
            ru = rows[u]
            for v in bits(ru >> (u + 1) << (u + 1)):
                if not rows[v] >> u & 1:
                    raise InvalidGraph(f"asymmetric adjacency for ({u}, {v})")
        self.n = n
        self.rows = rows

    @classmethod
    def from_rows(cls, n: int, rows) -> "Graph":
        """Wrap pre-validated rows without re-checking (internal hot path)."""
        g = object.__new__(cls)
        g.n = n
        g.rows = tuple(rows)
        return g

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, e={self.edge_count()})"

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self):
        for u in range(self.n):
            for v in bits(self.rows[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def max_degree(self) -> int:
        return max((r.bit_count() for r in self.rows), default=0)


def from_edges(n: int, edges) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise InvalidGraph(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def is_triangle_free(g: Graph) -> bool:
    """True iff no three vertices are mutually adjacent."""
    rows = g.rows
    for u in range(g.n):
        ru = rows[u]
        for v in bits(ru >> (u + 1) << (u + 1)):
            if ru & rows[v]:
                return False
    return True


def triangle_free_rows(rows) -> bool:
    """Row-level triangle test for search internals."""
    for u, ru in enumerate(rows):
        for v in bits(ru >> (u + 1) << (u + 1)):
            if ru & rows[v]:
                return False
    return True


def induced_subgraph(g: Graph, mask: int) -> Graph:
    """Induced subgraph on the vertices of mask, preserving relative order."""
    keep = [v for v in bits(mask)]
    rows = []
    for u in keep:
        ru = g.rows[u]
        row = 0
        for j, v in enumerate(keep):
            if ru >> v & 1:
                row |= 1 << j
        rows.append(row)
    return Graph.from_rows(len(keep), rows)


def residual(g: Graph, v: int) -> Graph:
    """Subgraph induced on the non-neighbors of v, excluding v itself.

    Survivors keep their relative vertex order, so repeated pipelines are
    reproducible.
    """
    if not 0 <= v < g.n:
        raise InvalidGraph(f"vertex {v} out of range for order {g.n}")
    full = (1 << g.n) - 1
    return induced_subgraph(g, full & ~g.rows[v] & ~(1 << v))


def z_value(g: Graph, v: int) -> int:
    """Sum of the degrees of the neighbors of v."""
    if not 0 <= v < g.n:
        raise InvalidGraph(f"vertex {v} out of range for order {g.n}")
    return sum(g.rows[u].bit_count() for u in bits(g.rows[v]))


@dataclass(frozen=True)
class DegreeHistogram:
    """Counts of vertices per degree: counts[i] = number of degree-i vertices."""

    counts: tuple

    def __post_init__(self):
        if any(c < 0 for c in self.counts):
            raise InvalidGraph("negative degree count")
        if self.degree_sum() % 2:
            raise InvalidGraph("odd degree sum")

    @property
    def n(self) -> int:
        return sum(self.counts)

    def degree_sum(self) -> int:
        return sum(i * c for i, c in enumerate(self.counts))

    @property
    def edge_count(self) -> int:
        return self.degree_sum() // 2

    def as_dict(self) -> dict:
        return {i: c for i, c in enumerate(self.counts) if c}

    @classmethod
    def from_dict(cls, d: dict, size: int | None = None) -> "DegreeHistogram":
        top = max(d, default=-1)
        size = top + 1 if size is None else size
        counts = [0] * size
        for i, c in d.items():
            counts[i] = c
        return cls(tuple(counts))

    def __str__(self):
        inner = ", ".join(f"n_{i}={c}" for i, c in sorted(self.as_dict().items()))
        return "{" + inner + "}"


def degree_histogram(g: Graph) -> DegreeHistogram:
    counts = [0] * g.n if g.n else []
    for r in g.rows:
        counts[r.bit_count()] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return DegreeHistogram(tuple(counts))


def max_edge_bound(pattern_size: int, n: int) -> int:
    """Edge cap floor((k-1)n/2): max degree stays below the pattern size."""
    return (pattern_size - 1) * n // 2


# ---------------------------------------------------------------------------
# Small named graphs, used across tests and as search seeds.

def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph(g.n + h.n, rows)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~r & ~(1 << v) for v, r in enumerate(g.rows)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return from_edges(10, outer + inner + spokes)


def clebsch_graph() -> Graph:
    """Folded 5-cube: vertices are GF(2)^4 words, adjacent iff the
    difference has weight 1 or 4.  Triangle-free, 5-regular, 16 vertices."""
    diffs = [1, 2, 4, 8, 15]
    edges = []
    for x in range(16):
        for d in diffs:
            y = x ^ d
            if x < y:
                edges.append((x, y))
    return from_edges(16, edges)
