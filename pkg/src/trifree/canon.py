"""Canonical forms for isomorphism rejection.

Strategy: iterative degree/neighborhood refinement of an ordered vertex
partition, then backtracking individualization of the first non-singleton
cell.  Every discrete partition reached yields a relabeling; the canonical
form is the lexicographically smallest upper-triangle adjacency bit string
(column-major, graph6 bit order) over all of them.

Two prunings keep symmetric graphs tractable: interchangeable "twin"
vertices inside a cell are individualized only once, and a branch dies as
soon as the bits fixed by its leading singleton run exceed the best known
certificate prefix.

Self-contained and deterministic; adequate at desk scale.  No external
canonical-labeling tool is involved.
"""

from __future__ import annotations

from .bitgraph import Graph, bits


def _refine(rows, cells):
    """Split cells by neighbor counts into every cell until stable.

    Sub-cells are ordered by their count signatures, so the refined
    partition depends only on the isomorphism type of the colored graph.
    """
    while True:
        changed = False
        new_cells = []
        for cell in cells:
            if cell & (cell - 1) == 0:  # singleton or empty
                new_cells.append(cell)
                continue
            groups: dict = {}
            for v in bits(cell):
                rv = rows[v]
                sig = 0
                for other in cells:
                    sig = sig << 7 | (rv & other).bit_count()
                if sig in groups:
                    groups[sig] |= 1 << v
                else:
                    groups[sig] = 1 << v
            if len(groups) > 1:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
            else:
                new_cells.append(cell)
        cells = new_cells
        if not changed:
            return cells


def _twin_representatives(rows, cell):
    """One vertex per interchangeable-twin class within the cell.

    u and v are twins when their rows agree outside {u, v}; the swap is then
    an automorphism, so only one of them needs to be individualized.
    """
    members = list(bits(cell))
    out = []
    for i, v in enumerate(members):
        key_v = rows[v] & ~(1 << v)
        for u in members[:i]:
            if key_v & ~(1 << u) == rows[u] & ~(1 << u) & ~(1 << v):
                break
        else:
            out.append(v)
    return out


_MAX_AUTOMORPHISM_GENERATORS = 48


class _Search:
    __slots__ = ("rows", "n", "total_bits", "best_val", "best_order", "autos")

    def __init__(self, rows, n):
        self.rows = rows
        self.n = n
        self.total_bits = n * (n - 1) // 2
        self.best_val = None
        self.best_order = None
        self.autos = []  # discovered automorphisms, as old->new arrays

    def extend_prefix(self, order, value, cells):
        """Fix leading singleton cells; append their certificate columns.

        Returns (order, value, rest_cells) or None when the prefix already
        compares worse than the best certificate.
        """
        rows = self.rows
        i = 0
        while i < len(cells) and cells[i] & (cells[i] - 1) == 0:
            v = cells[i].bit_length() - 1
            col = 0
            for u in order:
                col = col << 1 | (rows[v] >> u & 1)
            value = (value << len(order)) | col
            order = order + [v]
            i += 1
        if self.best_val is not None:
            fixed = len(order) * (len(order) - 1) // 2
            best_prefix = self.best_val >> (self.total_bits - fixed)
            if value > best_prefix:
                return None
        return order, value, cells[i:]

    def record_leaf(self, order, value):
        if self.best_val is None or value < self.best_val:
            self.best_val = value
            self.best_order = order
            return
        if value != self.best_val or order == self.best_order:
            return
        # Two orderings with identical certificates compose to an
        # automorphism; keep it (and its inverse) as pruning generators.
        if len(self.autos) >= _MAX_AUTOMORPHISM_GENERATORS:
            return
        perm = [0] * self.n
        for o, v in zip(self.best_order, order):
            perm[o] = v
        inv = [0] * self.n
        for o, v in enumerate(perm):
            inv[v] = o
        self.autos.append(perm)
        if inv != perm:
            self.autos.append(inv)

    def _equivalent_to_tried(self, order, v, tried_set):
        """Is v mapped onto an already-tried candidate by some automorphism
        that fixes the current prefix pointwise?"""
        live = [p for p in self.autos if all(p[x] == x for x in order)]
        if not live:
            return False
        seen = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for p in live:
                y = p[x]
                if y in tried_set:
                    return True
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return False

    def descend(self, order, value, cells):
        ext = self.extend_prefix(order, value, cells)
        if ext is None:
            return
        order, value, rest = ext
        if not rest:
            self.record_leaf(order, value)
            return
        cell = rest[0]
        tried: set = set()
        for v in _twin_representatives(self.rows, cell):
            if tried and self.autos and self._equivalent_to_tried(order, v, tried):
                continue
            tried.add(v)
            split = [1 << v, cell & ~(1 << v)] + rest[1:]
            self.descend(order, value, _refine(self.rows, split))


def _canonical_order(g: Graph):
    rows = g.rows
    n = g.n
    if n == 0:
        return [], 0
    by_degree: dict = {}
    for v in range(n):
        d = rows[v].bit_count()
        by_degree[d] = by_degree.get(d, 0) | 1 << v
    cells = _refine(rows, [by_degree[d] for d in sorted(by_degree)])
    search = _Search(rows, n)
    search.descend([], 0, cells)
    return search.best_order, search.best_val


def _pack(value: int | None, n: int) -> bytes:
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 7) // 8
    if nbytes == 0:
        return bytes([n])
    return bytes([n]) + ((value or 0) << (nbytes * 8 - nbits)).to_bytes(nbytes, "big")


def certificate(g: Graph) -> bytes:
    """Adjacency bit string of g as labeled (column-major upper triangle).

    Equals canonical_form(g) when g is already canonically labeled.
    """
    value = 0
    for col in range(1, g.n):
        rcol = g.rows[col]
        for row in range(col):
            value = value << 1 | (rcol >> row & 1)
    return _pack(value, g.n)


def canonical_form(g: Graph) -> bytes:
    """Relabeling-invariant key: equal iff the graphs are isomorphic."""
    _, value = _canonical_order(g)
    return _pack(value, g.n)


def canonical_pair(g: Graph) -> tuple:
    """(canonical form, canonically relabeled copy) in one search."""
    order, value = _canonical_order(g)
    n = g.n
    pos = {old: new for new, old in enumerate(order or [])}
    rows = [0] * n
    for old_u in range(n):
        for old_v in bits(g.rows[old_u]):
            rows[pos[old_u]] |= 1 << pos[old_v]
    return _pack(value, n), Graph.from_rows(n, rows)


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled copy of g (same copy for isomorphic inputs)."""
    return canonical_pair(g)[1]


def canonical_form_rows(rows, n: int) -> bytes:
    """Row-level entry point for search internals."""
    return canonical_form(Graph.from_rows(n, rows))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    return canonical_form(g) == canonical_form(h)
