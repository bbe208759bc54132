"""Avoided complement patterns and containment tests.

A Pattern describes what must not appear in the complement of a search
graph.  Two shapes cover everything this toolkit handles:

* ``max_edges(k, t)``: the complement contains the pattern iff some
  k-subset of vertices spans at most t edges in the graph itself.
  t=0 is the complete graph K_k, t=1 is K_k minus one edge.
* ``explicit(F)``: some k-subset admits a bijection onto V(F) under which
  every graph edge inside the subset maps to an edge of F.  F is the
  complement of the avoided graph, e.g. avoiding K_9 minus two disjoint
  edges means F = 2K_2 + 5 isolated vertices.

The k-subset tests reduce to independent-set queries, so the branch and
bound in :func:`has_independent_subset` is the hot path of every search.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitgraph import Graph, bits, from_edges, is_triangle_free
from .errors import MalformedInput, PatternTooLarge


@dataclass(frozen=True)
class Pattern:
    size: int
    max_edges: int | None = None          # set for the max-edges shape
    explicit: Graph | None = field(default=None, compare=True, hash=True)

    def __post_init__(self):
        if (self.max_edges is None) == (self.explicit is None):
            raise MalformedInput("pattern needs exactly one of max_edges / explicit")
        if self.explicit is not None and self.explicit.n != self.size:
            raise MalformedInput("explicit complement graph must have `size` vertices")
        if self.size < 1:
            raise MalformedInput("pattern size must be positive")

    @classmethod
    def j(cls, k: int) -> "Pattern":
        """Complete graph of order k minus one edge."""
        return cls(size=k, max_edges=1)

    @classmethod
    def complete(cls, k: int) -> "Pattern":
        return cls(size=k, max_edges=0)

    @classmethod
    def with_max_edges(cls, k: int, t: int) -> "Pattern":
        return cls(size=k, max_edges=t)

    @classmethod
    def from_complement_graph(cls, comp: Graph) -> "Pattern":
        return cls(size=comp.n, explicit=comp)

    @property
    def kind(self) -> str:
        return "max_edges" if self.max_edges is not None else "explicit"

    def label(self) -> str:
        if self.max_edges == 1:
            return f"J{self.size}"
        if self.max_edges == 0:
            return f"K{self.size}"
        if self.max_edges is not None:
            return f"M{self.size}.{self.max_edges}"
        return f"compl{self.size}e{self.explicit.edge_count()}"

    def __str__(self):
        return self.label()


def parse_pattern(text: str) -> Pattern:
    """Parse CLI pattern syntax: J<k>, K<k>, or M<k>.<t> for max-edges t."""
    text = text.strip()
    try:
        if text[0] in "Jj":
            return Pattern.j(int(text[1:]))
        if text[0] in "Kk":
            return Pattern.complete(int(text[1:]))
        if text[0] in "Mm":
            k, t = text[1:].split(".")
            return Pattern.with_max_edges(int(k), int(t))
    except (ValueError, IndexError):
        pass
    raise MalformedInput(f"cannot parse pattern {text!r}")


# ---------------------------------------------------------------------------
# Independent-set branch and bound (bitmask decision version)


def has_independent_subset(rows, mask: int, r: int) -> bool:
    """True iff the vertices of mask contain an independent set of size r."""
    if r <= 0:
        return True
    while True:
        avail = mask.bit_count()
        if avail < r:
            return False
        # One scan: find the max-degree vertex inside the mask and note
        # whether the induced degrees stay below 2.
        best_v = -1
        best_deg = -1
        deg_sum = 0
        m = mask
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            d = (rows[v] & mask).bit_count()
            if d > best_deg:
                best_deg = d
                best_v = v
            deg_sum += d
        if best_deg <= 1:
            # Disjoint edges plus isolated vertices: each edge forfeits one vertex.
            return avail - deg_sum // 2 >= r
        # Include the pivot first (smaller subproblem), then exclude it.
        if has_independent_subset(rows, mask & ~rows[best_v] & ~(1 << best_v), r - 1):
            return True
        mask &= ~(1 << best_v)


def independence_number(rows, mask: int) -> int:
    """Size of a maximum independent set inside mask."""
    lo = 0
    hi = mask.bit_count()
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if has_independent_subset(rows, mask, mid):
            lo = mid
        else:
            hi = mid - 1
    return lo


def independent_sets(rows, n: int, max_size: int | None = None):
    """All independent vertex sets as masks, empty set included."""
    out = []
    cap = n if max_size is None else max_size

    def rec(avail: int, current: int, size: int):
        out.append(current)
        if size == cap:
            return
        m = avail
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            # keep only candidates above v to avoid duplicates
            rec(m & ~rows[v], current | b, size + 1)

    rec((1 << n) - 1, 0, 0)
    return out


def _above(mask: int, u: int) -> int:
    """Bits of mask at positions strictly greater than u."""
    return mask >> (u + 1) << (u + 1)


def _edges_within(rows, mask: int):
    for u in bits(mask):
        for v in bits(rows[u] & _above(mask, u)):
            yield u, v


def _has_subset_budget(rows, cand: int, chosen: int, need: int, budget: int) -> bool:
    """Is there a superset of `chosen` of total size +need inside cand whose
    additional vertices keep the induced edge count within budget?"""
    if need == 0:
        return True
    if budget == 0:
        # Remaining picks must be independent and see nothing already chosen.
        forbidden = 0
        for u in bits(chosen):
            forbidden |= rows[u]
        return has_independent_subset(rows, cand & ~forbidden, need)
    if cand.bit_count() < need:
        return False
    b = cand & -cand
    v = b.bit_length() - 1
    cost = (rows[v] & chosen).bit_count()
    if cost <= budget and _has_subset_budget(rows, cand ^ b, chosen | b, need - 1, budget - cost):
        return True
    return _has_subset_budget(rows, cand ^ b, chosen, need, budget)


def _contains_max_edges(rows, n: int, k: int, t: int, forced: int = 0) -> bool:
    """Some k-subset containing all of `forced` spans at most t edges."""
    full = (1 << n) - 1
    base = sum(1 for _ in _edges_within(rows, forced))
    if base > t:
        return False
    need = k - forced.bit_count()
    if need < 0:
        return False
    if t == 0 or (t - base == 0):
        forbidden = 0
        for u in bits(forced):
            forbidden |= rows[u]
        return has_independent_subset(rows, full & ~forced & ~forbidden, need)
    if t == 1 and forced == 0:
        # Hot case: independent k-set, or one edge plus an independent
        # (k-2)-set among the common non-neighbors of its endpoints.
        if has_independent_subset(rows, full, k):
            return True
        for u in range(n):
            ru = rows[u]
            for v in bits(_above(ru, u)):
                m = full & ~ru & ~rows[v] & ~(1 << u) & ~(1 << v)
                if has_independent_subset(rows, m, k - 2):
                    return True
        return False
    return _has_subset_budget(rows, full & ~forced, forced, need, t - base)


def _embeds_into(sub_rows, host: Graph) -> bool:
    """Backtracking test: can sub_rows (same order as host) be mapped
    bijectively into host so that every sub edge lands on a host edge?"""
    k = host.n
    sub_degs = [r.bit_count() for r in sub_rows]
    host_degs = [host.rows[f].bit_count() for f in range(k)]
    order = sorted(range(k), key=lambda u: -sub_degs[u])
    assignment = [-1] * k  # sub vertex -> host vertex

    def rec(i: int, used: int) -> bool:
        if i == k:
            return True
        u = order[i]
        for f in range(k):
            if used >> f & 1 or sub_degs[u] > host_degs[f]:
                continue
            ok = True
            for j in range(i):
                w = order[j]
                if sub_rows[u] >> w & 1 and not host.rows[f] >> assignment[w] & 1:
                    ok = False
                    break
            if ok:
                assignment[u] = f
                if rec(i + 1, used | 1 << f):
                    return True
        return False

    return rec(0, 0)


def _contains_explicit(rows, n: int, comp: Graph, forced: int = 0) -> bool:
    k = comp.n
    t = comp.edge_count()
    full = (1 << n) - 1

    def visit(subset_mask: int) -> bool:
        picked = sorted(bits(subset_mask))
        sub_rows = []
        for i, u in enumerate(picked):
            row = 0
            for j, v in enumerate(picked):
                if rows[u] >> v & 1:
                    row |= 1 << j
            sub_rows.append(row)
        return _embeds_into(sub_rows, comp)

    # Enumerate candidate k-subsets within the edge budget, then try the
    # bijection.  Desk-scale only; fine for the order-10 complement patterns.
    def rec(cand: int, chosen: int, need: int, budget: int) -> bool:
        if need == 0:
            return visit(chosen)
        if cand.bit_count() < need:
            return False
        b = cand & -cand
        v = b.bit_length() - 1
        cost = (rows[v] & chosen).bit_count()
        if cost <= budget and rec(cand ^ b, chosen | b, need - 1, budget - cost):
            return True
        return rec(cand ^ b, chosen, need, budget)

    base = sum(1 for _ in _edges_within(rows, forced))
    if base > t:
        return False
    return rec(full & ~forced, forced, k - forced.bit_count(), t - base)


def contains_pattern_in_complement(g: Graph, p: Pattern) -> bool:
    """Does the complement of g contain the avoided pattern?"""
    if p.size > g.n:
        raise PatternTooLarge(f"pattern of size {p.size} against order {g.n}")
    if p.max_edges is not None:
        return _contains_max_edges(g.rows, g.n, p.size, p.max_edges)
    return _contains_explicit(g.rows, g.n, p.explicit)


def is_ramsey_graph(g: Graph, p: Pattern) -> bool:
    """Triangle-free and pattern-free in the complement."""
    if p.size > g.n:
        return is_triangle_free(g)
    return is_triangle_free(g) and not contains_pattern_in_complement(g, p)


# ---------------------------------------------------------------------------
# Incremental containment tests used by the searches.  Both assume the
# *unmodified* graph was already pattern-free, so any new witness subset
# must go through the touched vertices.


def pattern_hits_with_new_vertex(rows, n: int, p: Pattern, w: int) -> bool:
    """After adding vertex w (rows already updated, order n), does some
    witness subset containing w exist?"""
    if p.size > n:
        return False
    k = p.size
    full = (1 << n) - 1
    if p.max_edges == 1:
        nw = rows[w]
        rest = full & ~(1 << w)
        m_a = rest & ~nw
        # w isolated in the subset: (k-1)-subset avoiding N(w), at most 1 edge
        if has_independent_subset(rows, m_a, k - 1):
            return True
        for u in bits(m_a):
            for v in bits(rows[u] & _above(m_a, u)):
                m = m_a & ~rows[u] & ~rows[v] & ~(1 << u) & ~(1 << v)
                if has_independent_subset(rows, m, k - 3):
                    return True
        # the single edge is at w: one neighbor x plus an independent rest
        for x in bits(nw):
            if has_independent_subset(rows, m_a & ~rows[x] & ~(1 << x), k - 2):
                return True
        return False
    if p.max_edges == 0:
        return has_independent_subset(rows, full & ~rows[w] & ~(1 << w), k - 1)
    if p.max_edges is not None:
        return _contains_max_edges(rows, n, k, p.max_edges, forced=1 << w)
    return _contains_explicit(rows, n, p.explicit, forced=1 << w)


def pattern_hits_after_edge_removal(rows, n: int, p: Pattern, u: int, v: int) -> bool:
    """After deleting edge (u, v) (rows already updated), does some witness
    subset containing both endpoints exist?"""
    if p.size > n:
        return False
    k = p.size
    full = (1 << n) - 1
    pair = (1 << u) | (1 << v)
    if p.max_edges == 1:
        m_a = full & ~rows[u] & ~rows[v] & ~pair
        if has_independent_subset(rows, m_a, k - 2):
            return True
        if k >= 4:
            for a in bits(m_a):
                for b in bits(rows[a] & _above(m_a, a)):
                    m = m_a & ~rows[a] & ~rows[b] & ~(1 << a) & ~(1 << b)
                    if has_independent_subset(rows, m, k - 4):
                        return True
        # single edge touches exactly one of u, v
        for x in bits((rows[u] ^ rows[v]) & ~pair):
            if has_independent_subset(rows, m_a & ~rows[x] & ~(1 << x), k - 3):
                return True
        return False
    if p.max_edges == 0:
        return has_independent_subset(rows, full & ~rows[u] & ~rows[v] & ~pair, k - 2)
    if p.max_edges is not None:
        return _contains_max_edges(rows, n, k, p.max_edges, forced=pair)
    return _contains_explicit(rows, n, p.explicit, forced=pair)


def pattern_for_complement_edges(k: int, edge_list) -> Pattern:
    """Convenience: avoided graph is K_k minus the given edge set; the
    pattern stores that edge set as the explicit complement."""
    return Pattern.from_complement_graph(from_edges(k, edge_list))
