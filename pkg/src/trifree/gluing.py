"""Neighborhood gluing extension.

From a host graph H that is triangle-free with no J_k in the complement,
and an expansion degree d, construct every graph G of order |H| + d + 1
that is triangle-free with no J_{k+1} in the complement and has a vertex v
of degree d whose residual graph is H.  The new vertex v is adjacent to d
new vertices u_1..u_d, and each u_i is additionally wired to an
independent set of H; no other edges exist, so

    E(G) = E(H) + {v-u_i} + {u_i-s : s in S_i}.

Vertex layout of outputs: H occupies 0..m-1, the u_i occupy m..m+d-1, and
v is the last vertex, so residual(G, v) literally equals H.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitgraph import Graph, bits
from .canon import canonical_pair, certificate
from .enumeration import Budget, SearchResult
from .patterns import (
    Pattern,
    has_independent_subset,
    independent_sets,
    is_ramsey_graph,
    pattern_hits_with_new_vertex,
)


@dataclass(frozen=True)
class GlueJob:
    host: Graph
    expansion_degree: int
    target_size: int                 # pattern size k+1 of the outputs
    e_min: int = 0
    e_max: int | None = None

    def __post_init__(self):
        if self.expansion_degree < 0 or self.expansion_degree > self.target_size - 1:
            raise ValueError("expansion degree must lie in [0, k] for target J_{k+1}")

    @property
    def host_size(self) -> int:
        return self.target_size - 1

    @property
    def output_order(self) -> int:
        return self.host.n + self.expansion_degree + 1


def eligible_glue_sets(host: Graph, k: int):
    """Candidate neighborhoods in H for the neighbors of the new vertex.

    All independent sets of H except those whose removal leaves an
    independent set of order k-1: wiring a neighbor u to such a set would
    put an independent (k-1)-set plus the disjoint edge u-v into the
    extended graph, i.e. a (k+1)-subset spanning one edge.
    """
    rows = host.rows
    full = (1 << host.n) - 1
    out = []
    for s in independent_sets(rows, host.n, max_size=k - 1):
        if not has_independent_subset(rows, full & ~s, k - 1):
            out.append(s)
    return out


def residual_prune(host: Graph, glued_so_far, k: int) -> bool:
    """Abort signal for a partial gluing: with at least two neighbors
    assigned, a (k-1)-subset of H avoiding every assigned set and spanning
    at most one edge can never be repaired, since together with two
    assigned neighbors it spans at most one edge on k+1 vertices."""
    if len(glued_so_far) < 2:
        return False
    union = 0
    for s in glued_so_far:
        union |= s
    return _has_low_edge_subset(host.rows, (1 << host.n) - 1 & ~union, k - 1)


def _has_low_edge_subset(rows, mask: int, size: int) -> bool:
    """Some `size`-subset of mask spanning at most one edge."""
    if size <= 0:
        return True
    if has_independent_subset(rows, mask, size):
        return True
    for u in bits(mask):
        for v in bits(rows[u] & (mask >> (u + 1) << (u + 1))):
            m = mask & ~rows[u] & ~rows[v] & ~(1 << u) & ~(1 << v)
            if has_independent_subset(rows, m, size - 2):
                return True
    return False


def glue_extend(job: GlueJob, budget: Budget | None = None,
                prune: bool = True, restrict_sets: bool = True) -> SearchResult:
    """All extensions of one host at one expansion degree, up to isomorphism.

    The d new neighbors are interchangeable before gluing, so candidate
    sets are assigned in nondecreasing candidate order; the canonical dedup
    store catches whatever symmetry that misses.

    The abort rule runs incrementally: the partial graph (host plus the
    neighbors assigned so far) must never show the target pattern in its
    complement.  Witnesses appear exactly when their last vertex is wired
    in, so this subsumes checking every assigned pair the way
    :func:`residual_prune` does.  `prune`/`restrict_sets` exist so tests
    can run the unpruned search as an oracle.
    """
    budget = budget or Budget()
    host = job.host
    k = job.host_size
    pattern = Pattern.j(job.target_size)
    d = job.expansion_degree
    m = host.n
    n_out = m + d + 1
    host_edges = host.edge_count()
    if not is_ramsey_graph(host, Pattern.j(k)):
        raise ValueError("glue host must be triangle-free with no J_k in the complement")

    if restrict_sets:
        candidates = eligible_glue_sets(host, k)
    else:
        candidates = independent_sets(host.rows, m, max_size=k - 1)
    sizes = [s.bit_count() for s in candidates]
    max_size = max(sizes, default=0)
    host_deg = [host.rows[v].bit_count() for v in range(m)]

    found: dict = {}
    complete = True
    prows = list(host.rows)  # partial graph: host plus assigned neighbors

    def emit(sets, esum):
        rows = list(prows)
        v = n_out - 1
        vrow = 0
        for i in range(d):
            u = m + i
            rows[u] |= 1 << v
            vrow |= 1 << u
        rows.append(vrow)
        g = Graph.from_rows(n_out, rows)
        if is_ramsey_graph(g, pattern):
            canon, cg = canonical_pair(g)
            found.setdefault(canon, cg)

    def assign(i, first_idx, sets, degs, esum):
        nonlocal complete
        if not budget.charge():
            complete = False
            return
        if i == d:
            if esum >= job.e_min:
                emit(sets, esum)
            return
        remaining = d - i - 1
        u = m + i
        for idx in range(first_idx, len(candidates)):
            s = candidates[idx]
            # partial-sum window bounds: later sets add between 0 and
            # max_size edges each
            if job.e_max is not None and esum + sizes[idx] > job.e_max:
                continue
            if esum + sizes[idx] + remaining * max_size < job.e_min:
                continue
            # degree cap: a host vertex may not exceed degree k
            ok = True
            for h in bits(s):
                if degs[h] + 1 > k:
                    ok = False
                    break
            if not ok:
                continue
            for h in bits(s):
                degs[h] += 1
                prows[h] |= 1 << u
            prows.append(s)
            sets.append(s)
            # No pattern witness can involve only the host or one new
            # vertex (the host is pattern-free one size down), so checking
            # through the newest vertex keeps the partial graph clean.
            if not (prune and i >= 1
                    and pattern_hits_with_new_vertex(prows, m + i + 1, pattern, u)):
                assign(i + 1, idx, sets, degs, esum + sizes[idx])
            sets.pop()
            prows.pop()
            for h in bits(s):
                degs[h] -= 1
                prows[h] &= ~(1 << u)
            if not complete:
                return

    assign(0, 0, [], list(host_deg), host_edges + d)
    graphs = list(found.values())
    if job.e_max is not None:
        graphs = [g for g in graphs if g.edge_count() <= job.e_max]
    graphs = [g for g in graphs if g.edge_count() >= job.e_min]
    return SearchResult(pattern, n_out, graphs, complete, budget.nodes, kind="glue")


def glue_census(hosts_by_order: dict, target_size: int, n: int,
                budget: Budget | None = None, e_min: int = 0,
                e_max: int | None = None) -> SearchResult:
    """Union of glue_extend over all hosts and expansion degrees giving
    order n.  With complete host censuses for every order n-d-1, this is
    the complete (3, J_target; n) census: every such graph G has a vertex v
    whose residual is one of the hosts, namely with d = deg(v)."""
    budget = budget or Budget()
    pattern = Pattern.j(target_size)
    found: dict = {}
    complete = True
    for d in range(0, target_size):
        morder = n - d - 1
        hosts = hosts_by_order.get(morder)
        if hosts is None:
            continue
        for host in hosts:
            job = GlueJob(host, d, target_size, e_min=e_min, e_max=e_max)
            sub = glue_extend(job, budget)
            complete = complete and sub.complete
            for g in sub.graphs:
                found.setdefault(certificate(g), g)
    return SearchResult(pattern, n, list(found.values()), complete, budget.nodes, kind="glue")
