"""Exhaustive generation of triangle-free Ramsey graphs.

Pipeline, following the maximal-triangle-free method: generate every
isomorphism class of maximal triangle-free Ramsey graphs of the target
order, then close that seed set under single-edge removal to obtain the
full census.  The mtf generator itself runs an orderly vertex-by-vertex
extension: level m holds every Ramsey graph of order m, each new vertex
absorbs an independent set as its neighborhood, branches whose partial
graph already shows the avoided pattern in the complement are cut, and
isomorphic copies are rejected through canonical forms.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .bitgraph import Graph, bits, is_triangle_free
from .canon import canonical_form, canonical_pair, certificate
from .errors import NotTriangleFree
from .patterns import (
    Pattern,
    independent_sets,
    is_ramsey_graph,
    pattern_hits_after_edge_removal,
    pattern_hits_with_new_vertex,
)

DEFAULT_NODE_BUDGET = 10 ** 9
DEFAULT_TIME_BUDGET = 3600.0


class Budget:
    """Search guardrail: node count and wall-clock limits."""

    def __init__(self, max_nodes: int = DEFAULT_NODE_BUDGET,
                 max_seconds: float = DEFAULT_TIME_BUDGET):
        if max_nodes <= 0 or max_seconds <= 0:
            raise ValueError("budgets must be positive")
        self.max_nodes = max_nodes
        self.max_seconds = max_seconds
        self.nodes = 0
        self.start = time.monotonic()

    def charge(self, count: int = 1) -> bool:
        """Consume budget; False once the limit is hit."""
        self.nodes += count
        if self.nodes > self.max_nodes:
            return False
        # time check is cheap enough at our charge granularity
        return time.monotonic() - self.start <= self.max_seconds


@dataclass
class SearchResult:
    """Canonically deduplicated graph set plus completeness bookkeeping."""

    pattern: Pattern
    n: int
    graphs: list          # canonically labeled representatives
    complete: bool
    nodes: int
    kind: str = "census"

    def __post_init__(self):
        self.graphs = sorted(self.graphs, key=certificate)

    def by_edge_count(self) -> dict:
        tally: dict = {}
        for g in self.graphs:
            e = g.edge_count()
            tally[e] = tally.get(e, 0) + 1
        return dict(sorted(tally.items()))

    def min_edge_count(self) -> int | None:
        return min((g.edge_count() for g in self.graphs), default=None)


def is_maximal_triangle_free(g: Graph) -> bool:
    """Every non-adjacent pair has a common neighbor (no edge can be added)."""
    if not is_triangle_free(g):
        raise NotTriangleFree("maximality is only defined for triangle-free graphs")
    rows = g.rows
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not rows[u] >> v & 1 and not rows[u] & rows[v]:
                return False
    return True


def _extend_rows(parent_rows, m: int, nbhd: int):
    """Rows of parent plus vertex m adjacent to the vertices of nbhd."""
    child = []
    for u, row in enumerate(parent_rows):
        if nbhd >> u & 1:
            row |= 1 << m
        child.append(row)
    child.append(nbhd)
    return tuple(child)


def extend_parents(parents, m: int, pattern: Pattern, max_degree: int | None = None):
    """All admissible one-vertex extensions of the given order-m parents.

    Returns (list of (canon, child_rows), nodes). Neighborhoods are the
    independent sets of the parent, so children stay triangle-free; a child
    survives iff no witness of the avoided pattern runs through the new
    vertex.  Isomorph rejection happens in the caller's dedup store.
    """
    out = []
    nodes = 0
    for rows in parents:
        cap = max_degree if max_degree is not None else m
        for nbhd in independent_sets(rows, m, max_size=cap):
            nodes += 1
            child = _extend_rows(rows, m, nbhd)
            if pattern_hits_with_new_vertex(child, m + 1, pattern, m):
                continue
            canon, cg = canonical_pair(Graph.from_rows(m + 1, child))
            out.append((canon, cg.rows))
    return out, nodes


class CensusBuilder:
    """Caches the per-order Ramsey-graph levels of one extension sweep.

    Deterministic: levels are insertion-ordered by (parent canonical form,
    neighborhood mask), and the stored sets are plain dicts keyed by
    canonical form, so worker scheduling cannot change the contents.
    """

    def __init__(self, pattern: Pattern, budget: Budget | None = None, workers: int = 1):
        self.pattern = pattern
        self.budget = budget or Budget()
        self.workers = max(1, workers)
        self.levels: dict = {1: {canonical_form(Graph(1, [0])): (0,)}}
        self.complete_through = 1
        # degree cap: a vertex of degree >= pattern size has an independent
        # neighborhood big enough to witness any pattern on `size` vertices
        self.max_degree = pattern.size - 1

    def level(self, m: int) -> dict:
        """Canonical-form -> rows for every Ramsey graph of order m."""
        if m < 1:
            raise ValueError("census orders start at 1")
        while self.complete_through < m:
            self._extend_once()
        return self.levels[m]

    def is_complete(self, m: int) -> bool:
        return m <= self.complete_through

    def _extend_once(self):
        m = self.complete_through
        parents = [rows for _, rows in sorted(self.levels[m].items())]
        target: dict = {}
        if self.workers == 1:
            found, nodes = extend_parents(parents, m, self.pattern, self.max_degree)
            if not self.budget.charge(nodes):
                raise _BudgetExhausted()
            for canon, child in found:
                if canon not in target:
                    target[canon] = child
        else:
            self._extend_parallel(parents, m, target)
        self.levels[m + 1] = target
        self.complete_through = m + 1

    def _extend_parallel(self, parents, m, target):
        from multiprocessing import Pool

        chunk = max(1, len(parents) // (self.workers * 8))
        batches = [parents[i:i + chunk] for i in range(0, len(parents), chunk)]
        args = [(batch, m, self.pattern, self.max_degree) for batch in batches]
        with Pool(self.workers) as pool:
            for found, nodes in pool.imap(_extend_batch, args):
                if not self.budget.charge(nodes):
                    raise _BudgetExhausted()
                for canon, child in found:
                    if canon not in target:
                        target[canon] = child


def _extend_batch(args):
    return extend_parents(*args)


class _BudgetExhausted(Exception):
    pass


def generate_mtf_ramsey(pattern: Pattern, n: int, budget: Budget | None = None,
                        workers: int = 1, builder: CensusBuilder | None = None) -> SearchResult:
    """All maximal triangle-free Ramsey graphs of order n, up to isomorphism.

    An empty, complete result certifies that no Ramsey graph of order n
    exists at all (any such graph would extend to a maximal one).
    """
    builder = builder or CensusBuilder(pattern, budget, workers)
    try:
        level = builder.level(n)
        complete = True
    except _BudgetExhausted:
        level = builder.levels.get(n, {})
        complete = False
    graphs = [Graph.from_rows(n, rows) for rows in level.values()]
    mtf = [g for g in graphs if is_maximal_triangle_free(g)]
    return SearchResult(pattern, n, mtf, complete, builder.budget.nodes, kind="mtf")


def edge_removal_closure(seeds, pattern: Pattern, budget: Budget | None = None,
                         e_min: int = 0) -> SearchResult:
    """Close a seed set under single-edge removal within the Ramsey family.

    Works breadth-first by edge count; when the seeds are all mtf Ramsey
    graphs of one order, the closure is the complete census of that order.
    """
    budget = budget or Budget()
    seeds = list(seeds)
    if not seeds:
        return SearchResult(pattern, 0, [], True, 0, kind="closure")
    n = seeds[0].n
    for g in seeds:
        if g.n != n:
            raise ValueError("closure seeds must share one order")
        if not is_ramsey_graph(g, pattern):
            raise ValueError("closure seed is not a Ramsey graph for the pattern")
    by_edges: dict = {}
    for g in seeds:
        canon, cg = canonical_pair(g)
        by_edges.setdefault(g.edge_count(), {})[canon] = cg.rows
    all_graphs: dict = {}
    complete = True
    for e in range(max(by_edges), e_min - 1, -1):
        current = by_edges.get(e, {})
        if not current:
            continue
        all_graphs.update({c: (e, rows) for c, rows in current.items()})
        if e == e_min:
            break
        below = by_edges.setdefault(e - 1, {})
        for canon, rows in sorted(current.items()):
            for u in range(n):
                ru = rows[u]
                for v in bits(ru >> (u + 1) << (u + 1)):
                    if not budget.charge():
                        complete = False
                        break
                    child = list(rows)
                    child[u] &= ~(1 << v)
                    child[v] &= ~(1 << u)
                    child = tuple(child)
                    if pattern_hits_after_edge_removal(child, n, pattern, u, v):
                        continue
                    ccanon, cg = canonical_pair(Graph.from_rows(n, child))
                    below.setdefault(ccanon, cg.rows)
                if not complete:
                    break
            if not complete:
                break
        if not complete:
            break
    graphs = [Graph.from_rows(n, rows) for _, (_, rows) in all_graphs.items()]
    return SearchResult(pattern, n, graphs, complete, budget.nodes, kind="closure")


def full_census(pattern: Pattern, n: int, budget: Budget | None = None,
                workers: int = 1, builder: CensusBuilder | None = None,
                e_min: int = 0, e_max: int | None = None) -> SearchResult:
    """Every Ramsey graph of order n for the pattern: mtf seeds + closure."""
    budget = budget or Budget()
    mtf = generate_mtf_ramsey(pattern, n, budget, workers, builder)
    if not mtf.complete:
        return SearchResult(pattern, n, [], False, mtf.nodes)
    closure = edge_removal_closure(mtf.graphs, pattern, budget, e_min=e_min)
    graphs = closure.graphs
    if e_max is not None:
        graphs = [g for g in graphs if g.edge_count() <= e_max]
    if e_min:
        graphs = [g for g in graphs if g.edge_count() >= e_min]
    return SearchResult(pattern, n, graphs, closure.complete, budget.nodes)


@dataclass
class MinEdgesResult:
    pattern: Pattern
    n: int
    infinite: bool
    value: int | None
    witnesses: list = field(default_factory=list)
    complete: bool = True
    nodes: int = 0


def enumerate_min_edges(pattern: Pattern, n: int, budget: Budget | None = None,
                        workers: int = 1, builder: CensusBuilder | None = None) -> MinEdgesResult:
    """Minimum edge count over all order-n Ramsey graphs, with witnesses.

    Infinite when no maximal triangle-free Ramsey graph of order n exists.
    """
    budget = budget or Budget()
    mtf = generate_mtf_ramsey(pattern, n, budget, workers, builder)
    if not mtf.complete:
        return MinEdgesResult(pattern, n, False, None, [], False, mtf.nodes)
    if not mtf.graphs:
        return MinEdgesResult(pattern, n, True, None, [], True, mtf.nodes)
    closure = edge_removal_closure(mtf.graphs, pattern, budget)
    emin = closure.min_edge_count()
    witnesses = [g for g in closure.graphs if g.edge_count() == emin]
    return MinEdgesResult(pattern, n, False, emin, witnesses, closure.complete, budget.nodes)
