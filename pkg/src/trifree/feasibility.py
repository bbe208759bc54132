"""Degree-sequence feasibility arithmetic.

For a triangle-free graph G on n vertices and e edges whose complement
avoids J_K, every vertex v with degree d satisfies the deficiency
inequality

    gamma(v) = e - Z(v) - e(3, J_{K-1}, n-d-1) >= 0,

where Z(v) is the degree sum over v's neighbors, because deleting v's
closed neighborhood leaves a smaller graph of the same kind.  Summing over
all vertices gives the graph-level form computable from the degree
histogram alone:

    gamma(G) = n*e - sum_i n_i * (i^2 + e(3, J_{K-1}, n-i-1)) >= 0.

This module enumerates the integer histograms satisfying the vertex-count
and degree-sum constraints together with gamma(G) >= 0, optionally rejects
histograms whose best-case single-vertex deficiency is already negative,
and turns "no surviving histogram" into lower bounds on e(3, J_K, n) and,
past the last feasible order, upper bounds on R(3, J_K).

A closed form covers the small orders: writing K = k+2,

    e(3, J_{k+2}, n) = 0        if n <= k+1
                     = n - k    if k+2 <= n <= 2k          (k >= 1)
                     = 3n - 5k  if 2k < n <= 5k/2          (k >= 3)
                     = 5n - 10k if 5k/2 < n <= 3k          (k >= 6)
                     = 6n - 13k if 3k < n <= 13k/4 - 1     (k >= 6)

with the extra exact point n = 13k/4 when 4 | k (k >= 6), and the
inequality e(3, J_{k+2}, n) >= 6n - 13k for every n once k >= 6.
"""

from __future__ import annotations

from .bitgraph import DegreeHistogram, max_edge_bound
from .bounds import Bound
from .errors import MissingTableEntry

INFINITE = None  # lookup result for "no such graph exists"


def closed_form_bound(pattern_size: int, n: int) -> Bound | None:
    """Closed-form value of e(3, J_K, n) when the order is small enough,
    the 6n-13k inequality when only that applies, otherwise None."""
    if pattern_size < 3:
        raise ValueError("closed form needs pattern size >= 3")
    k = pattern_size - 2
    if n <= k + 1:
        return Bound.exact(0, "closed_form")
    if k >= 1 and k + 2 <= n <= 2 * k:
        return Bound.exact(n - k, "closed_form")
    if k >= 3 and 2 * k < n and 2 * n <= 5 * k:
        return Bound.exact(3 * n - 5 * k, "closed_form")
    if k >= 6 and 2 * n > 5 * k and n <= 3 * k:
        return Bound.exact(5 * n - 10 * k, "closed_form")
    if k >= 6 and 3 * k < n and 4 * n <= 13 * k - 4:
        return Bound.exact(6 * n - 13 * k, "closed_form")
    if k >= 6 and k % 4 == 0 and 4 * n == 13 * k:
        return Bound.exact(6 * n - 13 * k, "closed_form")
    if k >= 6:
        return Bound.at_least(max(6 * n - 13 * k, 0), "closed_form")
    return None


def vertex_deficiency(e: int, z: int, table, pattern_size: int, n: int, d: int) -> int:
    """gamma(v) for a degree-d vertex with neighbor degree sum z.

    A residual order whose bound is infinite makes the configuration
    impossible; that is reported as a hopeless negative deficiency.
    """
    residual_bound = table.lower(pattern_size - 1, n - d - 1)
    if residual_bound is INFINITE:
        return e - z - (1 << 62)
    return e - z - residual_bound


def graph_deficiency(hist: DegreeHistogram, table, pattern_size: int) -> int:
    """gamma(G) from the degree histogram alone."""
    n = hist.n
    e = hist.edge_count
    total = n * e
    for i, count in enumerate(hist.counts):
        if not count:
            continue
        residual_bound = table.lower(pattern_size - 1, n - i - 1)
        if residual_bound is INFINITE:
            return -(1 << 62)
        total -= count * (i * i + residual_bound)
    return total


def _degree_costs(pattern_size: int, n: int, table):
    """cost[i] = i^2 + lower bound for the residual at degree i, or None
    when vertices of degree i are impossible at this order."""
    costs = []
    for i in range(pattern_size):
        if i > n - 1:
            costs.append(None)
            continue
        b = table.lower(pattern_size - 1, n - i - 1)
        costs.append(None if b is INFINITE else i * i + b)
    return costs


def feasible_degree_histograms(pattern_size: int, n: int, e: int, table) -> list:
    """Histograms with sum n_i = n, sum i*n_i = 2e, degrees below the
    pattern size, and nonnegative graph deficiency.

    An empty list certifies that no matching graph exists.  Output is in
    descending lexicographic order of (n_{K-1}, ..., n_0).
    """
    costs = _degree_costs(pattern_size, n, table)
    budget = n * e
    out: list = []
    counts = [0] * pattern_size
    # min_cost_upto[i] = cheapest available degree cost among degrees < i
    min_cost_upto = [None] * (pattern_size + 1)
    for i in range(pattern_size):
        prev = min_cost_upto[i]
        c = costs[i]
        best = c if prev is None else (prev if c is None else min(prev, c))
        min_cost_upto[i + 1] = best

    def rec(i: int, rem_n: int, rem_sum: int, cost: int):
        if rem_n == 0:
            if rem_sum == 0 and cost <= budget:
                out.append(DegreeHistogram(tuple(counts)))
            return
        if i < 0:
            return
        cheapest = min_cost_upto[i + 1]
        if cheapest is None or cost + rem_n * cheapest > budget:
            return
        if i == 0:
            if rem_sum == 0 and costs[0] is not None and cost + rem_n * costs[0] <= budget:
                counts[0] = rem_n
                out.append(DegreeHistogram(tuple(counts)))
                counts[0] = 0
            return
        hi = min(rem_n, rem_sum // i) if costs[i] is not None else 0
        for c in range(hi, -1, -1):
            rest = rem_sum - c * i
            if rest > (i - 1) * (rem_n - c):
                break  # smaller c only widens the gap
            counts[i] = c
            rec(i - 1, rem_n - c, rest, cost + c * (costs[i] or 0))
            counts[i] = 0

    rec(pattern_size - 1, n, 2 * e, 0)
    return out


def min_z_for_degree(hist: DegreeHistogram, d: int) -> int:
    """Smallest neighbor degree sum available to a degree-d vertex: its d
    neighbors take the smallest degrees in the histogram, with one
    degree-d slot used up by the vertex itself."""
    remaining = d
    z = 0
    for j, cnt in enumerate(hist.counts):
        avail = cnt - 1 if j == d else cnt
        if avail <= 0:
            continue
        take = min(avail, remaining)
        z += take * j
        remaining -= take
        if remaining == 0:
            return z
    raise ValueError("histogram too small to supply the neighbors")


def survives_vertex_refinement(hist: DegreeHistogram, e: int, pattern_size: int, table) -> bool:
    """Check the per-vertex deficiency with the most favorable neighbor
    degrees; a histogram failing this cannot belong to any actual graph.

    Triangle-freeness constraints between the neighbors are deliberately
    not modeled, which only weakens the test and keeps it sound.
    """
    n = hist.n
    for d, cnt in enumerate(hist.counts):
        if not cnt:
            continue
        z = min_z_for_degree(hist, d)
        if vertex_deficiency(e, z, table, pattern_size, n, d) < 0:
            return False
    return True


def _hull_infeasible(costs, n: int, e: int) -> bool:
    """Quick relaxation: even with fractional vertex counts, no mixture of
    the available degrees meets the mean degree 2e/n within cost n*e.

    The fractional optimum sits on a segment between two degrees (or a
    single degree hitting the mean exactly); exceeding the budget on every
    straddling segment proves integer infeasibility too.
    """
    pts = [(i, c) for i, c in enumerate(costs) if c is not None]
    if not pts:
        return True
    mean_num = 2 * e  # mean degree is mean_num / n
    for ia, ca in pts:
        if ia * n == mean_num and ca <= e:
            return False
    for a in range(len(pts)):
        ia, ca = pts[a]
        for b in range(a + 1, len(pts)):
            ib, cb = pts[b]
            if ia * n <= mean_num <= ib * n:
                # interpolated cost at the mean, times n*(ib-ia)
                num = ca * (ib * n - mean_num) + cb * (mean_num - ia * n)
                if num <= e * n * (ib - ia):
                    return False
    return True


def min_edges_bound(pattern_size: int, n: int, table, refine: bool = True,
                    e_start: int = 0) -> Bound:
    """Least e admitting a histogram that satisfies the deficiency system
    (and per-vertex refinement unless disabled); infinite when none does
    up to the max-degree edge cap.

    The note records when the per-vertex level was decisive, so reports
    can tell which strength of the argument each bound needs.
    """
    cap = max_edge_bound(pattern_size, n)
    costs = _degree_costs(pattern_size, n, table)
    first_unrefined = None
    for e in range(e_start, cap + 1):
        if _hull_infeasible(costs, n, e):
            continue
        hists = feasible_degree_histograms(pattern_size, n, e, table)
        if not hists:
            continue
        if first_unrefined is None:
            first_unrefined = e
        if not refine:
            return Bound.at_least(e, "feasibility")
        if any(survives_vertex_refinement(h, e, pattern_size, table) for h in hists):
            note = ("" if e == first_unrefined
                    else f"per-vertex refinement raised this from {first_unrefined}")
            return Bound.at_least(e, "feasibility", note)
    note = ("" if first_unrefined is None
            else f"per-vertex refinement ruled out e >= {first_unrefined}")
    return Bound.infinite("feasibility", note)
