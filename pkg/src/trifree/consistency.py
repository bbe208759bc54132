"""Cross-validation suites over generated graph sets.

Each suite consumes census files (graph6 plus a manifest), revalidates the
set invariants, and then runs one structural check.  Suites are meant to
be pointed at files written by independent runs or pipelines, so a failed
invariant (wrong count, duplicate class, non-member graph) makes every
suite report failure rather than silently proceeding.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .bitgraph import Graph, bits, residual
from .canon import canonical_form, canonical_pair
from .errors import MalformedInput, MissingCensus
from .graph6 import decode_graph6, encode_graph6, read_graph6_file
from .patterns import (
    Pattern,
    is_ramsey_graph,
    parse_pattern,
    pattern_hits_after_edge_removal,
)


@dataclass
class CensusSet:
    """A canonically deduplicated set of Ramsey graphs for one order.

    The edge window [e_min, e_max] states which edge counts the set claims
    to cover completely; `complete` records whether the producing search
    ran to exhaustion.
    """

    pattern: Pattern
    n: int
    e_min: int
    e_max: int
    graphs: list
    complete: bool = True
    problems: list = field(default_factory=list)

    @classmethod
    def from_graphs(cls, pattern, n, graphs, complete=True,
                    e_min=None, e_max=None) -> "CensusSet":
        edges = [g.edge_count() for g in graphs]
        e_min = min(edges, default=0) if e_min is None else e_min
        e_max = max(edges, default=0) if e_max is None else e_max
        return cls(pattern, n, e_min, e_max, list(graphs), complete)

    def by_edge_count(self) -> dict:
        tally: dict = {}
        for g in self.graphs:
            tally[g.edge_count()] = tally.get(g.edge_count(), 0) + 1
        return dict(sorted(tally.items()))

    def canonical_keys(self) -> set:
        return {canonical_form(g) for g in self.graphs}

    def validate(self) -> bool:
        """Set invariants: membership, no duplicate classes, edge window.
        Problems recorded at load time (count mismatches) persist."""
        found = []
        seen = set()
        for g in self.graphs:
            key = canonical_form(g)
            if key in seen:
                found.append(f"duplicate isomorphism class ({encode_graph6(g)})")
            seen.add(key)
            if g.n != self.n:
                found.append(f"order {g.n} member in order-{self.n} census")
            elif not is_ramsey_graph(g, self.pattern):
                found.append(f"non-member graph {encode_graph6(g)}")
            elif not self.e_min <= g.edge_count() <= self.e_max:
                found.append(f"graph outside edge window ({encode_graph6(g)})")
        for p in found:
            if p not in self.problems:
                self.problems.append(p)
        return not self.problems


def census_manifest(census: CensusSet, extra: dict | None = None) -> dict:
    manifest = {
        "pattern": census.pattern.label(),
        "n": census.n,
        "e_min": census.e_min,
        "e_max": census.e_max,
        "count": len(census.graphs),
        "by_edge_count": {str(e): c for e, c in census.by_edge_count().items()},
        "complete": census.complete,
    }
    if census.pattern.explicit is not None:
        # label alone cannot reconstruct an explicit pattern
        manifest["pattern_complement_g6"] = encode_graph6(census.pattern.explicit)
    if extra:
        manifest.update(extra)
    return manifest


def write_census(path, census: CensusSet):
    """graph6 beside a .manifest.json; file pair is the interchange unit."""
    path = Path(path)
    with open(path, "w") as fh:
        for g in sorted(census.graphs, key=canonical_form):
            fh.write(encode_graph6(canonical_pair(g)[1]) + "\n")
    with open(path.with_suffix(path.suffix + ".manifest.json"), "w") as fh:
        json.dump(census_manifest(census), fh, indent=2, sort_keys=True)
        fh.write("\n")


def read_census(path) -> CensusSet:
    path = Path(path)
    manifest_path = path.with_suffix(path.suffix + ".manifest.json")
    if not manifest_path.exists():
        raise MalformedInput(f"census {path} has no manifest")
    with open(manifest_path) as fh:
        manifest = json.load(fh)
    graphs = list(read_graph6_file(path))
    if "pattern_complement_g6" in manifest:
        pattern = Pattern.from_complement_graph(
            decode_graph6(manifest["pattern_complement_g6"]))
    else:
        pattern = parse_pattern(manifest["pattern"])
    census = CensusSet(
        pattern=pattern,
        n=int(manifest["n"]),
        e_min=int(manifest["e_min"]),
        e_max=int(manifest["e_max"]),
        graphs=graphs,
        complete=bool(manifest.get("complete", True)),
    )
    if len(graphs) != int(manifest["count"]):
        census.problems.append(
            f"manifest declares {manifest['count']} graphs, file holds {len(graphs)}")
        census.complete = False
    return census


def _valid_for_checking(*censuses) -> bool:
    return all(c.validate() for c in censuses)


@dataclass
class SuiteReport:
    name: str
    passed: bool
    detail: str = ""
    counterexample: str = ""  # graph6 of the first offending graph

    def __str__(self):
        status = "pass" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        ce = f" counterexample: {self.counterexample}" if self.counterexample else ""
        return f"{status}: {self.name}{extra}{ce}"


def verify_edge_minimal(census: CensusSet) -> SuiteReport:
    """Every member of a minimum-edge census must lose the Ramsey property
    when any single edge is dropped."""
    name = f"edge-minimal {census.pattern} n={census.n}"
    if not _valid_for_checking(census):
        return SuiteReport(name, False, "; ".join(census.problems))
    for g in census.graphs:
        rows = list(g.rows)
        for u in range(g.n):
            for v in bits(rows[u] >> (u + 1) << (u + 1)):
                child = list(rows)
                child[u] &= ~(1 << v)
                child[v] &= ~(1 << u)
                if not pattern_hits_after_edge_removal(tuple(child), g.n,
                                                       census.pattern, u, v):
                    return SuiteReport(name, False,
                                       f"edge ({u},{v}) is droppable",
                                       encode_graph6(g))
    return SuiteReport(name, True, f"{len(census.graphs)} graphs")


def verify_drop_add_closure(lower: CensusSet, upper: CensusSet) -> SuiteReport:
    """Adding edges to the lower-window census in all ways must stay
    inside the upper census; dropping one edge from the upper census must
    stay inside the lower one (when it lands in the lower window)."""
    name = (f"drop-add closure {lower.pattern} n={lower.n} "
            f"e<={lower.e_max} vs e<={upper.e_max}")
    if not _valid_for_checking(lower, upper):
        return SuiteReport(name, False,
                           "; ".join(lower.problems + upper.problems))
    if lower.pattern != upper.pattern or lower.n != upper.n:
        return SuiteReport(name, False, "censuses disagree on pattern or order")
    pattern, n = lower.pattern, lower.n
    upper_keys = upper.canonical_keys()
    lower_keys = lower.canonical_keys()
    full = (1 << n) - 1

    # upward: repeatedly add one edge, breadth-first within the window
    frontier = {canonical_form(g): g.rows for g in lower.graphs}
    seen = dict(frontier)
    while frontier:
        next_frontier: dict = {}
        for key, rows in sorted(frontier.items()):
            for u in range(n):
                non_nbrs = full & ~rows[u] & ~(1 << u)
                for v in bits(non_nbrs >> (u + 1) << (u + 1)):
                    if rows[u] & rows[v]:
                        continue  # edge would close a triangle
                    child = list(rows)
                    child[u] |= 1 << v
                    child[v] |= 1 << u
                    g = Graph.from_rows(n, tuple(child))
                    if g.edge_count() > upper.e_max:
                        continue
                    if not is_ramsey_graph(g, pattern):
                        continue
                    ckey, cg = canonical_pair(g)
                    if ckey in seen:
                        continue
                    seen[ckey] = cg.rows
                    next_frontier[ckey] = cg.rows
                    if ckey not in upper_keys:
                        return SuiteReport(name, False,
                                           "edge additions left the upper census",
                                           encode_graph6(cg))
        frontier = next_frontier

    # downward: single-edge drops from the upper census
    for g in upper.graphs:
        rows = g.rows
        for u in range(n):
            for v in bits(rows[u] >> (u + 1) << (u + 1)):
                child = list(rows)
                child[u] &= ~(1 << v)
                child[v] &= ~(1 << u)
                child = tuple(child)
                if pattern_hits_after_edge_removal(child, n, pattern, u, v):
                    continue
                cg = Graph.from_rows(n, child)
                if not lower.e_min <= cg.edge_count() <= lower.e_max:
                    continue
                ckey = canonical_form(cg)
                if ckey not in lower_keys:
                    return SuiteReport(name, False,
                                       "an edge drop left the lower census",
                                       encode_graph6(cg))
    return SuiteReport(name, True,
                       f"{len(lower.graphs)} low / {len(upper.graphs)} high graphs")


def verify_descent(census: CensusSet, lower_censuses) -> SuiteReport:
    """Every residual graph of every member must appear in the
    corresponding smaller-pattern census.

    lower_censuses maps order -> CensusSet for pattern size one less.
    """
    name = f"residual descent {census.pattern} n={census.n}"
    if not _valid_for_checking(census):
        return SuiteReport(name, False, "; ".join(census.problems))
    key_cache: dict = {}
    for g in census.graphs:
        for v in range(g.n):
            r = residual(g, v)
            sub = lower_censuses.get(r.n)
            if sub is None:
                raise MissingCensus(
                    f"no order-{r.n} census supplied for {census.pattern} descent")
            if r.n not in key_cache:
                if not _valid_for_checking(sub):
                    return SuiteReport(name, False, "; ".join(sub.problems))
                key_cache[r.n] = sub.canonical_keys()
            if not sub.e_min <= r.edge_count() <= sub.e_max:
                continue  # residual falls outside what the sub-census covers
            if canonical_form(r) not in key_cache[r.n]:
                return SuiteReport(name, False,
                                   f"residual at vertex {v} missing below",
                                   encode_graph6(r))
    return SuiteReport(name, True, f"{len(census.graphs)} graphs descended")
