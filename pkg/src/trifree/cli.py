"""Command-line front end.

Every subcommand runs one reproducible job and, when it produces an
artifact, writes a JSON manifest beside it recording the configuration,
package version, counts, completeness flag, and wall time.  Exit codes:
0 success, 2 incomplete (budget ran out), 3 invalid input, 4 internal
consistency failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .bitgraph import degree_histogram, is_triangle_free, max_edge_bound
from .bounds import (
    BoundTable,
    TableView,
    propagate,
    ramsey_upper_bound,
    read_ledger,
    write_ledger,
    format_grid,
)
from .canon import canonical_form, canonical_pair
from .circulant import CirculantSpec, build_circulant, search_circulants, verify_witness
from .consistency import (
    CensusSet,
    read_census,
    verify_descent,
    verify_drop_add_closure,
    verify_edge_minimal,
    write_census,
)
from .enumeration import (
    Budget,
    CensusBuilder,
    enumerate_min_edges,
    full_census,
    generate_mtf_ramsey,
    is_maximal_triangle_free,
)
from .errors import ExactConflict, ResourceLimit, TrifreeError
from .feasibility import (
    feasible_degree_histograms,
    min_edges_bound,
    survives_vertex_refinement,
)
from .gluing import GlueJob, glue_extend
from .graph6 import encode_graph6, read_graph6_file
from .patterns import Pattern, parse_pattern

DATA_DIR = Path(__file__).parent / "data"


def _budget(args) -> Budget:
    nodes = args.budget_nodes or int(os.environ.get("TRIFREE_BUDGET_NODES", 10 ** 9))
    seconds = args.budget_seconds or float(os.environ.get("TRIFREE_BUDGET_SECONDS", 3600))
    return Budget(nodes, seconds)


def _workers(args) -> int:
    if getattr(args, "deterministic", False):
        return 1
    return max(1, getattr(args, "workers", 1) or 1)


def _pattern(args) -> Pattern:
    text = args.pattern
    if text.startswith("compl:"):
        path = text[len("compl:"):]
        graphs = list(read_graph6_file(path))
        if len(graphs) != 1:
            raise TrifreeError(f"{path} must hold exactly one complement graph")
        return Pattern.from_complement_graph(graphs[0])
    return parse_pattern(text)


def _load_tables(paths) -> BoundTable:
    """Read ledgers; bare names fall back to the shipped data directory."""
    table = BoundTable()
    for p in paths:
        candidates = [Path(p), DATA_DIR / p, DATA_DIR / f"{p}.ledger"]
        for c in candidates:
            if c.exists():
                read_ledger(c, table)
                break
        else:
            raise FileNotFoundError(f"no ledger at {p} (or shipped as {candidates[-1].name})")
    return table


def _write_manifest(args, command: str, started: float, counts: dict, complete: bool):
    path = getattr(args, "manifest", None)
    out = getattr(args, "out", None)
    if path is None and out is not None:
        path = str(out) + ".manifest.json"
    if path is None:
        return
    manifest = {
        "command": command,
        "config": {k: v for k, v in vars(args).items()
                   if k not in ("func",) and v is not None},
        "version": __version__,
        "counts": counts,
        "complete": complete,
        "wall_seconds": round(time.time() - started, 3),
        "started": time.strftime("%Y-%m-%dT%H:%M:%S", time.gmtime(started)),
    }
    manifest["config"] = {k: (str(v) if isinstance(v, Path) else v)
                          for k, v in manifest["config"].items()}
    with open(path, "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _write_graphs(path, graphs):
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")


def cmd_enumerate(args):
    started = time.time()
    pattern = _pattern(args)
    result = full_census(pattern, args.n, _budget(args), _workers(args),
                         e_min=args.e_min or 0, e_max=args.e_max)
    census = CensusSet.from_graphs(pattern, args.n, result.graphs, result.complete,
                                   e_min=args.e_min or 0,
                                   e_max=args.e_max if args.e_max is not None
                                   else max_edge_bound(pattern.size, args.n))
    if args.out:
        write_census(args.out, census)
    print(f"{pattern} n={args.n}: {len(result.graphs)} graphs, "
          f"complete={result.complete}, by edges {census.by_edge_count()}")
    _write_manifest(args, "enumerate", started,
                    {"graphs": len(result.graphs),
                     "by_edge_count": {str(k): v for k, v in census.by_edge_count().items()}},
                    result.complete)
    if not result.complete:
        raise ResourceLimit("budget exhausted; result marked incomplete")


def cmd_min_edges(args):
    started = time.time()
    pattern = _pattern(args)
    result = enumerate_min_edges(pattern, args.n, _budget(args), _workers(args))
    if not result.complete:
        print(f"e(3,{pattern},{args.n}): incomplete (budget)")
        _write_manifest(args, "min-edges", started, {}, False)
        raise ResourceLimit("budget exhausted; result marked incomplete")
    if result.infinite:
        print(f"e(3,{pattern},{args.n}) = infinite "
              f"(no such graphs; R(3,{pattern}) <= {args.n})")
    else:
        print(f"e(3,{pattern},{args.n}) = {result.value} exactly, "
              f"{len(result.witnesses)} minimum witnesses")
    if args.out:
        _write_graphs(args.out, result.witnesses)
    _write_manifest(args, "min-edges", started,
                    {"value": None if result.infinite else result.value,
                     "infinite": result.infinite,
                     "witnesses": len(result.witnesses)}, True)


def cmd_mtf(args):
    started = time.time()
    pattern = _pattern(args)
    result = generate_mtf_ramsey(pattern, args.n, _budget(args), _workers(args))
    print(f"mtf {pattern} n={args.n}: {len(result.graphs)} graphs, complete={result.complete}")
    if args.out:
        _write_graphs(args.out, result.graphs)
    _write_manifest(args, "mtf", started, {"graphs": len(result.graphs)}, result.complete)
    if not result.complete:
        raise ResourceLimit("budget exhausted; result marked incomplete")


def cmd_glue(args):
    started = time.time()
    hosts = list(read_graph6_file(args.hosts))
    budget = _budget(args)
    found = {}
    complete = True
    for host in hosts:
        job = GlueJob(host, args.d, args.target_size,
                      e_min=args.e_min or 0, e_max=args.e_max)
        sub = glue_extend(job, budget)
        complete = complete and sub.complete
        for g in sub.graphs:
            found.setdefault(canonical_form(g), g)
    graphs = [found[k] for k in sorted(found)]
    tally: dict = {}
    for g in graphs:
        tally[g.edge_count()] = tally.get(g.edge_count(), 0) + 1
    print(f"glue J{args.target_size} d={args.d}: {len(hosts)} hosts -> "
          f"{len(graphs)} graphs, by edges {dict(sorted(tally.items()))}")
    if args.out:
        _write_graphs(args.out, graphs)
    _write_manifest(args, "glue", started,
                    {"hosts": len(hosts), "graphs": len(graphs),
                     "by_edge_count": {str(k): v for k, v in sorted(tally.items())}},
                    complete)
    if not complete:
        raise ResourceLimit("budget exhausted; result marked incomplete")


def cmd_feasible(args):
    started = time.time()
    pattern = _pattern(args)
    table = _load_tables(args.table)
    view = TableView(table, allow_closed_form=args.closed_form_fallback)
    hists = feasible_degree_histograms(pattern.size, args.n, args.e, view)
    survivors = [h for h in hists if survives_vertex_refinement(h, args.e, pattern.size, view)]
    print(f"{pattern} n={args.n} e={args.e}: {len(hists)} feasible histograms")
    for h in hists:
        mark = "" if h in survivors else "   [rejected by per-vertex refinement]"
        print(f"  {h}{mark}")
    if view.fallbacks:
        for k, n, cf in view.fallbacks:
            print(f"  note: closed-form fallback used for ({k},{n}) -> {cf}")
    _write_manifest(args, "feasible", started,
                    {"histograms": len(hists), "survivors": len(survivors)}, True)


def cmd_bound(args):
    started = time.time()
    pattern = _pattern(args)
    table = _load_tables(args.table)
    view = TableView(table, allow_closed_form=args.closed_form_fallback)
    b = min_edges_bound(pattern.size, args.n, view, refine=not args.no_refine)
    suffix = f"  [{b.note}]" if b.note else ""
    if b.is_infinite:
        print(f"e(3,{pattern},{args.n}) infeasible for every edge count: "
              f"R(3,{pattern}) <= {args.n}{suffix}")
    else:
        print(f"e(3,{pattern},{args.n}) >= {b.value}{suffix}")
    if view.fallbacks:
        for k, n, cf in view.fallbacks:
            print(f"  note: closed-form fallback used for ({k},{n}) -> {cf}")
    _write_manifest(args, "bound", started,
                    {"kind": b.kind, "value": b.value}, True)


def cmd_propagate(args):
    started = time.time()
    pattern = _pattern(args)
    table = _load_tables(args.table)
    merged = propagate(table, pattern.size, args.n_lo, args.n_hi,
                       refine=not args.no_refine,
                       allow_closed_form=args.closed_form_fallback)
    for n, b in merged:
        print(f"e(3,{pattern},{n}) {b}")
    if args.out:
        write_ledger(args.out, table)
    _write_manifest(args, "propagate", started, {"cells": len(merged)}, True)


def cmd_ramsey_upper(args):
    started = time.time()
    pattern = _pattern(args)
    table = _load_tables(args.table)
    n = ramsey_upper_bound(table, pattern.size)
    if n is None:
        print(f"no infeasible order recorded for {pattern}")
    else:
        print(f"R(3,{pattern}) <= {n}")
    _write_manifest(args, "ramsey-upper", started, {"upper": n}, True)


def cmd_grid(args):
    table = _load_tables(args.table)
    sys.stdout.write(format_grid(table, args.k_lo, args.k_hi, args.n_lo, args.n_hi))


def cmd_circulant_verify(args):
    started = time.time()
    pattern = _pattern(args)
    spec = CirculantSpec(args.n, tuple(sorted(int(d) for d in args.dist.split(","))))
    ok = verify_witness(spec, pattern)
    g = build_circulant(spec)
    if ok:
        print(f"circulant {spec} verified as triangle-free with no {pattern} "
              f"in the complement ({g.edge_count()} edges): R(3,{pattern}) >= {args.n + 1}")
    else:
        print(f"circulant {spec} is NOT a witness for {pattern}")
    if args.out and ok:
        with open(args.out, "w") as fh:
            fh.write(f"# witness: R(3,{pattern}) >= {args.n + 1}; spec {spec}\n")
            fh.write(encode_graph6(g) + "\n")
    _write_manifest(args, "circulant-verify", started,
                    {"witness": ok, "edges": g.edge_count()}, True)
    if not ok:
        return 1
    return 0


def cmd_circulant_search(args):
    started = time.time()
    pattern = _pattern(args)
    result = search_circulants(args.n, pattern, _budget(args))
    for spec in result.witnesses:
        print(f"witness {spec}  (R(3,{pattern}) >= {args.n + 1})")
    print(f"{len(result.witnesses)} witness classes among {result.candidates_checked} "
          f"triangle-free candidates, complete={result.complete}")
    if args.out:
        with open(args.out, "w") as fh:
            for spec in result.witnesses:
                fh.write(f"# {spec}\n")
                fh.write(encode_graph6(build_circulant(spec)) + "\n")
    _write_manifest(args, "circulant-search", started,
                    {"witnesses": len(result.witnesses),
                     "candidates": result.candidates_checked}, result.complete)
    if not result.complete:
        raise ResourceLimit("budget exhausted; result marked incomplete")


def cmd_verify(args):
    started = time.time()
    reports = []
    if args.suite == "edge-minimal":
        reports.append(verify_edge_minimal(read_census(args.census)))
    elif args.suite == "drop-add":
        reports.append(verify_drop_add_closure(read_census(args.lower),
                                               read_census(args.upper)))
    elif args.suite == "descent":
        subs = {}
        for path in args.sub:
            c = read_census(path)
            subs[c.n] = c
        reports.append(verify_descent(read_census(args.census), subs))
    for r in reports:
        print(r)
    ok = all(r.passed for r in reports)
    _write_manifest(args, "verify", started,
                    {"suites": len(reports), "passed": sum(r.passed for r in reports)}, True)
    return 0 if ok else 4


def cmd_canon(args):
    started = time.time()
    seen = {}
    count = 0
    for g in read_graph6_file(args.input):
        count += 1
        key, cg = canonical_pair(g)
        seen.setdefault(key, cg)
    graphs = [seen[k] for k in sorted(seen)]
    if args.out:
        _write_graphs(args.out, graphs)
    else:
        for g in graphs:
            print(encode_graph6(g))
    print(f"{count} graphs in, {len(graphs)} isomorphism classes",
          file=sys.stderr)
    _write_manifest(args, "canon", started,
                    {"input": count, "classes": len(graphs)}, True)


def cmd_convert(args):
    for g in read_graph6_file(args.input):
        if args.to == "edges":
            edges = " ".join(f"{u}-{v}" for u, v in g.edges())
            print(f"n={g.n} e={g.edge_count()} {edges}")
        elif args.to == "info":
            h = degree_histogram(g).as_dict()
            tf = is_triangle_free(g)
            mtf = tf and is_maximal_triangle_free(g)
            print(f"n={g.n} e={g.edge_count()} degrees={h} triangle_free={tf} mtf={mtf}")
        else:  # matrix
            for u in range(g.n):
                print("".join("1" if g.rows[u] >> v & 1 else "0" for v in range(g.n)))
            print()


def _add_common(p, budget=True):
    if budget:
        p.add_argument("--budget-nodes", type=int, default=None,
                       help="search node budget (default env TRIFREE_BUDGET_NODES or 1e9)")
        p.add_argument("--budget-seconds", type=float, default=None,
                       help="wall clock budget (default env TRIFREE_BUDGET_SECONDS or 3600)")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--deterministic", action="store_true",
                       help="force single-worker sequential reference mode")
    p.add_argument("--manifest", default=None, help="manifest path override")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="trifree",
                                 description=__doc__.splitlines()[0] if __doc__ else "")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="full census of Ramsey graphs at one order")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e-min", type=int, default=None)
    p.add_argument("--e-max", type=int, default=None)
    p.add_argument("-o", "--out", default=None)
    _add_common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("min-edges", help="minimum edge count and witnesses")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("-o", "--out", default=None)
    _add_common(p)
    p.set_defaults(func=cmd_min_edges)

    p = sub.add_parser("mtf", help="maximal triangle-free Ramsey graphs at one order")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("-o", "--out", default=None)
    _add_common(p)
    p.set_defaults(func=cmd_mtf)

    p = sub.add_parser("glue", help="neighborhood gluing extension of host graphs")
    p.add_argument("--hosts", required=True, help="graph6 file of host graphs")
    p.add_argument("--d", type=int, required=True, help="expansion degree")
    p.add_argument("--target-size", type=int, required=True,
                   help="pattern size k+1 of the outputs")
    p.add_argument("--e-min", type=int, default=None)
    p.add_argument("--e-max", type=int, default=None)
    p.add_argument("-o", "--out", default=None)
    _add_common(p)
    p.set_defaults(func=cmd_glue)

    p = sub.add_parser("feasible", help="feasible degree histograms at (K, n, e)")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--table", action="append", required=True)
    p.add_argument("--closed-form-fallback", action="store_true",
                   help="fill missing cells from the closed form (logged)")
    _add_common(p, budget=False)
    p.set_defaults(func=cmd_feasible)

    p = sub.add_parser("bound", help="feasibility lower bound on the minimum edge count")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--table", action="append", required=True)
    p.add_argument("--no-refine", action="store_true")
    p.add_argument("--closed-form-fallback", action="store_true")
    _add_common(p, budget=False)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("propagate", help="derive a whole bound row from the row below")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n-lo", type=int, required=True)
    p.add_argument("--n-hi", type=int, required=True)
    p.add_argument("--table", action="append", required=True)
    p.add_argument("--no-refine", action="store_true")
    p.add_argument("--closed-form-fallback", action="store_true")
    p.add_argument("-o", "--out", default=None, help="write merged ledger here")
    _add_common(p, budget=False)
    p.set_defaults(func=cmd_propagate)

    p = sub.add_parser("ramsey-upper", help="least recorded infeasible order")
    p.add_argument("--pattern", required=True)
    p.add_argument("--table", action="append", required=True)
    _add_common(p, budget=False)
    p.set_defaults(func=cmd_ramsey_upper)

    p = sub.add_parser("grid", help="render a bound table as a grid")
    p.add_argument("--table", action="append", required=True)
    p.add_argument("--k-lo", type=int, required=True)
    p.add_argument("--k-hi", type=int, required=True)
    p.add_argument("--n-lo", type=int, required=True)
    p.add_argument("--n-hi", type=int, required=True)
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("circulant-verify", help="check one circulant witness")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dist", required=True, help="comma separated distances")
    p.add_argument("--pattern", required=True)
    p.add_argument("-o", "--out", default=None)
    _add_common(p, budget=False)
    p.set_defaults(func=cmd_circulant_verify)

    p = sub.add_parser("circulant-search", help="exhaust distance sets at one order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("-o", "--out", default=None)
    _add_common(p)
    p.set_defaults(func=cmd_circulant_search)

    p = sub.add_parser("verify", help="consistency suites over census files")
    p.add_argument("--suite", required=True,
                   choices=["edge-minimal", "drop-add", "descent"])
    p.add_argument("--census", default=None)
    p.add_argument("--lower", default=None)
    p.add_argument("--upper", default=None)
    p.add_argument("--sub", action="append", default=[],
                   help="census files one pattern size down (descent)")
    _add_common(p, budget=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("canon", help="canonical forms / isomorphism dedup of a graph6 file")
    p.add_argument("input")
    p.add_argument("-o", "--out", default=None)
    _add_common(p, budget=False)
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("convert", help="graph6 inspection tools")
    p.add_argument("input")
    p.add_argument("--to", choices=["edges", "matrix", "info"], default="info")
    p.set_defaults(func=cmd_convert)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rc = args.func(args)
    except ResourceLimit:
        return 2
    except ExactConflict as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 4
    except (TrifreeError, FileNotFoundError, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 3
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
