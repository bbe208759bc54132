import json
import os
from pathlib import Path

import pytest

from trifree.cli import main

DATA = Path(__file__).parent / ".." / "src" / "trifree" / "data"
CENSUS = DATA / "censuses"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_min_edges(capsys):
    code, out, _ = run(capsys, "min-edges", "--pattern", "J5", "--n", "10")
    assert code == 0 and "e(3,J5,10) = 15 exactly" in out


def test_min_edges_infinite(capsys):
    code, out, _ = run(capsys, "min-edges", "--pattern", "J4", "--n", "7")
    assert code == 0 and "infinite" in out and "R(3,J4) <= 7" in out


def test_enumerate_writes_census(tmp_path, capsys):
    out_file = tmp_path / "j4n6.g6"
    code, out, _ = run(capsys, "enumerate", "--pattern", "J4", "--n", "6",
                       "-o", out_file)
    assert code == 0
    manifest = json.loads((tmp_path / "j4n6.g6.manifest.json").read_text())
    assert manifest["complete"] is True
    assert manifest["counts"]["graphs"] == len(out_file.read_text().split())
    assert manifest["version"]


def test_enumerate_deterministic_rerun_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.g6", tmp_path / "b.g6"
    run(capsys, "enumerate", "--pattern", "J5", "--n", "8", "--deterministic", "-o", a)
    run(capsys, "enumerate", "--pattern", "J5", "--n", "8", "--deterministic", "-o", b)
    assert a.read_bytes() == b.read_bytes()
    ma = json.loads((tmp_path / "a.g6.manifest.json").read_text())
    mb = json.loads((tmp_path / "b.g6.manifest.json").read_text())
    for m in (ma, mb):
        m.pop("wall_seconds"), m.pop("started")
        m["config"].pop("out")
    assert ma == mb


def test_budget_exit_code_2(tmp_path, capsys):
    code, out, _ = run(capsys, "enumerate", "--pattern", "J5", "--n", "9",
                       "--budget-nodes", "40")
    assert code == 2


def test_invalid_input_exit_code_3(capsys):
    assert run(capsys, "min-edges", "--pattern", "Z9", "--n", "5")[0] == 3
    assert run(capsys, "canon", "/nonexistent/file.g6")[0] == 3


def test_bound_lemma(capsys):
    code, out, _ = run(capsys, "bound", "--pattern", "J12", "--n", "39",
                       "--table", DATA / "exact_small.ledger",
                       "--table", DATA / "j11_bounds.ledger")
    assert code == 0 and "e(3,J12,39) >= 117" in out


def test_bound_infeasible(capsys):
    code, out, _ = run(capsys, "bound", "--pattern", "J16", "--n", "91",
                       "--table", DATA / "j15_bounds.ledger")
    assert code == 0 and "R(3,J16) <= 91" in out


def test_bound_with_shipped_table_names(capsys):
    # bare names resolve against the shipped data directory
    code, out, _ = run(capsys, "bound", "--pattern", "J12", "--n", "39",
                       "--table", "exact_small", "--table", "j11_bounds")
    assert code == 0 and ">= 117" in out and "refinement raised this from 116" in out
    code, _, err = run(capsys, "bound", "--pattern", "J12", "--n", "39",
                       "--table", "no_such_table")
    assert code == 3 and "no ledger" in err


def test_feasible_lists_histograms(capsys):
    code, out, _ = run(capsys, "feasible", "--pattern", "J12", "--n", "39", "--e", "116",
                       "--table", DATA / "exact_small.ledger",
                       "--table", DATA / "j11_bounds.ledger")
    assert code == 0
    assert "2 feasible histograms" in out
    assert "n_4=1, n_6=38" in out and "rejected by per-vertex refinement" in out


def test_propagate_and_ramsey_upper(tmp_path, capsys):
    merged = tmp_path / "merged.ledger"
    code, out, _ = run(capsys, "propagate", "--pattern", "J12",
                       "--n-lo", "50", "--n-hi", "53",
                       "--table", DATA / "exact_small.ledger",
                       "--table", DATA / "j11_bounds.ledger",
                       "-o", merged)
    assert code == 0 and "e(3,J12,53) infinite" in out
    code, out, _ = run(capsys, "ramsey-upper", "--pattern", "J12", "--table", merged)
    assert code == 0 and "R(3,J12) <= 53" in out


def test_circulant_verify(capsys, tmp_path):
    witness = tmp_path / "w.g6"
    code, out, _ = run(capsys, "circulant-verify", "--n", "54",
                       "--dist", "2,3,9,16,20,24", "--pattern", "J13", "-o", witness)
    assert code == 0
    assert "R(3,J13) >= 55" in out
    assert witness.read_text().startswith("#")


def test_circulant_verify_negative(capsys):
    code, out, _ = run(capsys, "circulant-verify", "--n", "7",
                       "--dist", "1", "--pattern", "J4")
    assert code == 1 and "NOT" in out


def test_circulant_search(capsys):
    code, out, _ = run(capsys, "circulant-search", "--n", "13", "--pattern", "K5")
    assert code == 0 and "13: 1,5" in out


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "edge-minimal",
                       "--census", CENSUS / "j5_n10_min.g6")
    assert code == 0 and "pass" in out
    code, out, _ = run(capsys, "verify", "--suite", "drop-add",
                       "--lower", CENSUS / "j7_n8_e4.g6",
                       "--upper", CENSUS / "j7_n8_e5.g6")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--suite", "descent",
                       "--census", CENSUS / "j5_n10.g6",
                       "--sub", CENSUS / "j4_n5.g6", "--sub", CENSUS / "j4_n6.g6")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--suite", "edge-minimal",
                       "--census", CENSUS / "mutant_duplicate.g6")
    assert code == 4 and "FAIL" in out


def test_explicit_complement_pattern_file(tmp_path, capsys):
    # complement of K4-e is one edge plus two isolated vertices, so this
    # file-specified pattern must agree with the built-in J4
    from trifree.bitgraph import disjoint_union, empty_graph, path_graph
    from trifree.graph6 import encode_graph6

    comp = tmp_path / "comp.g6"
    comp.write_text(encode_graph6(disjoint_union(path_graph(2), empty_graph(2))) + "\n")
    code, out, _ = run(capsys, "min-edges", "--pattern", f"compl:{comp}", "--n", "6")
    assert code == 0 and "= 6 exactly" in out


def test_canon_dedups(tmp_path, capsys):
    src = tmp_path / "in.g6"
    src.write_text("D??\nDQo\nD??\n")
    out_file = tmp_path / "out.g6"
    code, _, err = run(capsys, "canon", src, "-o", out_file)
    assert code == 0
    assert len(out_file.read_text().split()) == 2
    assert "3 graphs in, 2 isomorphism classes" in err


def test_convert_info(capsys, tmp_path):
    src = tmp_path / "in.g6"
    src.write_text("D??\n")
    code, out, _ = run(capsys, "convert", src, "--to", "info")
    assert code == 0 and "n=5 e=0" in out and "triangle_free=True" in out


def test_grid(capsys):
    code, out, _ = run(capsys, "grid", "--table", DATA / "exact_small.ledger",
                       "--k-lo", "4", "--k-hi", "6", "--n-lo", "5", "--n-hi", "11")
    assert code == 0 and "inf" in out
