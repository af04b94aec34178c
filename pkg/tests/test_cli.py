import json

import pytest

from localchrom import (
    Coloring,
    complement_family,
    directed_local_value,
    graph_from_dict,
    is_proper,
    load_json,
    read_dimacs,
    save_json,
)
from localchrom.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def run_json(capsys, *argv):
    rc, out, err = run(capsys, *argv)
    return rc, json.loads(out) if out else None, err


def test_gen_to_stdout(capsys):
    rc, doc, _ = run_json(capsys, "gen", "cycle", "5", "--json")
    assert rc == 0
    assert doc["n"] == 5
    assert len(doc["edges"]) == 5


def test_gen_solve_pipeline(capsys, tmp_path):
    gpath = str(tmp_path / "g.json")
    rc, _, _ = run(capsys, "gen", "shift", "5", "--out", gpath)
    assert rc == 0
    rpath = str(tmp_path / "r.json")
    rc, _, _ = run(capsys, "solve", "psi", gpath, "--json", "--out", rpath)
    assert rc == 0
    doc = load_json(rpath)
    assert doc["value"] == 3
    assert doc["exact"] is True
    assert doc["nodes"] >= 0
    g = graph_from_dict(load_json(gpath))
    col = Coloring(doc["witness"]["colors"])
    assert is_proper(g, col)[0]


def test_gen_dimacs_output(capsys, tmp_path):
    cpath = str(tmp_path / "g.col")
    rc, _, _ = run(capsys, "gen", "shift", "4", "--out", cpath)
    assert rc == 0
    g = read_dimacs(cpath)
    assert g.n == 6
    assert len(g.edges) == 4
    # digraphs have no DIMACS form
    rc, _, err = run(capsys, "gen", "symdirshift", "3", "--out",
                     str(tmp_path / "d.col"))
    assert rc == 2
    assert "error:" in err


def test_gen_oriented_shift_carries_colors(capsys):
    rc, doc, _ = run_json(capsys, "gen", "orientedshift", "4", "--json")
    assert rc == 0
    assert "arcs" in doc
    assert len(doc["colors"]) == 12


def test_solve_directed_quantities(capsys, tmp_path):
    apath = str(tmp_path / "alt.json")
    run(capsys, "gen", "altcycle", "2", "--out", apath)
    rc, doc, _ = run_json(capsys, "solve", "psid", apath, "--json")
    assert rc == 0
    assert doc["value"] == 3
    cpath = str(tmp_path / "c5.json")
    run(capsys, "gen", "cycle", "5", "--out", cpath)
    rc, doc, _ = run_json(capsys, "solve", "psid-min", cpath, "--json")
    assert rc == 0
    assert doc["value"] == 2
    assert set(doc["witness"]) == {"arcs", "colors"}
    assert len(doc["witness"]["arcs"]) == 5


def test_solve_local2_both_branches(capsys, tmp_path):
    opath = str(tmp_path / "os3.json")
    run(capsys, "gen", "orientedshift", "3", "--out", opath)
    rc, doc, _ = run_json(capsys, "solve", "local2", opath, "--json")
    assert rc == 0
    assert doc["value_le_2"] is True
    assert "universal_hom" in doc
    tpath = str(tmp_path / "tt3.json")
    save_json({"n": 3, "labels": ["0", "1", "2"],
               "arcs": [[0, 1], [0, 2], [1, 2]]}, tpath)
    rc, doc, _ = run_json(capsys, "solve", "local2", tpath, "--json")
    assert rc == 0
    assert doc["value_le_2"] is False
    assert doc["obstruction_h"] >= 1
    assert "obstruction_hom" in doc


def test_solve_is_byte_stable_without_timing(capsys, tmp_path):
    gpath = str(tmp_path / "g.json")
    run(capsys, "gen", "kneser", "5", "2", "--out", gpath)
    rc, out1, _ = run(capsys, "solve", "chi", gpath, "--json", "--no-timing")
    rc2, out2, _ = run(capsys, "solve", "chi", gpath, "--json", "--no-timing")
    assert rc == rc2 == 0
    assert out1 == out2
    assert json.loads(out1)["ms"] == 0.0


def test_solve_workers_flag_does_not_change_results(capsys, tmp_path):
    gpath = str(tmp_path / "g.json")
    run(capsys, "gen", "shift", "6", "--out", gpath)
    _, out1, _ = run(capsys, "solve", "psi", gpath, "--json", "--no-timing",
                     "--workers", "1")
    _, out4, _ = run(capsys, "solve", "psi", gpath, "--json", "--no-timing",
                     "--workers", "4")
    assert out1 == out4


def test_solve_rejects_wrong_document_kind(capsys, tmp_path):
    dpath = str(tmp_path / "d.json")
    run(capsys, "gen", "symdirshift", "3", "--out", dpath)
    rc, _, err = run(capsys, "solve", "chi", dpath, "--json")
    assert rc == 2
    assert "error:" in err
    gpath = str(tmp_path / "g.json")
    run(capsys, "gen", "cycle", "4", "--out", gpath)
    rc, _, err = run(capsys, "solve", "psid", gpath, "--json")
    assert rc == 2
    # a document from a different subsystem entirely, with no "n" key
    fpath = str(tmp_path / "fam.json")
    with open(fpath, "w") as fh:
        json.dump({"A": [[1], [2]], "B": [[3], [1]]}, fh)
    rc, _, err = run(capsys, "solve", "chi", fpath, "--json")
    assert rc == 2
    assert "error:" in err
    rc, _, err = run(capsys, "translate", "c2f", gpath, fpath, "--json")
    assert rc == 2
    assert "error:" in err


def test_orient_balanced_and_wide(capsys, tmp_path):
    kpath = str(tmp_path / "k4.json")
    run(capsys, "gen", "complete", "4", "--out", kpath)
    cpath = str(tmp_path / "col.json")
    save_json({"colors": [0, 1, 2, 3]}, cpath)
    rc, doc, _ = run_json(capsys, "orient", "balanced", kpath, cpath, "--json")
    assert rc == 0
    d = graph_from_dict(doc)
    assert directed_local_value(d, Coloring([0, 1, 2, 3])) <= 3

    c6path = str(tmp_path / "c6.json")
    run(capsys, "gen", "cycle", "6", "--out", c6path)
    wpath = str(tmp_path / "wide.json")
    save_json({"colors": [1, 2, 3, 4, 3, 2]}, wpath)
    rc, doc, _ = run_json(capsys, "orient", "wide", c6path, wpath, "--json")
    assert rc == 0
    d = graph_from_dict(doc)
    assert directed_local_value(d, Coloring([1, 2, 3, 4, 3, 2])) <= 2


def test_orient_swide_exit_codes(capsys):
    rc, doc, _ = run_json(capsys, "orient", "swide", "3", "4", "--json")
    assert rc == 0
    assert doc["report"]["property1_ok"] is True
    assert doc["report"]["property2_ok"] is True
    assert doc["digraph"] is not None
    rc, doc, _ = run_json(capsys, "orient", "swide", "2", "4", "--json")
    assert rc == 1
    assert doc["report"]["property2_ok"] is False
    assert doc["digraph"] is None
    assert len(doc["report"]["failures"]) == 3


def test_orient_mycielski(capsys, tmp_path):
    apath = str(tmp_path / "a.json")
    run(capsys, "gen", "altcycle", "1", "--out", apath)
    rc, doc, _ = run_json(capsys, "orient", "mycielski", apath, "--json")
    assert rc == 0
    assert doc["n"] == 7


def test_translate_round_trip(capsys, tmp_path):
    gpath = str(tmp_path / "g.json")
    run(capsys, "gen", "shift", "4", "--out", gpath)
    rpath = str(tmp_path / "psi.json")
    run(capsys, "solve", "psi", gpath, "--json", "--out", rpath)
    cpath = str(tmp_path / "col.json")
    save_json(load_json(rpath)["witness"], cpath)
    fpath = str(tmp_path / "fam.json")
    rc, _, _ = run(capsys, "translate", "c2f", gpath, cpath, "--out", fpath)
    assert rc == 0
    fam = load_json(fpath)
    assert fam["mode"] == "ordered"
    assert len(fam["A"]) == 4
    rc, doc, _ = run_json(capsys, "translate", "f2c", fpath, "--json")
    assert rc == 0
    g = graph_from_dict({k: doc[k] for k in ("n", "labels", "edges")})
    assert is_proper(g, Coloring(doc["colors"]))[0]


def test_translate_needs_mode(capsys, tmp_path):
    fpath = str(tmp_path / "fam.json")
    save_json({"A": [[1], [2]], "B": [[2], [1]]}, fpath)
    rc, _, err = run(capsys, "translate", "f2c", fpath, "--json")
    assert rc == 2
    assert "mode" in err


def test_setsys_check_exit_codes(capsys, tmp_path):
    good = str(tmp_path / "good.json")
    save_json(complement_family(3, 2).to_dict(), good)
    rc, doc, _ = run_json(capsys, "setsys", "check", good, "--mode", "bollobas",
                          "--json")
    assert rc == 0
    assert doc["ok"] is True
    bad = str(tmp_path / "bad.json")
    save_json({"A": [[1], [2]], "B": [[3], [1]]}, bad)
    rc, doc, _ = run_json(capsys, "setsys", "check", bad, "--mode", "bollobas",
                          "--json")
    assert rc == 1
    assert doc["ok"] is False
    assert (doc["i"], doc["j"]) == (2, 1)
    # same family passes the one-directional mode
    rc, doc, _ = run_json(capsys, "setsys", "check", bad, "--mode", "skew",
                          "--json")
    assert rc == 0


def test_setsys_sum_and_bounds(capsys, tmp_path):
    fpath = str(tmp_path / "fam.json")
    save_json(complement_family(4, 2).to_dict(), fpath)
    rc, doc, _ = run_json(capsys, "setsys", "sum", fpath, "--json")
    assert rc == 0
    assert doc["sum"] == "1"
    assert doc["le_1"] is True
    rc, doc, _ = run_json(capsys, "setsys", "bound", "--k", "3", "--mode",
                          "ordered", "--json")
    assert doc["bound"] == 12
    rc, doc, _ = run_json(capsys, "setsys", "bound", "--r", "2", "--s", "2",
                          "--json")
    assert doc["bound"] == 6


def test_setsys_search(capsys):
    rc, doc, _ = run_json(capsys, "setsys", "search", "--k", "2", "--json")
    assert rc == 0
    assert doc["best_m"] == 4
    assert doc["exhaustive"] is True


def test_verify_single_suite(capsys):
    rc, doc, _ = run_json(capsys, "verify", "shift-chromatic", "--json")
    assert rc == 0
    assert doc["ok"] is True
    assert doc["suites"][0]["suite"] == "shift-chromatic"
    assert all(c["passed"] for c in doc["suites"][0]["checks"])


def test_verify_human_output(capsys):
    rc, out, _ = run(capsys, "verify", "sym-shift")
    assert rc == 0
    assert "suite sym-shift:" in out
    assert "PASS" in out


def test_verify_unknown_suite(capsys):
    rc, _, err = run(capsys, "verify", "nope", "--json")
    assert rc == 2
    assert "error:" in err


def test_experiment_wide_threshold(capsys):
    rc, doc, _ = run_json(capsys, "experiment", "wide-threshold", "--t", "4",
                          "--s-max", "4", "--json")
    assert rc == 0
    rows = {row["s"]: row for row in doc["rows"]}
    assert rows[2]["property2_ok"] is False
    assert rows[3]["property2_ok"] is True
    assert rows[3]["value"] == 2
    assert rows[4]["property2_ok"] is True


def test_experiment_family_search(capsys):
    rc, doc, _ = run_json(capsys, "experiment", "family-search", "--k", "2",
                          "--json")
    assert rc == 0
    assert doc["best_m"] == 4
    assert doc["bound"] == 6


def test_usage_errors_exit_2(capsys, tmp_path):
    rc, _, err = run(capsys, "gen", "shift", "abc", "--json")
    assert rc == 2
    rc, _, err = run(capsys, "gen", "shift", "--json")
    assert rc == 2
    rc, _, err = run(capsys, "solve", "chi", str(tmp_path / "missing.json"))
    assert rc == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
