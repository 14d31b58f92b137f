import json
import math
import os
import subprocess

import pytest

CLI = os.environ.get("KMATCH_CLI", "kmatch")


def run(*args, check_code=0):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, timeout=300)
    assert proc.returncode == check_code, proc.stderr
    return proc


def run_json(*args, check_code=0):
    return json.loads(run(*args, check_code=check_code).stdout)


@pytest.fixture
def complete53(tmp_path):
    path = tmp_path / "complete53.json"
    run("--out", path, "construct", "complete", "--n", 5, "--r", 3)
    return path


def test_count_g():
    assert run_json("count", "g", "--n", 9, "--r", 3, "--k", 2, "--a", 3) == {"g": 14}


def test_count_binomial_and_b_size():
    assert run_json("count", "binomial", "--n", 7, "--r", 3) == {"binomial": 35}
    assert run_json("count", "b-size", "--n", 5, "--r", 3, "--k", 2, "--i", 1) == {"b_size": 4}


def test_big_counts_become_strings():
    out = run_json("count", "binomial", "--n", 128, "--r", 64)
    assert isinstance(out["binomial"], str)
    assert int(out["binomial"]) == math.comb(128, 64)


def test_nu(complete53):
    out = run_json("nu", "--k", 2, "--in", complete53)
    assert out["nu"] == 2
    assert len(out["witness"]) == 2


def test_decide_and_greedy(complete53):
    assert run_json("decide", "--k", 2, "--size", 3, "--in", complete53)["exists"] is False
    yes = run_json("decide", "--k", 2, "--size", 2, "--in", complete53)
    assert yes["exists"] is True and yes["witness"] == [[1, 2, 3], [1, 4, 5]]
    assert run_json("greedy", "--k", 2, "--in", complete53)["size"] == 2


def test_extremal():
    out = run_json("extremal", "--n", 5, "--r", 3, "--k", 2, "--a", 2)
    assert out["value"] == 4
    assert out["witness"]["edges"] == [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]


def test_construct_round_trip(tmp_path):
    path = tmp_path / "f.json"
    run("--out", path, "construct", "frankl", "--n", 9, "--r", 3, "--k", 2, "--a", 3, "--i", 0)
    doc = json.loads(path.read_text())
    assert doc["n"] == 9 and doc["r"] == 3 and len(doc["edges"]) == 14
    assert run_json("nu", "--k", 2, "--in", path)["nu"] == 2
    general = run_json("construct", "general", "--n", 8, "--r", 4, "--k", 2, "--i", 0,
                       "--block", "1,2", "--block", "3,4")
    assert len(general["edges"]) == 29
    assert len(run_json("construct", "h0", "--n", 10, "--r", 3, "--k", 2, "--a", 3)["edges"]) == 20
    assert len(run_json("construct", "b", "--n", 5, "--r", 3, "--k", 2, "--i", 1)["edges"]) == 4


def test_shift(tmp_path):
    path = tmp_path / "h.json"
    path.write_text(json.dumps({"n": 3, "r": 2, "edges": [[1, 2]]}))
    assert run_json("shift", "apply", "--i", 1, "--j", 3, "--in", path)["edges"] == [[2, 3]]
    stab = run_json("shift", "stabilize", "--in", path)
    assert stab["hypergraph"]["edges"] == [[2, 3]] and stab["effective_shifts"] >= 1
    run("shift", "apply", "--i", 3, "--j", 1, "--in", path, check_code=2)


def test_shift_check_reports_nu_increase(tmp_path):
    path = tmp_path / "h.json"
    edges = [[1, 2, 4], [1, 2, 5], [1, 2, 6], [1, 3, 5], [1, 4, 5], [1, 4, 6], [1, 5, 6], [2, 4, 6]]
    path.write_text(json.dumps({"n": 6, "r": 3, "edges": edges}))
    out = run_json("shift", "check", "--k", 2, "--in", path, check_code=1)
    assert out["sizes_preserved"] is True
    assert {"i": 5, "j": 6, "nu_after": 3} in out["nu_increases"]
    ok = tmp_path / "ok.json"
    ok.write_text(json.dumps({"n": 5, "r": 2, "edges": [[1, 2], [3, 4]]}))
    assert run_json("shift", "check", "--k", 1, "--in", ok)["nu_increases"] == []


def test_coupling():
    out = run_json("coupling", "verify", "--n", 6, "--r", 3, "--k", 2, "--i", 0, "--block", "1,2", "--block", "2,3")
    assert out["injective"] and out["countA1"] <= out["countA2"] and out["sizeT"] <= out["sizeTstar"]
    d = run_json("coupling", "disjointify", "--n", 9, "--r", 3, "--k", 2, "--i", 0, "--block", "1,2", "--block", "2,3")
    assert d["trace"] == [13, 14] and d["frankl_count"] == 14


def test_seeded_coupling_is_reproducible():
    args = ("coupling", "disjointify", "--n", 12, "--r", 3, "--k", 2, "--i", 0,
            "--block", "1,2", "--block", "2,3", "--block", "3,4", "--randomized")
    first = run("--seed", 9, *args).stdout
    assert run("--seed", 9, *args).stdout == first


def test_conjecture():
    value = run_json("conjecture", "value", "--n", 9, "--r", 3, "--k", 2, "--a", 3)
    assert value["paper_max"] == 20 and value["feasible_max"] == 14
    check = run_json("conjecture", "check", "--n", 7, "--r", 2, "--k", 1, "--a", 3)
    assert check["exact_value"] == 11 and check["agreement_feasible"] == "match"


def test_bounds():
    assert run_json("bounds", "threshold", "--r", 3, "--k", 2, "--a", 2) == {"threshold": 216}
    assert run_json("bounds", "inequalities", "--r", 2, "--k", 1, "--a", 2, "--n", 64)["all_hold"] is True


def test_sweep_csv():
    text = run("--format", "csv", "sweep", "--kind", "counts", "--n-max", 6, "--r-max", 3, "--a-max", 3).stdout
    lines = text.strip().splitlines()
    assert lines[0] == "n,r,k,a,i,family,count"
    assert "6,3,2,3,0,frankl,8" in lines
    text = run("--format", "csv", "sweep", "--kind", "conjecture", "--n-max", 6, "--r-max", 3, "--a-max", 2).stdout
    assert text.splitlines()[0] == "n,r,k,a,exact,paper_max,feasible_max,agreement"


def test_exit_codes(tmp_path, complete53):
    run("count", "g", "--n", 9, "--r", 3, "--k", 4, "--a", 3, check_code=2)
    run("nonsense", check_code=2)
    run("count", check_code=2)
    run("--format", "xml", "count", "g", "--n", 9, "--r", 3, "--k", 2, "--a", 3, check_code=2)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 3, "r": 2, "edges": [[1, 2], [1, 2]]}))
    run("nu", "--k", 1, "--in", bad, check_code=2)
    big = tmp_path / "big.json"
    run("--out", big, "construct", "complete", "--n", 9, "--r", 4)
    run("--budget", 3, "nu", "--k", 2, "--in", big, check_code=3)
    run("extremal", "--n", 9, "--r", 3, "--k", 2, "--a", 3, check_code=3)
    run("--help")


def test_threads_do_not_change_reports(complete53, tmp_path):
    big = tmp_path / "big.json"
    run("--out", big, "construct", "complete", "--n", 8, "--r", 3)
    for args in (("nu", "--k", 2, "--in", big),
                 ("extremal", "--n", 7, "--r", 2, "--k", 1, "--a", 3),
                 ("conjecture", "check", "--n", 6, "--r", 3, "--k", 2, "--a", 2)):
        assert run("--threads", 1, *args).stdout == run("--threads", 8, *args).stdout
