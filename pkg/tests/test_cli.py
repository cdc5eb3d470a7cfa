import json
import subprocess
import sys

import pytest

from repclus.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_examples(capsys):
    code, out, _ = call(capsys, "--n", "3", "--p", "3", "check", "--set", "2,5,1;4,6,3")
    doc = json.loads(out)
    assert code == 0 and doc["ptolemy"] is False
    assert [v["missing"] for v in doc["violations"]] == [[[2, 4, 1]]]
    code, out, _ = call(capsys, "--n", "3", "--p", "4", "check", "--set", "1,3,1;2,4,3")
    doc = json.loads(out)
    assert doc["rigid"] is True and doc["cluster_tilting"] is False


def test_enumerate_count(capsys):
    code, out, err = call(capsys, "--n", "1", "--p", "1", "enumerate", "ptolemy", "--count-only")
    assert code == 0 and out.strip() == "4"
    footer = json.loads(err.strip().splitlines()[-1])
    assert footer["count"] == 4 and "seconds" in footer


def test_enumerate_lines(capsys):
    code, out, _ = call(capsys, "--n", "1", "--p", "2", "enumerate", "cluster-tilting")
    assert [json.loads(line) for line in out.splitlines()] == [[[1, 3, 1], [1, 3, 2]], [[2, 4, 1], [2, 4, 2]]]
    code, out, _ = call(capsys, "--n", "1", "--p", "2", "enumerate", "ptolemy", "--orbits", "rho")
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 10 and sum(r["orbit_size"] for r in rows) == 16
    code, out, _ = call(capsys, "--n", "1", "--p", "1", "enumerate", "torsion-pairs")
    assert len(out.splitlines()) == 4 and "free" in out


def test_enumerate_cap_is_domain_error(capsys):
    code, _, err = call(capsys, "--n", "3", "--p", "3", "enumerate", "ptolemy", "--mode", "powerset", "--cap", "10")
    assert code == 1 and "cap" in err


def test_sets_and_perps(capsys):
    _, out, _ = call(capsys, "--n", "3", "--p", "3", "closure", "--set", "2,5,1;1,3,2")
    assert json.loads(out) == [[2, 5, 1], [3, 5, 1], [1, 3, 2]]
    _, out, _ = call(capsys, "--n", "1", "--p", "1", "perp", "--kind", "hom", "--set", "2,4,1")
    assert json.loads(out) == [[1, 3, 1]]
    _, out, _ = call(capsys, "--n", "1", "--p", "1", "perp", "--side", "left", "--set", "1,3,1")
    assert json.loads(out) == [[1, 3, 1]]
    _, out, _ = call(capsys, "--n", "1", "--p", "1", "list-diagonals")
    assert out.split() == ["[1,3,1]", "[2,4,1]"]


def test_torsion_pair(capsys):
    code, out, _ = call(capsys, "--n", "1", "--p", "1", "torsion-pair", "--set", "2,4,1")
    assert code == 0 and json.loads(out) == {"torsion": [[2, 4, 1]], "free": [[1, 3, 1]]}
    code, out, err = call(capsys, "--n", "3", "--p", "3", "torsion-pair", "--set", "2,5,1;4,6,3")
    assert code == 1 and out == "" and json.loads(err)["error"] == "NotPtolemy"


@pytest.mark.parametrize(
    "argv",
    [
        ["--n", "0", "--p", "1", "list-diagonals"],
        ["--n", "3", "list-diagonals"],
        ["--n", "3", "--p", "3", "check", "--set", "1,6,1"],
        ["--n", "3", "--p", "3", "check", "--set", "2,5,1;2,5,1"],
        ["--n", "3", "--p", "3", "frobnicate"],
        ["--n", "3", "--p", "3", "quiver", "--format", "xml"],
        ["--n", "3", "--p", "3", "draw", "--set", "", "--format", "png"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 2 and out == "" and err


def test_quiver_and_verify(capsys):
    code, out, err = call(capsys, "--n", "3", "--p", "3", "quiver", "--format", "json", "--validate")
    assert code == 0 and len(json.loads(out)["vertices"]) == 27 and json.loads(err)["ok"]
    code, out, _ = call(capsys, "--n", "2", "--p", "2", "verify", "all")
    reps = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and [r["check"] for r in reps] == ["crossing", "perp", "theorem"]
    assert all(r["passed"] for r in reps)
    code, out, _ = call(capsys, "--n", "1", "--p", "1", "verify", "perp")
    assert code == 0 and json.loads(out)["documented_divergences"] > 0


def test_verify_mismatch_exit(capsys, monkeypatch):
    from repclus import oracles

    def broken(P):
        rep = oracles.OracleReport("crossing", P, instances=1)
        rep.mismatches.append({"x": "injected"})
        return rep

    monkeypatch.setitem(oracles.ORACLES, "crossing", broken)
    code, out, _ = call(capsys, "--n", "1", "--p", "1", "verify", "crossing")
    assert code == 3 and json.loads(out)["passed"] is False


def test_draw_and_out(capsys, tmp_path):
    target = tmp_path / "y.svg"
    code, out, _ = call(capsys, "--n", "3", "--p", "3", "--out", str(target), "draw", "--set", "2,5,1")
    assert code == 0 and out == "" and target.read_text().startswith("<svg")
    png = tmp_path / "y.png"
    assert run(["--n", "3", "--p", "3", "--out", str(png), "draw", "--set", "2,5,1", "--format", "png"]) == 0
    assert png.stat().st_size > 0
    _, out, _ = call(capsys, "--n", "3", "--p", "3", "draw", "--set", "2,5,1", "--format", "tikz")
    assert "% 2,5,1" in out


def test_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("REPCLUS_THREADS", "1")
    assert call(capsys, "--n", "2", "--p", "2", "enumerate", "ptolemy", "--count-only")[1].strip() == "277"
    monkeypatch.setenv("REPCLUS_THREADS", "zero")
    code, _, err = call(capsys, "--n", "2", "--p", "2", "enumerate", "ptolemy", "--count-only")
    assert code == 2 and "REPCLUS_THREADS" in err


def test_console_entry():
    res = subprocess.run(
        [sys.executable, "-m", "repclus", "--n", "1", "--p", "1", "enumerate", "ptolemy", "--count-only"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0 and res.stdout.strip() == "4"
