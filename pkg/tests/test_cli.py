from __future__ import annotations

import json
import subprocess
import sys

import pytest

import golden
from cwbd.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_figures(tmp_path, capsys):
    cases = [(["--type", "I-prime", "--t", "7"], golden.FIG1A),
             (["--type", "I-prime", "--t", "11"], golden.FIG1B),
             (["--type", "I-belle", "--t", "7", "--x", "3"], golden.FIG2),
             (["--type", "II-ds", "--t", "7", "--ds", "2,4,5,6"], golden.FIG3A),
             (["--type", "II-ds", "--t", "13", "--ds", "1,2,5,7"], golden.FIG3B),
             (["--type", "II-ds", "--t", "13", "--ds", "2,3,5,7,8,9,10,11,12"], golden.FIG3C)]
    for args, want in cases:
        out = tmp_path / "d.json"
        code, stdout, _ = run(capsys, "construct", *args, "--out", str(out))
        assert code == 0 and "CWBD" in stdout
        assert json.loads(out.read_text())["periods"] == want
    code, stdout, _ = run(capsys, "construct", "--type", "I-prime", "--t", "7", "--format", "csv")
    assert stdout.splitlines()[:2] == ["0,0,0", "1,2,4"]


def test_construct_infeasible(capsys):
    code, _, err = run(capsys, "construct", "--type", "I-prime", "--t", "9")
    assert code == 2 and "t must be prime" in err
    code, _, err = run(capsys, "construct", "--type", "II-ds", "--t", "7", "--ds", "1,2,3")
    assert code == 2
    code, _, err = run(capsys, "construct", "--type", "III-block", "--q", "3")
    assert code == 2 and "prime power" in err


def test_construct_matrices(capsys):
    code, out, _ = run(capsys, "construct", "--type", "III-block", "--q", "0", "--m", "2")
    assert code == 0 and json.loads(out)["adjacency"] == golden.III32
    code, out, _ = run(capsys, "construct", "--type", "III-sdigraph", "--q", "0")
    assert json.loads(out)["adjacency"] == golden.IIISDI
    code, out, _ = run(capsys, "construct", "--type", "cbd", "--t", "5", "--format", "csv")
    assert code == 0 and len(out.splitlines()) == 5
    code, out, _ = run(capsys, "construct", "--type", "t3")
    assert json.loads(out)["n"] == 3


def test_verify_and_analyze(tmp_path, capsys):
    p = tmp_path / "fig2.json"
    p.write_text(json.dumps({"t": 7, "n": 21, "periods": golden.FIG2}))
    code, out, _ = run(capsys, "verify", str(p))
    assert code == 0 and out.startswith("CWBD Type I, uniform")
    code, out, _ = run(capsys, "analyze", str(p), "--model", "full")
    rep = json.loads(out)
    assert code == 0 and rep["trace"] == "122/1" and rep["verdict"] == "no_self_neighbours"
    code, out, _ = run(capsys, "analyze", str(p), "--model", "periods", "--effect", "carryover")
    assert json.loads(out)["verdict"] == "equireplicated_no_self_neighbours"


def test_verify_errors(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"t": 3, "n": 1, "periods": [[0], [1], [3]]}')
    code, _, err = run(capsys, "verify", str(p))
    assert code == 1 and "line 1, column" in err
    code, _, err = run(capsys, "verify", str(tmp_path / "missing.json"))
    assert code == 1


def test_searches(capsys, tmp_path):
    code, out, _ = run(capsys, "search-cycles", "--t15-gamma2", "--count-only")
    assert code == 0 and out.strip() == "120"
    code, out, _ = run(capsys, "brc", "--t", "22", "--k", "7")
    assert out.strip() == "infeasible (k−λ=5 not a square)"
    code, out, _ = run(capsys, "ds-search", "--t", "25", "--k", "9")
    assert code == 0 and out.strip() == "none found (exhaustive)"
    code, out, _ = run(capsys, "ds-search", "--t", "7", "--k", "3")
    assert out.split() == ["0,1,3", "0,1,5"]
    code, _, err = run(capsys, "ds-search", "--t", "25", "--k", "9", "--budget", "10")
    assert code == 3 and "budget" in err
    code, _, _ = run(capsys, "ds-search", "--t", "13", "--k", "5")
    assert code == 2
    m = tmp_path / "c3.json"
    m.write_text("[[0,1,0],[0,0,1],[1,0,0]]")
    code, out, _ = run(capsys, "search-cycles", "--graph", str(m))
    assert json.loads(out) == [[0, 1, 2]]


def test_decompose(capsys, tmp_path):
    out_path = tmp_path / "l24.json"
    code, out, _ = run(capsys, "decompose", "--graph", "l24", "--invariant", "--out", str(out_path))
    assert code == 0 and "CWBD Type II, uniform on subjects" in out
    assert json.loads(out_path.read_text())["n"] == 6
    code, out, _ = run(capsys, "decompose", "--graph", "clebsch", "--invariant")
    assert len(json.loads(out)) == 5


def test_sample_dominance(capsys):
    code, out, _ = run(capsys, "sample-dominance", "--t", "7", "--n", "21", "--trials", "5", "--seed", "1")
    rep = json.loads(out)
    assert code == 0 and rep["dominated"] and rep["trials"] == 5
    code2, out2, _ = run(capsys, "sample-dominance", "--t", "7", "--n", "21", "--trials", "5", "--seed", "1")
    assert out2 == out
    code, _, _ = run(capsys, "sample-dominance", "--t", "5", "--n", "10", "--trials", "2")
    assert code == 2


def test_exist(capsys):
    code, out, _ = run(capsys, "exist", "--t", "7", "--n", "5")
    assert code == 2 and "does not divide" in out
    assert run(capsys, "exist", "--t", "7", "--n", "3")[0] == 0


def test_unknown_flag_rejected():
    with pytest.raises(SystemExit) as e:
        main(["brc", "--t", "7", "--k", "3", "--bogus"])
    assert e.value.code != 0


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "cwbd", "brc", "--t", "7", "--k", "3"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("passes")
