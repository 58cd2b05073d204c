import json
import subprocess
import sys

import pytest

from cremona.cli import main


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_chow(capsys):
    code, out, _ = run(["chow"], capsys)
    assert code == 0
    assert "ruled_degree_8: expected 8 got 8" in out


def test_chow_json(capsys):
    code, out, _ = run(["chow", "--format", "json"], capsys)
    data = json.loads(out)
    assert data["status"] == "pass" and data["failures"] == []


def test_construct_analyze(tmp_path, capsys):
    path = tmp_path / "d.fx"
    code, _, _ = run(["construct", "--family", "D", "--seed", "1", "--out", str(path)], capsys)
    assert code == 0
    text = path.read_text()
    assert text.splitlines()[:4] == ["ring z0 z1 z2 z3", "field GF(32003)", "seed 1", "family D"]
    assert all(f.count("z") and "^4" in f for f in text.splitlines()[4:8])
    code, out, _ = run(["analyze", str(path)], capsys)
    assert code == 0
    assert "alpha: 11" in out and "genus: 2" in out


def test_analyze_mismatch_exit(tmp_path, capsys):
    path = tmp_path / "r.fx"
    run(["construct", "--family", "R", "--out", str(path)], capsys)
    path.write_text(path.read_text().replace("alpha 9", "alpha 8"))
    code, _, err = run(["analyze", str(path)], capsys)
    assert code == 1
    assert err.strip() == "FAIL analysis/R/alpha"


def test_analyze_identity(tmp_path, capsys):
    path = tmp_path / "id.fx"
    path.write_text("ring z0 z1 z2 z3\nz0\nz1\nz2\nz3\n[expect]\nbidegree 1 1\nalpha 0\n")
    code, out, _ = run(["analyze", str(path)], capsys)
    assert code == 0
    assert "bidegree: (1,1)" in out


def test_parse_error_exit(tmp_path, capsys):
    path = tmp_path / "bad.fx"
    path.write_text("ring z0 z1 z2 z3\nz0\nz1\nz2+^\nz3\n")
    code, _, err = run(["analyze", str(path)], capsys)
    assert code == 2
    assert "line 4" in err and "column" in err


def test_construct_cubic_jonquieres(capsys):
    code, out, _ = run(["construct", "--family", "J", "--d", "3"], capsys)
    assert code == 0
    assert "bidegree 3 3" in out


def test_construct_loria(capsys):
    code, out, _ = run(["construct", "--family", "loria"], capsys)
    assert code == 0
    assert "field QQ" in out


def test_invariant_table_fast_deterministic(capsys):
    code, a, _ = run(["theoremB", "--format", "json"], capsys)
    assert code == 0
    code, b, _ = run(["theoremB", "--format", "json", "--jobs", "2"], capsys)
    assert code == 0
    assert a == b
    data = json.loads(a)
    assert data["provenance"] == {"prime": 32003, "seeds": [1], "tier": "fast"}
    assert {f: data["rows"][f]["1"]["alpha"] for f in "RCDJ"} == \
        {"R": 9, "C": 10, "D": 11, "J": 12}


def test_invariant_table_text(capsys):
    code, out, _ = run(["theoremB"], capsys)
    assert code == 0
    assert "dimension  R:37  C:37  D:46  J:54" in out
    assert "genus      R:0  C:1  D:2  J:3" in out


def test_bad_prime():
    with pytest.raises(SystemExit):
        main(["theoremB", "--prime", "12"])


def test_console_module():
    res = subprocess.run([sys.executable, "-m", "cremona.cli", "chow", "--format", "json"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["status"] == "pass"
