import json
import subprocess
import sys

import pytest

from twistskein import checks, cli
from twistskein.jones import load_fixture
from twistskein.laurent import LaurentPoly, a_pow


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_omega_json(capsys):
    code, out, _ = run(capsys, "omega", "--p", "1", "--max-n", "4")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["n"] for r in rows] == list(range(5))
    for r in rows:
        n = r["n"]
        assert LaurentPoly.from_json(r["coeff"]) == a_pow(n * (n + 3) // 2) * (-1) ** n


def test_omega_raw(capsys):
    code, out, _ = run(capsys, "omega", "--p", "-2", "--max-n", "2", "--raw")
    assert code == 0
    row = json.loads(out.splitlines()[2])
    assert set(row["coeff"]) == {"numerator", "denominator"}


def test_jones(capsys):
    code, out, _ = run(capsys, "jones", "--p", "1", "--color", "2")
    assert code == 0
    obj = json.loads(out)
    assert (obj["p"], obj["N"]) == (1, 2)
    assert str(LaurentPoly.from_json(obj["value"])) == "A^4 + A^12 - A^16"
    code, out2, _ = run(capsys, "jones", "--p", "1", "--color", "2", "--qform")
    assert json.loads(out2)["value"] == obj["value"]


def test_bracket(capsys, tmp_path):
    path = tmp_path / "fig8.json"
    path.write_text(json.dumps(load_fixture("figure_eight").to_json()))
    code, out, _ = run(capsys, "bracket", "--pd", str(path))
    assert code == 0
    obj = json.loads(out)
    assert obj["writhe"] == 0
    assert str(LaurentPoly.from_json(obj["normalized"])) == "A^-8 - A^-4 + 1 - A^4 + A^8"


def test_bracket_bad_input(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"crossings": [[1, 2, 3, 4]], "signs": [1]}')
    code, _, err = run(capsys, "bracket", "--pd", str(path))
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "bracket", "--pd", str(tmp_path / "missing.json"))
    assert code == 2


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["omega", "--p", "x", "--max-n", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--suite", "nope"])
    assert exc.value.code == 2
    code, _, _ = run(capsys, "jones", "--p", "1", "--color", "0")
    assert code == 2


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "recursion", "--max-n", "4")
    assert code == 0
    obj = json.loads(out)
    assert obj["passed"] and all(r["passed"] for r in obj["results"])


def test_verify_reports_counterexample(capsys, monkeypatch):
    def broken(max_n, max_p):
        yield {"n": 0}, a_pow(1), a_pow(2)

    fake = checks.Check("broken", "bases", broken, 1, 0)
    monkeypatch.setattr(checks, "REGISTRY", [fake])
    code, out, _ = run(capsys, "--format", "text", "verify", "--suite", "bases")
    assert code == 1
    assert "FAIL bases/broken" in out
    assert "lhs = A^2" in out and "rhs = A^4" in out
    code, out, _ = run(capsys, "verify", "--suite", "bases")
    assert code == 1
    assert json.loads(out)["results"][0]["counterexample"]["params"] == {"n": 0}


def test_deterministic(capsys):
    a = run(capsys, "--format", "text", "omega", "--p", "3", "--max-n", "3")
    b = run(capsys, "--format", "text", "omega", "--p", "3", "--max-n", "3")
    assert a == b


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "twistskein", "jones", "--p", "-1", "--color", "2"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["N"] == 2
