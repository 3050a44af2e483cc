import json
import subprocess
import sys

import pytest

from truncgamma import reference
from truncgamma.cli import main, run
from truncgamma.exactalg import parse_canonical, parse_poly


def test_gens_5():
    status, out = run(["gens", "5"])
    assert status == 0
    assert out.split() == ["x1*x2", "x1^3", "x2^2", "x1*x3", "x2*x3", "x3^2"]
    assert run(["gens", "5", "--brute"])[1] == out


def test_counts_csv_golden():
    status, out = run(["counts", "--nmax", "30", "--format", "csv"])
    assert status == 0
    assert out == reference.counts_csv()
    assert len(out.splitlines()) == 30
    assert run(["counts", "--nmax", "30"])[1] == out


def test_counts_graded_golden():
    status, out = run(["counts", "--nmax", "30", "--graded"])
    rec = json.loads(out)
    assert status == 0 and rec["n_range"] == [2, 30]
    got = {row["n"]: row["graded"] for row in rec["payload"]}
    assert got == reference.graded_counts()


def test_poincare_golden():
    for n, (graded, plain) in reference.poincare().items():
        assert run(["poincare", str(n)])[1] == plain + "\n"
        out = run(["poincare", str(n), "--graded"])[1].strip()
        if graded is not None:
            assert out == graded
        assert parse_canonical(out).specialize_u() == parse_canonical(plain)


def test_poincare_9():
    assert run(["poincare", "9"]) == (0, "(1 + t)/(1 - 3*t - 5*t^2)\n")
    assert run(["poincare", "5", "--ideal"])[1] == "6 + 8*t + 3*t^2\n"


def test_hilbert_and_betti():
    assert run(["hilbert", "5"])[1] == "1 + 3*t + t^2\n"
    assert parse_poly(run(["hilbert", "5", "--bigraded"])[1].strip()) == parse_poly("1 + t*u^2 + t*u^3 + t*u^5 + t^2*u^4")
    assert run(["betti", "9"])[1] == "[11, 23, 18, 5]\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["poincare", "9", "--format", "json"],
        ["poincare", "7", "--graded", "--ideal", "--format", "json"],
        ["hilbert", "12", "--bigraded", "--format", "json"],
        ["gens", "10", "--format", "json"],
        ["counts", "--nmax", "12", "--format", "json"],
    ],
)
def test_json_roundtrip(argv):
    status, out = run(argv)
    rec = json.loads(out)
    assert status == 0
    assert set(rec) == {"command", "n_range", "format", "version", "payload"}
    assert rec["format"] == "json"
    assert json.loads(json.dumps(rec)) == rec
    payload = rec["payload"]
    if isinstance(payload, dict) and "text" in payload:
        text_out = run([a for a in argv if a not in ("--format", "json")])[1].strip()
        assert payload["text"] == text_out


def test_conjecture_output():
    status, out = run(["conjecture", "--nmax", "30"])
    assert status == 0
    assert out.rstrip().endswith("clause failures: 0")
    assert len(out.splitlines()) == 31


@pytest.mark.parametrize("argv", [["gens", "1"], ["gens", "x"], ["bogus"], [], ["counts"], ["poincare", "5", "--ideal", "--residue"]])
def test_usage_errors(argv, capsys):
    assert main(argv) == 1


def test_budget_exit():
    assert main(["verify", "--suite", "oracles", "--qmax", "5"]) == 1


def test_verify_ok(capsys):
    assert main(["verify", "--suite", "figures"]) == 0
    out = capsys.readouterr().out
    assert "0 failed" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "truncgamma", "poincare", "5"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "(1)/(1 - 3*t)\n"
