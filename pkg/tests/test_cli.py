import json
import subprocess
import sys

import pytest

from assprime.cli import main
from conftest import NONPERSISTENT_TEXT


@pytest.fixture
def files(tmp_path):
    a = tmp_path / "a.txt"
    a.write_text(NONPERSISTENT_TEXT)
    b = tmp_path / "b.txt"
    b.write_text("ring y\nideal J = y^2\n")
    bad = tmp_path / "bad.txt"
    bad.write_text("ring x y\nideal I = x^^2\n")
    big = tmp_path / "big.txt"
    big.write_text("ring z\nideal K = z^20\n")
    return {"a": str(a), "b": str(b), "bad": str(bad), "big": str(big)}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out.startswith("{") else out.out), out.err


def test_ass(capsys, files):
    code, rep, _ = run(capsys, "ass", files["a"], "--ideal", "I", "-n", "3")
    assert code == 0
    assert rep["result"]["ass_ring_quotients"][0] == [["a", "b"], ["a", "b", "c"]]
    assert rep["caveats"] == ["windowed"]
    assert rep["command"][0] == "ass"


def test_ass_module(capsys, files):
    code, rep, _ = run(capsys, "ass-module", files["a"], "--upper", "M", "--lower", "I")
    assert code == 0
    assert rep["result"]["ass"] == [["a", "b"], ["a", "b", "c"]]


def test_sum_commands(capsys, files):
    pair = [files["a"], files["b"], "--left", "I", "--right", "J"]
    code, rep, _ = run(capsys, "sum-verify", *pair, "-n", "2")
    assert code == 0 and all(r["match"] for r in rep["result"])
    code, rep, _ = run(capsys, "sum-asymptotic", *pair, "--window", "5")
    assert code == 0 and rep["result"]["status"] == "verified"
    code, rep, _ = run(capsys, "decomp-verify", *pair, "-n", "2", "--dmax", "8")
    assert code == 0 and rep["result"]["holds"] == [True, True]


def test_persistence_commands(capsys, files):
    code, rep, _ = run(capsys, "persistence", files["a"], "--ideal", "I", "--max-n", "4",
                       "--strong")
    res = rep["result"]
    assert res["persistence"]["first_failure"][0] == 1
    assert res["persistence"]["first_failure"][1] == ["a", "b", "c"]
    assert res["strong"][0] is False
    code, rep, _ = run(capsys, "persistence", files["a"], "--ideal", "M", "--max-n", "3",
                       "--transfer", files["b"], "--right", "J")
    assert code == 0 and rep["result"]["status"] == "passed"


def test_ratliff_rush_and_socle(capsys, tmp_path):
    f = tmp_path / "rr.txt"
    f.write_text("ring x y\nideal I = x^4, x^3*y, x*y^3, y^4\n")
    code, rep, _ = run(capsys, "ratliff-rush", str(f), "--ideal", "I", "--cap", "5")
    assert rep["result"]["closure"]["gens"] == ["x^4", "x^3*y", "x^2*y^2", "x*y^3", "y^4"]
    code, rep, _ = run(capsys, "socle-check", str(f), "--ideal", "I", "--max-n", "3")
    assert code == 0 and rep["result"]["holds"] == [True, True]


def test_gb_example(capsys):
    code, rep, _ = run(capsys, "gb-example", "derivative-remark")
    assert code == 0 and rep["result"]["passed"]
    assert "char-proxy" in rep["caveats"]


def test_fuzz_and_reproduce(capsys):
    code, rep, _ = run(capsys, "fuzz", "--seed", "42", "--count", "20", "--max-n", "2")
    assert code == 0 and rep["result"]["summary"] == "20/20 match"
    code, rep, _ = run(capsys, "reproduce", "sect5-persistence-failure")
    assert code == 0
    assert rep["result"]["actual"]["first_failure"] == {"n": 1, "witness": ["a", "b", "c"]}
    code, rep, _ = run(capsys, "reproduce")
    assert len(rep["result"]["cases"]) == 7


def test_exit_codes(capsys, files):
    assert run(capsys, "ass", files["bad"], "--ideal", "I")[0] == 3
    code, _, err = run(capsys, "ass", files["a"], "--ideal", "Nope")
    assert code == 2 and "Nope" in err
    assert run(capsys, "ass", files["a"] + ".missing", "--ideal", "I")[0] == 2
    code = run(capsys, "sum-verify", files["big"], files["b"], "--left", "K", "--right", "J")[0]
    assert code == 4
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 2
    assert run(capsys, "fuzz", "--max-gens", "0")[0] == 2


def test_output_file_and_determinism(capsys, files, tmp_path):
    out = tmp_path / "r.json"
    main(["-o", str(out), "ass", files["a"], "--ideal", "I", "-n", "2"])
    first = json.loads(out.read_text())
    main(["-o", str(out), "ass", files["a"], "--ideal", "I", "-n", "2"])
    second = json.loads(out.read_text())
    first.pop("timing_ms"), second.pop("timing_ms")
    assert first == second


def test_module_entry_point_version():
    out = subprocess.run([sys.executable, "-m", "assprime", "--version"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert "assprime.run-report/1" in out.stdout
