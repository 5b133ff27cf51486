import hashlib
import json
import subprocess
import sys
from pathlib import Path

import pytest

from icequiver import __version__
from icequiver.cli import main

MALFORMED = sorted((Path(__file__).parent / "data" / "malformed").glob("*.iqp"))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_ginzburg_human_output(capsys, data_dir):
    code, out, _ = run(capsys, "ginzburg", str(data_dir / "example1.iqp"))
    assert code == 0
    assert "d(t3) = -b*b" in out
    assert "d^2 = 0: ok" in out


def test_concentration_expect(capsys, data_dir):
    ex1, ex2 = str(data_dir / "example1.iqp"), str(data_dir / "example2.iqp")
    assert run(capsys, "concentration", ex1, "--expect", "not_concentrated")[0] == 0
    assert run(capsys, "concentration", ex2, "--expect", "CONCENTRATED")[0] == 0
    code, out, _ = run(capsys, "concentration", ex1, "--expect", "concentrated")
    assert code == 1 and "expected CONCENTRATED" in out
    assert run(capsys, "concentration", ex2)[0] == 0


def test_json_report_is_deterministic(capsys, data_dir):
    path = str(data_dir / "example2.iqp")
    for cmd in (["jacobian", path], ["concentration", path], ["ginzburg", path]):
        _, first, _ = run(capsys, *cmd, "--json")
        _, second, _ = run(capsys, *cmd, "--json")
        assert first == second
        report = json.loads(first)
        assert list(report)[:3] == ["tool", "version", "command"]
        assert report["version"] == __version__
        assert report["command"] == ["icequiver"] + cmd + ["--json"]
        assert report["input"]["sha256"] == hashlib.sha256(Path(path).read_bytes()).hexdigest()
        assert "timing_seconds" not in report


def test_timing_is_opt_in(capsys, data_dir):
    _, out, _ = run(capsys, "jacobian", str(data_dir / "example2.iqp"), "--json", "--timing")
    assert "timing_seconds" in json.loads(out)


def test_jacobian_report(capsys, data_dir):
    path = str(data_dir / "example2.iqp")
    _, out, _ = run(capsys, "jacobian", path, "--json")
    result = json.loads(out)["result"]
    assert result["certificate"] == "JacobiFinite(dimension=7)"
    assert result["rules"] == [{"lead": "a'c'", "tail": "0"}, {"lead": "b'a'", "tail": "0"}]
    _, out, _ = run(capsys, "jacobian", path, "--order", "c',b',a'", "--json")
    assert json.loads(out)["result"]["dimension"] == 7


@pytest.mark.parametrize("args", [
    ["jacobian", "{ex2}", "--order", "a'"],
    ["jacobian", "{ex2}", "--max-degree", "3"],
    ["jacobian", "/nonexistent/file.iqp"],
    ["preprojective", "{ex2}"],
    ["preprojective", "--dynkin", "Q7"],
    ["auslander", "--dynkin", "A2", "-n", "2"],
])
def test_input_errors_exit_2(capsys, data_dir, args):
    args = [a.replace("{ex2}", str(data_dir / "example2.iqp")) for a in args]
    code, out, err = run(capsys, *args)
    assert code == 2
    assert out == ""
    assert len(err.strip().splitlines()) == 1


@pytest.mark.parametrize("path", MALFORMED, ids=lambda p: p.name)
def test_malformed_inputs_exit_2(capsys, path):
    code, out, err = run(capsys, "concentration", str(path))
    assert code == 2
    line = err.strip()
    assert "\n" not in line
    prefix, lineno = line.split(": ")[0].rsplit(":", 1)
    assert prefix == str(path) and lineno.isdigit()


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2
    capsys.readouterr()


def test_preprojective_and_auslander(capsys, data_dir):
    code, out, _ = run(capsys, "preprojective", "--dynkin", "A3", "--json")
    r = json.loads(out)["result"]
    assert code == 0 and r["dimension_classical"] == r["dimension_higher"] == 10 and r["isomorphic"]
    # the quiver of example 1 is a linear A3 quiver
    code, out, _ = run(capsys, "preprojective", str(data_dir / "example1.iqp"))
    assert code == 0 and "dimension 10" in out
    code, out, _ = run(capsys, "auslander", "--dynkin", "A2", "--json")
    r = json.loads(out)["result"]
    assert code == 0
    assert r["auslander"] == {"dimension": 5, "global_dimension": 2}
    assert r["h0_algebra"]["dimension"] == 7
    assert r["boundary"]["isomorphic_to_preprojective"]
    assert r["stable_auslander_dimension"] == 1
    assert r["tilting_module"]["endomorphisms_isomorphic_to_h0"]


def test_check_prints_one_line_per_criterion(capsys):
    code, out, _ = run(capsys, "check", "--suite", "paper-examples")
    lines = out.strip().splitlines()
    assert len(lines) == 11
    assert all(l.startswith(("[PASS] criterion", "[FAIL] criterion")) for l in lines[:10])
    assert code == (0 if all(l.startswith("[PASS]") for l in lines[:10]) else 1)


def test_console_entry_point(data_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "icequiver.cli", "concentration", str(data_dir / "example2.iqp")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "verdict: CONCENTRATED" in proc.stdout
