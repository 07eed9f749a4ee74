import io
import json
from importlib import resources

import pytest

from refex.cli import main


def data(name):
    return str(resources.files("refex").joinpath("data", name))


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_generate_red_pen():
    assert run("generate", "--kb", data("red_green.json"), "--referent", "pen1", "--context", "pen1,pen2",
               "--strategy", "greedy") == (0, "colour=red\n")


def test_generate_empty_description():
    assert run("generate", "--kb", data("red_green.json"), "--referent", "pen1", "--context", "pen1",
               "--strategy", "full-brevity") == (0, "\n")


def test_generate_quality_violation(capsys):
    code, out = run("generate", "--kb", data("red_green.json"), "--referent", "pen1", "--context", "pen1,pen2",
                    "--convey", "colour=blue")
    assert code == 3 and out == ""
    assert "QualityViolation" in capsys.readouterr().err


def test_generate_json_report():
    code, out = run("generate", "--kb", data("staedtler.json"), "--referent", "pen1", "--context", "pen1,pen2",
                    "--strategy", "incremental", "--genre", data("casual.json"), "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["description"] == ["manufacturer=staedtler", "type=pen"]
    assert doc["warnings"] == [{"item": "manufacturer=staedtler", "reason": "NotGenrePreferred"}]
    assert {"description", "trace", "warnings", "goals"} <= set(doc)


def test_generate_exit_codes(tmp_path):
    twins = tmp_path / "twins.json"
    twins.write_text('{"entities": {"a": {"type": "pen"}, "b": {"type": "pen"}}}')
    assert run("generate", "--kb", str(twins), "--referent", "a", "--context", "a,b")[0] == 2
    assert run("generate", "--kb", str(twins), "--referent", "a", "--context", "a,zz")[0] == 1
    assert run("generate", "--kb", str(twins), "--referent", "b", "--context", "a")[0] == 1
    assert run("generate", "--kb", str(tmp_path / "missing.json"), "--referent", "a", "--context", "a")[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run("generate", "--kb", str(bad), "--referent", "a", "--context", "a")[0] == 1


def test_interpret():
    kb = data("red_green.json")
    code, out = run("interpret", "--kb", kb, "--context", "pen1,pen2", "colour=red")
    assert code == 0 and "outcome: UniqueReferent" in out and "resolved: pen1" in out
    code, out = run("interpret", "--kb", kb, "--context", "pen1,pen2", "type=pen")
    assert code == 0 and "outcome: Ambiguous" in out
    code, out = run("interpret", "--kb", kb, "--context", "pen1,pen2", "--referent", "pen1", "--json",
                    "colour=red,type=pen")
    assert json.loads(out)["classifications"] == {"colour=red": "Necessary", "type=pen": "Surplus"}


def test_interpret_errors():
    kb = data("red_green.json")
    assert run("interpret", "--kb", kb, "--context", "pen1,pen2", "colour")[0] == 1
    assert run("interpret", "--kb", kb, "--context", "pen1,pen2", "--referent", "pen1", "type=pen")[0] == 2


def test_compare_greedy_trap():
    code, out = run("compare", "--kb", data("greedy_trap.json"), "--referent", "r",
                    "--context", "r,d1,d2,d3,d4,d5,d6", "--genre", "casual", "--json")
    doc = json.loads(out)
    lengths = {row["strategy"]: row["length"] for row in doc["strategies"]}
    assert code == 0
    assert lengths["greedy"] == 3 and lengths["full-brevity"] == 2
    assert doc["minimality_gap"] == 1 and doc["oracle"]["size"] == 2


def test_compare_red_green_and_singleton():
    doc = json.loads(run("compare", "--kb", data("red_green.json"), "--referent", "pen1", "--context", "pen1,pen2",
                         "--genre", "casual", "--json")[1])
    assert [row["length"] for row in doc["strategies"]] == [1, 1, 2]
    assert doc["minimality_gap"] == 0
    doc = json.loads(run("compare", "--kb", data("red_green.json"), "--referent", "pen1", "--context", "pen1",
                         "--genre", "casual", "--json")[1])
    assert [row["length"] for row in doc["strategies"]] == [0, 0, 1]
    assert doc["minimality_gap"] == 0


def test_compare_reports_failures_per_strategy(tmp_path):
    twins = tmp_path / "twins.json"
    twins.write_text('{"entities": {"a": {"type": "pen"}, "b": {"type": "pen"}}}')
    code, out = run("compare", "--kb", str(twins), "--referent", "a", "--context", "a,b")
    assert code == 0
    assert out.count("no distinguishing description") == 4
    assert "minimality gap: -" in out


def test_compare_table_is_deterministic():
    argv = ("compare", "--kb", data("greedy_trap.json"), "--referent", "r", "--context", "r,d1,d2,d3,d4,d5,d6")
    first = run(*argv)
    assert first == run(*argv)
    assert "minimality gap: 1" in first[1]
    assert "seconds" in run(*argv, "--timings")[1]


def test_oracle_guard_env(monkeypatch):
    monkeypatch.setenv("REFEX_ORACLE_GUARD", "2")
    doc = json.loads(run("compare", "--kb", data("greedy_trap.json"), "--referent", "r",
                         "--context", "r,d1,d2,d3,d4,d5,d6", "--json")[1])
    assert doc["oracle"]["size"] is None and doc["minimality_gap"] is None


def test_console_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "refex.cli", "generate", "--kb", data("red_green.json"), "--referent", "pen1",
         "--context", "pen1,pen2"],
        capture_output=True, text=True,
    )
    assert (proc.returncode, proc.stdout) == (0, "colour=red\n")
