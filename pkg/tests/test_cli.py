import pandas as pd
import pytest

from bondtools import harness
from bondtools.__main__ import EXIT_CONJECTURE, EXIT_ERROR, EXIT_OK, EXIT_UNSOUND, main
from bondtools.bondage import BondageResult
from bondtools.bounds import ConjectureVerdict


def test_invariants(capsys):
    assert main(["invariants", "Cl"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("Cl n=4 m=4 max_degree=2 min_degree=2 gamma=2 b=3")


def test_invariants_of_a_file(tmp_path, capsys):
    path = tmp_path / "graphs.g6"
    path.write_text("@\nBw\n")
    assert main(["invariants", str(path)]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert "b=undefined" in lines[0]
    assert "gamma=1 b=2" in lines[1]


def test_bad_graph6_is_an_error():
    assert main(["invariants", "!!"]) == EXIT_ERROR


def test_missing_command():
    with pytest.raises(SystemExit):
        main([])


def test_genus(capsys):
    assert main(["genus", "D~{"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "h = 1 (search" in out
    assert "h_M = 3 (search" in out


def test_bounds(capsys):
    assert main(["-q", "bounds", "Cl"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split()[1] == "3"
    assert any(line.startswith("kang_yuan") for line in lines)


def test_bounds_with_declared_genus(capsys):
    assert main(["bounds", "D~{", "--h", "1", "--k", "1", "--all"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "small_surfaces" in out and "n/a" in out


def test_bounds_with_impossible_genus():
    assert main(["bounds", "Bw", "--h", "3"]) == EXIT_ERROR


def test_table1_check(capsys):
    assert main(["table1", "--check"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "0 mismatches" in out
    assert len(out.splitlines()) == 29


def test_verify_writes_report(tmp_path):
    path = tmp_path / "report.csv"
    assert main(["verify", "--corpus", "connected:3", "--out", str(path)]) == EXIT_OK
    frame = pd.read_csv(str(path))
    assert len(frame) == 4
    assert list(frame["gamma"]) == [1, 1, 1, 1]


def test_verify_jsonl_to_stdout(capsys):
    assert main(["verify", "--corpus", "Bw,Cl", "--format", "jsonl"]) == EXIT_OK
    assert len(capsys.readouterr().out.splitlines()) == 2


def test_verify_unsound_exit_code(monkeypatch):
    monkeypatch.setattr(harness, "bondage_number", lambda g: BondageResult(99, frozenset(), 1))
    assert main(["verify", "--corpus", "Bw"]) == EXIT_UNSOUND


def test_search_teschner(capsys):
    assert main(["search-teschner", "--corpus", "connected:4"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "equality" in out
    assert "10 graphs searched, 0 violations" in out


def test_search_teschner_violation_exit_code(monkeypatch):
    monkeypatch.setattr(harness, "check_teschner", lambda facts, b: ConjectureVerdict("Teschner", False, -1))
    assert main(["search-teschner", "--corpus", "Bw"]) == EXIT_CONJECTURE


def test_embed(capsys):
    assert main(["embed", "D~{", "--genus", "2"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "5 10"
    assert len(lines) == 1 + 5 + 10
    assert main(["embed", "D~{", "--genus", "0"]) == EXIT_ERROR


def test_search_teschner_with_failed_stages(monkeypatch, capsys):
    def broken(facts, include_inapplicable=False):
        raise RuntimeError("no certificates")

    monkeypatch.setattr(harness, "best_bound", broken)
    assert main(["search-teschner", "--corpus", "Cl"]) == EXIT_ERROR
    out = capsys.readouterr().out
    assert "equality" not in out
    assert "1 graphs searched, 0 violations, 1 failed" in out
