import io
import json

import pandas as pd
import pytest

from bondtools import harness
from bondtools.bondage import BondageResult
from bondtools.corpus import CorpusEntry, CorpusSpec, parse_corpus_spec
from bondtools.graph import complete_graph, empty_graph, parse_graph6, write_graph6
from bondtools.harness import (REPORT_COLUMNS, SoundnessViolation, Verifier, curvature_sweep, emit_report,
                               export_table1, records_to_frame, search_teschner_violations, teschner_equalities,
                               teschner_violations, verify_corpus)


def test_verify_cycle(c4):
    record = Verifier().verify(c4)
    assert record.failed_stage is None
    assert (record.facts.h, record.gamma, record.b) == (0, 2, 3)
    assert record.hartnell_rall
    assert record.verdict("Teschner") == ("Teschner", True, 0)
    assert record.verdict("DunbarPlanar").holds
    assert record.best_certificate.value == 3
    assert all(c.value >= record.b for c in record.certificates)
    assert set(record.timings) == set(harness.STAGES)


def test_verify_k5_on_the_torus(k5):
    record = Verifier().verify(k5)
    assert record.facts.h == 1
    assert record.facts.genus_provenance == "computed"
    assert (record.gamma, record.b) == (1, 3)
    small = [c for c in record.certificates if c.name == "small_surfaces"]
    assert small[0].value == 7
    assert record.verdict("DunbarPlanar") is None


def test_declared_genus(k5, k4):
    verifier = Verifier(genus_mode="declared")
    record = verifier.verify(k5, declared_h=1, declared_k=1)
    assert (record.facts.h, record.facts.k, record.facts.genus_provenance) == (1, 1, "declared")
    record = verifier.verify(k4, declared_h=3)
    assert record.failed_stage == "genus"
    assert record.error.startswith("InconsistentFacts")


def test_skipped_genus(k3):
    record = Verifier(genus_mode="skip").verify(k3)
    assert record.facts.h is None
    assert record.best_certificate.name == "edge_local"
    assert record.best_certificate.value == 2


def test_edgeless_graph():
    record = Verifier().verify(complete_graph(1))
    assert record.failed_stage is None
    assert (record.gamma, record.b) == (1, None)
    assert record.verdicts == []


def test_unsound_bound_is_reported(c4, monkeypatch):
    monkeypatch.setattr(harness, "bondage_number", lambda g: BondageResult(99, frozenset(), 2))
    with pytest.raises(SoundnessViolation) as info:
        Verifier().verify(c4)
    assert info.value.graph6 == "Cl"
    record = Verifier(strict=False).verify(c4)
    assert record.b == 99 and record.hartnell_rall is False


def test_verifier_rejects_unknown_keys():
    with pytest.raises(ValueError):
        Verifier(budget=5)
    with pytest.raises(ValueError):
        Verifier(genus_mode="guess")


def test_verify_small_corpus():
    records = verify_corpus(parse_corpus_spec("connected:4"))
    assert len(records) == 10
    assert not [r for r in records if r.failed_stage]
    assert teschner_violations(records) == []
    (code,) = teschner_equalities(records)
    g = parse_graph6(code)
    assert g.n == 4 and set(g.degrees()) == {2}


def test_process_pool_matches_in_process():
    spec = parse_corpus_spec("connected:4")
    serial = verify_corpus(spec, Verifier())
    pooled = verify_corpus(spec, Verifier(workers=2))
    assert [(r.graph6, r.gamma, r.b) for r in pooled] == [(r.graph6, r.gamma, r.b) for r in serial]


def test_search_teschner_violations():
    assert search_teschner_violations(parse_corpus_spec("connected:5")) == []


@pytest.mark.slow
def test_soundness_sweep_up_to_six_vertices():
    records = verify_corpus(parse_corpus_spec("connected:6"), Verifier(time_limit=60.0))
    assert len(records) == 1 + 1 + 2 + 6 + 21 + 112
    assert not [r.graph6 for r in records if r.failed_stage]
    assert all(r.hartnell_rall for r in records if r.b is not None)
    assert teschner_violations(records) == []


def test_records_to_frame(c4, k3):
    records = [Verifier().verify(g) for g in (c4, k3)]
    frame = records_to_frame(records)
    assert list(frame.columns) == REPORT_COLUMNS
    assert list(frame["b"]) == [3, 2]
    assert str(frame["k"].dtype) == "Int64"
    assert frame["k"].isna().all()


def test_emit_csv(c4):
    buffer = io.StringIO()
    emit_report([Verifier().verify(c4)], buffer, "csv")
    frame = pd.read_csv(io.StringIO(buffer.getvalue()))
    assert list(frame.columns) == REPORT_COLUMNS
    assert frame.loc[0, "teschner_margin"] == 0


def test_emit_jsonl(tmp_path, c4, k3):
    path = tmp_path / "report.jsonl"
    emit_report([Verifier().verify(g) for g in (c4, k3)], str(path), "jsonl")
    lines = path.read_text().splitlines()
    assert len(lines) == 2
    first = json.loads(lines[0])
    assert (first["graph6"], first["b"], first["k"]) == ("Cl", 3, None)


def test_emit_empty_reports():
    buffer = io.StringIO()
    emit_report([], buffer, "jsonl")
    assert buffer.getvalue() == ""
    buffer = io.StringIO()
    emit_report([], buffer, "csv")
    assert buffer.getvalue().strip() == ",".join(REPORT_COLUMNS)
    with pytest.raises(ValueError):
        emit_report([], buffer, "xml")


def test_export_table1(tmp_path):
    path = tmp_path / "table.csv"
    frame = export_table1(str(path))
    assert len(frame) == 28
    assert (pd.read_csv(str(path))["constant"] == frame["expected"]).all()


def test_curvature_sweep(small_pool):
    frame = curvature_sweep(small_pool, count=1000, seed=3)
    assert len(frame) == 1000
    assert set(frame["graph6"]) == set(write_graph6(g) for g in small_pool)
    assert (frame["euler_characteristic"] <= 2).all()
    orientable = frame[frame["orientable"]]
    assert (orientable["euler_characteristic"] % 2 == 0).all()
    with pytest.raises(ValueError):
        curvature_sweep([empty_graph(3)])


def test_graphs_corpus_keeps_declared_genera(k5):
    spec = CorpusSpec(source="graphs", graphs=[CorpusEntry(k5, h=1)], genus_mode="declared")
    (record,) = verify_corpus(spec)
    assert record.facts.h == 1 and record.facts.genus_provenance == "declared"
