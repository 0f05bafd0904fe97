import pytest

from bondtools.corpus import (CONNECTED_GRAPH_COUNTS, CorpusEntry, CorpusSpec, canonical_form,
                              enumerate_connected_graphs, family_graph, parse_corpus_spec, read_corpus_file)
from bondtools.graph import Graph, Graph6Error, complete_graph, cycle_graph, is_connected, write_graph6


@pytest.mark.parametrize("n", range(1, 7))
def test_enumeration_counts(n):
    graphs = enumerate_connected_graphs(n)
    assert len(graphs) == CONNECTED_GRAPH_COUNTS[n - 1]
    assert all(g.n == n and is_connected(g) for g in graphs)


@pytest.mark.slow
def test_enumeration_order_seven():
    assert len(enumerate_connected_graphs(7)) == 853


def test_enumeration_is_sorted_by_edges():
    graphs = enumerate_connected_graphs(5)
    keys = [(g.m, write_graph6(g)) for g in graphs]
    assert keys == sorted(keys)
    assert graphs[0].m == 4 and graphs[-1] == complete_graph(5)


@pytest.mark.parametrize("n", range(1, 6))
def test_enumeration_has_distinct_canonical_forms(n):
    forms = [canonical_form(g) for g in enumerate_connected_graphs(n)]
    assert len(set(forms)) == len(forms)


def test_enumeration_range_is_checked():
    with pytest.raises(ValueError):
        enumerate_connected_graphs(0)
    with pytest.raises(ValueError):
        enumerate_connected_graphs(11)


def test_canonical_form_is_label_free():
    a = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    b = Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)])
    assert canonical_form(a) == canonical_form(b)
    assert canonical_form(a) != canonical_form(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    with pytest.raises(ValueError):
        canonical_form(complete_graph(9))


def test_families():
    assert family_graph("cycle", 5) == cycle_graph(5)
    rook = family_graph("rook", 3)
    assert (rook.n, rook.m) == (9, 18)
    with pytest.raises(ValueError):
        family_graph("wheel", 5)


def test_parse_connected_spec():
    spec = parse_corpus_spec("connected:4")
    assert (spec.source, spec.n_min, spec.n_max) == ("enumerate", 1, 4)
    assert len(spec.entries()) == 1 + 1 + 2 + 6
    spec = parse_corpus_spec("connected:3-4")
    assert (spec.n_min, spec.n_max) == (3, 4)
    with pytest.raises(ValueError):
        parse_corpus_spec("connected:12")


def test_parse_family_and_graph6_specs():
    spec = parse_corpus_spec("family:complete:5", genus_mode="skip")
    assert spec.genus_mode == "skip"
    assert [e.graph for e in spec.entries()] == [complete_graph(5)]
    spec = parse_corpus_spec("Bw,C~")
    assert [e.graph.n for e in spec.entries()] == [3, 4]
    with pytest.raises(Graph6Error):
        parse_corpus_spec("Bw,!!")


def test_corpus_spec_rejects_unknown_keys():
    with pytest.raises(ValueError):
        CorpusSpec(order=5)
    with pytest.raises(ValueError):
        CorpusSpec(source="family", family="cycle")
    with pytest.raises(ValueError):
        CorpusSpec(genus_mode="guess")


def test_filters():
    disconnected = Graph.from_edges(4, [(0, 1), (2, 3)])
    spec = CorpusSpec(source="graphs", graphs=[disconnected, cycle_graph(4), complete_graph(4)])
    assert [e.graph for e in spec.entries()] == [cycle_graph(4), complete_graph(4)]
    spec = CorpusSpec(source="graphs", graphs=[disconnected, cycle_graph(4), complete_graph(4)],
                      connected_only=False, triangle_free_only=True)
    assert [e.graph for e in spec.entries()] == [disconnected, cycle_graph(4)]
    spec = CorpusSpec(n_max=5, max_edges=4)
    assert all(e.graph.m <= 4 for e in spec.entries())


def test_read_corpus_file(tmp_path):
    path = tmp_path / "declared.g6"
    path.write_text(">>graph6<<D~{ h=1\nBw\n\nC~ h=0 k=1\n")
    entries = read_corpus_file(str(path))
    assert [(e.graph.n, e.h, e.k) for e in entries] == [(5, 1, None), (3, None, None), (4, 0, 1)]
    assert entries[0].graph == complete_graph(5)
    spec = parse_corpus_spec("file:" + str(path), genus_mode="declared")
    assert len(spec.entries()) == 3


def test_read_corpus_file_rejects_bad_tokens(tmp_path):
    path = tmp_path / "bad.g6"
    path.write_text("Bw genus=1\n")
    with pytest.raises(Graph6Error):
        read_corpus_file(str(path))


def test_corpus_entry_repr():
    assert repr(CorpusEntry(complete_graph(3), h=0)) == "CorpusEntry(Bw, h=0, k=None)"
