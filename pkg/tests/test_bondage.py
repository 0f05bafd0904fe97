import logging

import networkx as nx
import numpy as np
import pytest

from bondtools.bondage import (ORACLE_MAX_EDGES, BondageSearch, UndefinedBondage, bondage_number, bondage_number_oracle,
                               edge_local_bound, edge_local_witness, hartnell_rall_edge_floor)
from bondtools.corpus import enumerate_connected_graphs
from bondtools.domination import OracleCapExceeded, domination_number
from bondtools.graph import Edge, Graph, complete_graph, cycle_graph, empty_graph, is_connected, path_graph, star_graph


@pytest.mark.parametrize("g, b", [
    (complete_graph(2), 1), (complete_graph(3), 2), (complete_graph(4), 2), (complete_graph(5), 3),
    (cycle_graph(4), 3), (cycle_graph(5), 2), (cycle_graph(6), 2), (cycle_graph(7), 3),
    (path_graph(3), 1), (star_graph(6), 1),
])
def test_bondage_number(g, b):
    result = bondage_number(g)
    assert result.b == b
    assert len(result.witness) == b
    assert domination_number(g.remove_edges(result.witness)).gamma > result.gamma
    assert bondage_number_oracle(g) == b


@pytest.mark.parametrize("g, bound", [(complete_graph(4), 3), (cycle_graph(4), 3), (star_graph(7), 6),
                                      (complete_graph(3), 2), (complete_graph(2), 1)])
def test_edge_local_bound(g, bound):
    assert edge_local_bound(g) == bound


def test_edge_local_witness_is_first_minimizer(p3):
    assert edge_local_witness(p3) == (Edge(0, 1), 2)


def test_bondage_respects_edge_local_bound(small_pool):
    for g in small_pool:
        assert bondage_number(g).b <= edge_local_bound(g)


def test_undefined_bondage():
    with pytest.raises(UndefinedBondage):
        bondage_number(empty_graph(3))
    with pytest.raises(UndefinedBondage):
        edge_local_bound(empty_graph(2))
    with pytest.raises(UndefinedBondage):
        bondage_number_oracle(complete_graph(1))


def test_disconnected_takes_smallest_component():
    # C_4 (b = 3) next to a P_3 shifted to vertices 4..6 (b = 1) and an isolated vertex.
    g = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6)])
    result = bondage_number(g)
    assert result.b == 1
    (e,) = result.witness
    assert e in (Edge(4, 5), Edge(5, 6))
    assert result.gamma == 4
    assert domination_number(g.remove_edges(result.witness)).gamma == 5


def test_random_graphs_against_oracle():
    rng = np.random.default_rng(23)
    checked = 0
    while checked < 30:
        n = int(rng.integers(2, 8))
        g = Graph.from_networkx(nx.gnp_random_graph(n, float(rng.uniform(0.3, 0.8)),
                                                    seed=int(rng.integers(1 << 30))))
        if g.m == 0 or g.m > ORACLE_MAX_EDGES:
            continue
        assert bondage_number(g).b == bondage_number_oracle(g)
        checked += 1


def test_oracle_cap():
    with pytest.raises(OracleCapExceeded):
        bondage_number_oracle(complete_graph(7))


def test_edge_floor_on_connected_graphs(small_pool, rook3, petersen):
    for g in small_pool + [rook3, petersen]:
        assert is_connected(g)
        assert hartnell_rall_edge_floor(g, bondage_number(g).b)


def test_edge_floor_failure_is_logged(c4, caplog):
    with caplog.at_level(logging.WARNING, logger="bondtools.bondage"):
        assert not hartnell_rall_edge_floor(c4, 4)
    assert "fails" in caplog.text


def test_search_memo_answers_a_rerun(c6):
    search = BondageSearch(c6)
    first = search.run()
    calls = search.calls
    assert first.b == 2
    assert search.memo[first.witness] is None
    gamma = domination_number(c6).gamma
    assert all(mask is None or bin(mask).count("1") <= gamma for mask in search.memo.values())
    assert search.run() == first
    assert search.calls == calls


def test_search_rejects_unknown_keys(c4):
    with pytest.raises(ValueError):
        BondageSearch(c4, threads=2)


def test_workers_find_the_same_witness(small_pool, rook3):
    for g in small_pool[:5] + [rook3]:
        serial = BondageSearch(g).run()
        with BondageSearch(g, workers=2, batch=4) as search:
            pooled = search.run()
        assert pooled == serial
    assert bondage_number(cycle_graph(5), workers=2).b == 2


@pytest.mark.slow
def test_oracle_on_all_connected_graphs_up_to_six_vertices():
    checked = 0
    for n in range(1, 7):
        for g in enumerate_connected_graphs(n):
            if 1 <= g.m <= 12:
                assert bondage_number(g).b == bondage_number_oracle(g)
                checked += 1
    assert checked == 138
