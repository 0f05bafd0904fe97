import networkx as nx
import numpy as np
import pytest

from bondtools.corpus import enumerate_connected_graphs
from bondtools.domination import (ORACLE_MAX_VERTICES, OracleCapExceeded, dominating_set_within, domination_number,
                                  domination_number_oracle, is_dominating_set)
from bondtools.graph import Graph, complete_graph, cycle_graph, empty_graph, path_graph, star_graph


@pytest.mark.parametrize("g, gamma", [
    (complete_graph(1), 1), (complete_graph(6), 1), (cycle_graph(4), 2), (cycle_graph(6), 2),
    (cycle_graph(7), 3), (path_graph(3), 1), (path_graph(7), 3), (star_graph(6), 1), (empty_graph(3), 3),
])
def test_domination_number(g, gamma):
    result = domination_number(g)
    assert result.gamma == gamma
    assert len(result.witness) == gamma
    assert is_dominating_set(g, result.witness)
    assert domination_number_oracle(g) == gamma


def test_named_graphs(rook3, petersen):
    assert domination_number(rook3).gamma == 3
    assert domination_number(petersen).gamma == 3


def test_is_dominating_set(c4):
    assert is_dominating_set(c4, [0, 2])
    assert not is_dominating_set(c4, [0])
    with pytest.raises(IndexError):
        is_dominating_set(c4, [5])


def test_dominating_set_within(c6):
    assert dominating_set_within(c6, 1) is None
    found = dominating_set_within(c6, 2)
    assert len(found) == 2 and is_dominating_set(c6, found)
    assert len(dominating_set_within(c6, 4)) == 2
    assert dominating_set_within(c6, -1) is None


def test_hint_is_only_an_upper_bound(c6):
    assert domination_number(c6, hint=range(6)).gamma == 2
    assert domination_number(c6, hint=[0, 3]).witness == (0, 3)


def test_disconnected_graphs_sum_components():
    g = Graph.from_edges(7, [(0, 1), (1, 2), (3, 4), (4, 5)])
    result = domination_number(g)
    assert result.gamma == 3
    assert set(result.witness) == {1, 4, 6}


def test_random_graphs_against_oracle():
    rng = np.random.default_rng(17)
    for _ in range(60):
        n = int(rng.integers(1, 11))
        g = Graph.from_networkx(nx.gnp_random_graph(n, float(rng.uniform(0.1, 0.7)),
                                                    seed=int(rng.integers(1 << 30))))
        result = domination_number(g)
        assert result.gamma == domination_number_oracle(g)
        assert is_dominating_set(g, result.witness)
        assert nx.is_dominating_set(g.to_networkx(), set(result.witness))


def test_edge_removal_never_lowers_gamma():
    rng = np.random.default_rng(3)
    for _ in range(20):
        g = Graph.from_networkx(nx.gnp_random_graph(8, 0.5, seed=int(rng.integers(1 << 30))))
        gamma = domination_number(g).gamma
        for e in g.edges():
            assert domination_number(g.remove_edges([e])).gamma >= gamma


def test_oracle_cap():
    with pytest.raises(OracleCapExceeded):
        domination_number_oracle(empty_graph(ORACLE_MAX_VERTICES + 1))
    assert domination_number(empty_graph(ORACLE_MAX_VERTICES + 1)).gamma == ORACLE_MAX_VERTICES + 1


@pytest.mark.slow
def test_oracle_on_all_connected_graphs_up_to_six_vertices():
    graphs = [g for n in range(1, 7) for g in enumerate_connected_graphs(n)]
    assert len(graphs) == 143
    for g in graphs:
        result = domination_number(g)
        assert result.gamma == domination_number_oracle(g)
        assert nx.is_dominating_set(g.to_networkx(), set(result.witness))
