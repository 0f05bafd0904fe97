import pytest

from bondtools.graph import (Graph, cartesian_product, complete_bipartite_graph, complete_graph, cycle_graph,
                             path_graph, star_graph)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive searches and corpus sweeps")


@pytest.fixture
def k2():
    return complete_graph(2)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def k5():
    return complete_graph(5)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def rook3():
    """K_3 x K_3"""
    return cartesian_product(complete_graph(3), complete_graph(3))


@pytest.fixture
def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


@pytest.fixture
def small_pool():
    """Connected graphs used by the randomized checks."""
    return [complete_graph(4), complete_graph(5), cycle_graph(5), star_graph(5), path_graph(4),
            complete_bipartite_graph(3, 3), cartesian_product(complete_graph(2), cycle_graph(4)),
            cartesian_product(complete_graph(3), complete_graph(2))]
