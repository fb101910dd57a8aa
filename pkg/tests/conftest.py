import pytest

from spreadlab.graph import Graph


def pentagon_with_tail() -> Graph:
    """9 vertices: a 5-cycle with a 4-edge path hanging off vertex 4.

    The running example graph: odd girth 5, unicyclic, irregular.
    """
    cycle = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
    tail = [(4, 5), (5, 6), (6, 7), (7, 8)]
    return Graph(9, cycle + tail)


def petersen_graph() -> Graph:
    outer = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    return Graph(10, outer + spokes + inner)


@pytest.fixture
def pentagon_tail() -> Graph:
    return pentagon_with_tail()


@pytest.fixture
def petersen() -> Graph:
    return petersen_graph()
