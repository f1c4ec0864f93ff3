import pytest

from euledit.graph import Graph


def two_triangles():
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def c6_chord():
    return Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 2)])


def triangle_plus_isolated():
    return Graph(4, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def path3():
    return Graph.path(3)


@pytest.fixture
def k4():
    return Graph.complete(4)


@pytest.fixture
def k5():
    return Graph.complete(5)


@pytest.fixture
def triangle():
    return Graph.complete(3)
