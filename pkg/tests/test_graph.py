import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from euledit.errors import NotEulerian
from euledit.graph import (
    Graph,
    check_circuit,
    common_neighbors,
    complement,
    components,
    degree_sequence,
    euler_circuit,
    eulerian_failure,
    is_connected,
    is_eulerian,
    odd_vertices,
)
from euledit.oracle import enumerate_graphs

from conftest import c6_chord, two_triangles


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


def test_degree_sequence_examples(k4, path3):
    assert degree_sequence(k4) == [3, 3, 3, 3]
    assert degree_sequence(path3) == [1, 2, 1]
    assert degree_sequence(Graph(3)) == [0, 0, 0]


def test_odd_vertices_examples(k4):
    assert odd_vertices(k4) == [0, 1, 2, 3]
    assert odd_vertices(Graph.cycle(6)) == []
    assert odd_vertices(c6_chord()) == [0, 2]


def test_is_connected_examples():
    assert is_connected(Graph.cycle(6))
    assert not is_connected(two_triangles())
    assert is_connected(Graph(1))
    assert is_connected(Graph(0))


def test_complement_examples(k4):
    assert complement(k4) == Graph(4)
    assert complement(Graph(3)) == Graph.complete(3)
    assert complement(Graph.cycle(5)) == Graph(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])


def test_common_neighbors_examples(k4, path3):
    assert common_neighbors(k4, 0, 1) == [2, 3]
    assert common_neighbors(path3, 0, 2) == [1]
    assert common_neighbors(Graph.cycle(6), 0, 3) == []


@pytest.mark.parametrize("u,v", [(0, 0), (0, 4), (-1, 2)])
def test_common_neighbors_rejects_bad_endpoints(k4, u, v):
    with pytest.raises(ValueError):
        common_neighbors(k4, u, v)


def test_is_eulerian_examples(k4, k5):
    assert is_eulerian(k5)
    assert not is_eulerian(k4)
    assert not is_eulerian(two_triangles())
    assert eulerian_failure(Graph(1)) == "too_few_edges"
    # isolated vertex breaks spanning connectivity
    assert eulerian_failure(Graph(4, [(0, 1), (1, 2), (0, 2)])) == "connectivity"


def test_circuit_triangle(triangle):
    assert euler_circuit(triangle).walk == (0, 1, 2)


def test_circuit_k5(k5):
    circ = euler_circuit(k5)
    assert len(circ) == 10
    assert check_circuit(k5, circ.walk)
    assert sorted(circ.edges()) == k5.edges()


def test_circuit_errors(k4):
    with pytest.raises(NotEulerian) as info:
        euler_circuit(k4)
    assert info.value.condition == "parity"
    assert "0 1 2 3" in str(info.value)
    with pytest.raises(NotEulerian) as info:
        euler_circuit(two_triangles())
    assert info.value.condition == "connectivity"


def test_circuit_large_cycle_no_recursion_limit():
    g = Graph.cycle(5000)
    assert check_circuit(g, euler_circuit(g).walk)


def test_checker_rejects_bad_walks(k5):
    walk = list(euler_circuit(k5).walk)
    assert not check_circuit(k5, walk[:-1])
    assert not check_circuit(k5, walk[::-1][:-1] + [walk[1]])
    assert not check_circuit(Graph.complete(3), [0, 1, 7])


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])


@given(graphs())
def test_handshake(g):
    degs = degree_sequence(g)
    assert sum(degs) == 2 * g.m
    assert len(odd_vertices(g)) % 2 == 0
    for u, v in g.edges():
        assert u < v and g.has_edge(v, u)


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert complement(g).m + g.m == g.n * (g.n - 1) // 2


@settings(max_examples=200)
@given(graphs(max_n=10))
def test_eulerian_implies_circuit(g):
    if is_eulerian(g):
        assert check_circuit(g, euler_circuit(g).walk)
    else:
        with pytest.raises(NotEulerian):
            euler_circuit(g)


def _closure_connected(g):
    n = g.n
    if n <= 1:
        return True
    reach = [[i == j or g.has_edge(i, j) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                reach[i][j] = reach[i][j] or (reach[i][k] and reach[k][j])
    return all(reach[0])


@pytest.mark.parametrize("n", range(6))
def test_connectivity_matches_transitive_closure(n):
    for g in enumerate_graphs(n):
        assert is_connected(g) == _closure_connected(g)
        assert (len(components(g)) <= 1) == is_connected(g) or n == 0


@pytest.mark.parametrize("n", range(3, 6))
def test_circuit_total_on_eulerian_graphs(n):
    for g in enumerate_graphs(n):
        if is_eulerian(g):
            assert check_circuit(g, euler_circuit(g).walk)
