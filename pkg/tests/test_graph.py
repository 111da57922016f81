import random

import pytest
from hypothesis import given, settings, strategies as st

from mdsl import graph as G
from mdsl.graph import Edges, Graph, GraphMatrix, Tour, Vertices

from oracles import (
    edge_connected,
    euler_trails,
    held_karp_hamilton,
    matmul,
    min_spanning_weight,
    simple_path_distances,
)

TRIANGLE = Graph([1, 2, 3], [(1, 2, 1), (2, 1, 1), (2, 3, 1), (3, 2, 1), (1, 3, 1), (3, 1, 1)])


def random_graph(rng, n, p=0.4, directed=True):
    edges = []
    for a in range(n):
        for b in range(n):
            if a == b or (not directed and b < a):
                continue
            if rng.random() < p:
                w = rng.randint(1, 9)
                edges.append((a, b, w))
                if not directed:
                    edges.append((b, a, w))
    return Graph(range(n), edges)


def test_convert_example():
    g = Graph([1, 2], [(1, 2, 5), (2, 1, 5)])
    assert G.convert(g) == GraphMatrix([[0, 5], [5, 0]])
    assert G.convert_back(G.convert(g), [1, 2]) == g


def test_convert_back_default_labels():
    assert G.convert_back(GraphMatrix([[0, 2], [0, 0]])) == Graph([0, 1], [(0, 1, 2)])


def test_validation():
    with pytest.raises(ValueError):
        Graph([1], [(1, 2, 3)])
    with pytest.raises(ValueError):
        Edges([(1, 2, 0)])
    with pytest.raises(ValueError):
        Edges([(1, 2, 3), (1, 2, 4)])
    with pytest.raises(ValueError):
        GraphMatrix([[0, 1]])
    with pytest.raises(ValueError):
        G.add_edges(Graph([1, 2], []), [(1, 5, 1)])
    with pytest.raises(ValueError):
        G.degree(Graph([1], []), 9)


def test_direction():
    assert G.is_undirected(GraphMatrix([[0, 5], [5, 0]]))
    assert not G.is_undirected(GraphMatrix([[0, 1], [0, 0]]))
    assert G.is_directed(GraphMatrix([[0, 1], [0, 0]]))
    assert G.is_subgraph(TRIANGLE, TRIANGLE)
    assert G.is_subgraph(Graph([1, 2], [(1, 2, 1)]), TRIANGLE)
    assert not G.is_subgraph(Graph([1, 4], []), TRIANGLE)


def test_degrees():
    g = Graph([1, 2, 3], [(1, 2, 4), (2, 1, 3)])
    assert G.degree(g, 1) == 2
    assert G.in_degree(g, 3) == 0
    assert G.adjacent_nodes(TRIANGLE, 1) == G.Set([2, 3])
    assert G.count_odd_degree(g) == 0 and G.count_even_degree(g) == 3


def test_euler_examples():
    assert G.has_euler_circuit(Graph([1, 2], [(1, 2, 4), (2, 1, 3)]))
    both_ways = Graph([1, 2, 3], [(1, 2, 1), (2, 1, 1), (2, 3, 1), (3, 2, 1)])
    # degrees under in+out are 2, 4, 2
    assert not G.has_euler_path_not_circuit(both_ways)
    assert G.has_euler_circuit(both_ways)
    one_way = Graph([1, 2, 3], [(1, 2, 1), (2, 3, 1)])
    assert G.has_euler_path_not_circuit(one_way)
    assert G.euler_hamilton(Tour.EULER_PATH, one_way)


def test_hamilton_examples():
    cycle = Graph([1, 2, 3], [(1, 2, 1), (2, 3, 1), (3, 1, 1)])
    assert G.euler_hamilton(Tour.HAMILTONIAN_CIRCUIT, cycle)
    assert G.has_hamiltonian_path(Graph([1, 2, 3], [(1, 2, 1), (2, 3, 1)]))
    assert not G.has_hamiltonian_circuit(Graph([1, 2, 3], [(1, 2, 1), (2, 3, 1)]))
    with pytest.raises(ValueError):
        G.has_hamiltonian_path(Graph(range(11), []))


def test_building():
    assert G.vertices_in_edges([(1, 2, 4), (2, 1, 3)]) == Vertices([1, 2])
    g = G.union(Graph([1], []), Graph([2], [(2, 2, 1)]))
    assert g == Graph([1, 2], [(2, 2, 1)])
    assert G.add_vertices(Graph([1], []), [3]) == Graph([1, 3], [])
    gm = G.add_edges(GraphMatrix([[0, 0], [0, 0]]), [(0, 1, 7)])
    assert gm == GraphMatrix([[0, 7], [0, 0]])
    with pytest.raises(ValueError):
        G.union(Graph([1, 2], [(1, 2, 1)]), Graph([1, 2], [(1, 2, 2)]))


def test_walks():
    assert G.num_paths_between(TRIANGLE, 0, 0, 2) == 2
    assert G.num_paths_between(Graph([1, 2], []), 0, 1, 3) == 0
    assert G.are_connected(Graph([1, 2], [(1, 2, 1)]), 0, 1)
    assert not G.are_connected(Graph([1, 2], [(1, 2, 1)]), 1, 0)
    with pytest.raises(IndexError):
        G.num_paths_between(TRIANGLE, 0, 3, 1)


def test_walk_counts_match_matrix_power():
    rng = random.Random(3)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 5))
        adj = [[1 if w else 0 for w in row] for row in G.convert(g).rows]
        n = len(adj)
        power = adj
        for k in range(1, 4):
            u, v = rng.randrange(n), rng.randrange(n)
            assert G.num_paths_between(g, u, v, k) == power[u][v]
            power = matmul(power, adj)


def test_dijkstra_example():
    g = Graph([1, 2, 3], [(1, 2, 1), (2, 3, 1), (1, 3, 5)])
    assert G.dijkstra(g, 1) == {1: 0, 2: 1, 3: 2}
    assert G.dijkstra(g, 3)[1] == float("inf")


def test_traversals():
    path = Graph([1, 2, 3], [(1, 2, 1), (2, 1, 1), (2, 3, 1), (3, 2, 1)])
    assert G.bfs(path, 1) == [1, 2, 3]
    assert G.dfs(path, 1) == [1, 2, 3]
    star = Graph([1, 2, 3, 4], [(1, 3, 1), (1, 2, 1), (2, 4, 1)])
    assert G.bfs(star, 1) == [1, 2, 3, 4]
    assert G.dfs(star, 1) == [1, 2, 4, 3]


def test_mst_rejects_bad_input():
    with pytest.raises(ValueError):
        G.prim(Graph([1, 2], [(1, 2, 1)]))
    with pytest.raises(ValueError):
        G.kruskal(Graph([1, 2], []))


def test_algorithms_against_oracles():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(1, 6)
        g = random_graph(rng, n)
        src = rng.randrange(n)
        assert G.dijkstra(g, src) == simple_path_distances(range(n), list(g.edges), src)
        pairs = [(s, d) for s, d, _ in g.edges]
        assert G.has_hamiltonian_circuit(g) == held_karp_hamilton(range(n), pairs, True)
        assert G.has_hamiltonian_path(g) == held_karp_hamilton(range(n), pairs, False)
        ug = random_graph(rng, n, 0.6, directed=False)
        if len(G.bfs(ug, 0)) == n:
            half = [(s, d, w) for s, d, w in ug.edges if s < d]
            best = min_spanning_weight(range(n), half)
            assert G.total_weight(G.prim(ug)) == G.total_weight(G.kruskal(ug)) == best
            assert len(G.prim(ug)) == n - 1


def test_euler_against_trails():
    rng = random.Random(5)
    checked = 0
    while checked < 100:
        n = rng.randint(1, 5)
        g = random_graph(rng, n, 0.3)
        pairs = [(s, d) for s, d, _ in g.edges]
        if not edge_connected(range(n), pairs):
            continue
        closed, open_ = euler_trails(range(n), pairs)
        assert G.has_euler_circuit(g) == closed
        assert G.has_euler_path(g) == (closed or open_)
        assert G.has_euler_path_not_circuit(g) == (open_ and not closed)
        checked += 1


graphs = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(1, 9)), max_size=12)
    .map(lambda es: Graph(range(n), list({(s, d): (s, d, w) for s, d, w in es}.values())))
)


@given(graphs)
def test_representation_roundtrip(g):
    gm = G.convert(g)
    assert G.convert_back(gm, g.labels) == g
    assert G.transpose(G.transpose(gm)) == gm
    assert G.is_undirected(g) == G.is_undirected(gm)
    assert G.has_euler_circuit(g) == G.has_euler_circuit(gm)


@settings(max_examples=50)
@given(graphs)
def test_traversals_visit_reachable(g):
    src = g.labels[0]
    reach = set(G.bfs(g, src))
    assert reach == set(G.dfs(g, src))
    dist = G.dijkstra(g, src)
    assert reach == {v for v, d in dist.items() if d < float("inf")}
