import numpy as np
import pytest

from spreadlab.graph import Graph, degree_profile, family
from spreadlab.harness import enumerate_graphs
from spreadlab.spectra import adjacency_matrix, signless_laplacian_matrix
from spreadlab.transforms import EdgeIndex, incidence_matrix, line_graph, total_graph

from conftest import petersen_graph


def test_edge_index():
    g = Graph(4, [(2, 3), (0, 1), (0, 2)])
    idx = EdgeIndex(g.edges())
    assert list(idx) == [(0, 1), (0, 2), (2, 3)]
    assert len(idx) == 3
    assert idx[1] == (0, 2)
    assert idx.index_of(2, 0) == 1 and idx.index_of(0, 2) == 1
    with pytest.raises(KeyError):
        idx.index_of(1, 3)


def test_line_graph_small_knowns():
    # path -> shorter path
    lg, idx = line_graph(family("path", 4))
    assert lg == Graph(3, [(0, 1), (1, 2)])
    assert list(idx) == [(0, 1), (1, 2), (2, 3)]
    # triangle and the 3-star share the same line graph (triangle)
    for g in (family("complete", 3), Graph(4, [(0, 1), (0, 2), (0, 3)])):
        lg, _ = line_graph(g)
        assert lg == family("complete", 3)
    # edgeless graph -> empty line graph
    lg, idx = line_graph(Graph(3))
    assert lg.n == 0 and len(idx) == 0


def test_line_graph_petersen():
    lg, _ = line_graph(petersen_graph())
    assert (lg.n, lg.m) == (15, 30)
    assert set(lg.degrees()) == {4}


def test_line_graph_degree_identity():
    # deg_L(e) = d(u) + d(v) - 2 for every edge e = (u, v)
    for n in range(2, 6):
        for g in enumerate_graphs(n):
            if g.m == 0:
                continue
            lg, idx = line_graph(g)
            degs = g.degrees()
            for k, (u, v) in enumerate(idx):
                assert lg.degree(k) == degs[u] + degs[v] - 2


def test_total_graph_structure():
    g = family("cycle", 3)
    t = total_graph(g)
    # 6 vertices, 4-regular: the octahedron
    assert (t.n, t.m) == (6, 12)
    assert set(t.degrees()) == {4}

    # vertex block keeps G's adjacency; edge block is the line graph;
    # cross edges are incidences
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    t = total_graph(g)
    assert t.n == g.n + g.m
    for i in range(g.n):
        for j in range(i + 1, g.n):
            assert t.has_edge(i, j) == g.has_edge(i, j)
    lg, idx = line_graph(g)
    for a in range(g.m):
        for b in range(a + 1, g.m):
            assert t.has_edge(g.n + a, g.n + b) == lg.has_edge(a, b)
    for k, (u, v) in enumerate(idx):
        assert t.has_edge(u, g.n + k) and t.has_edge(v, g.n + k)
        for w in range(g.n):
            if w not in (u, v):
                assert not t.has_edge(w, g.n + k)


def test_total_graph_degrees():
    # deg_T(v) = 2 deg(v); deg_T(e) = d(u) + d(v)
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            t = total_graph(g)
            degs = g.degrees()
            tdegs = t.degrees()
            for v in range(g.n):
                assert tdegs[v] == 2 * degs[v]
            _, idx = line_graph(g)
            for k, (u, v) in enumerate(idx):
                assert tdegs[g.n + k] == degs[u] + degs[v]


def test_total_graph_edgeless():
    t = total_graph(Graph(3))
    assert t == Graph(3)


def test_incidence_identities():
    # R R^t = Q(G) and R^t R = 2I + A(L(G)), exactly in integers
    for n in range(2, 6):
        for g in enumerate_graphs(n):
            r = incidence_matrix(g)
            assert r.shape == (g.n, g.m)
            q = signless_laplacian_matrix(g)
            np.testing.assert_array_equal(r @ r.T, q)
            if g.m:
                lg, _ = line_graph(g)
                expect = 2 * np.eye(g.m) + adjacency_matrix(lg)
                np.testing.assert_array_equal(r.T @ r, expect)


def test_incidence_column_sums():
    g = petersen_graph()
    r = incidence_matrix(g)
    assert r.sum(axis=0).tolist() == [2.0] * g.m
    assert r.sum(axis=1).tolist() == [float(d) for d in degree_profile(g).degrees]
