"""Encoder/decoder checks against networkx as the reference codec."""

import networkx as nx
import numpy as np
import pytest

from spreadlab.graph import CapacityError, Graph, ParseError, from_graph6, to_graph6
from spreadlab.harness import enumerate_graphs


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(pos[a], pos[b]) for a, b in h.edges()])


def test_roundtrip_all_small_graphs():
    # every labeled graph on up to 5 vertices, both directions, vs networkx
    for n in range(0, 6):
        for g in enumerate_graphs(n) if n else [Graph(0)]:
            s = to_graph6(g)
            assert from_graph6(s) == g
            assert s == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
            assert from_nx(nx.from_graph6_bytes(s.encode())) == g


def test_roundtrip_random_medium_graphs():
    rng = np.random.default_rng(20240913)
    for n in (6, 7, 8, 20, 40, 62, 63, 64, 70):
        for _ in range(6):
            h = nx.gnp_random_graph(n, 0.3, seed=int(rng.integers(1 << 30)))
            g = from_nx(h)
            s = to_graph6(g)
            assert s == nx.to_graph6_bytes(h, header=False).decode().strip()
            assert from_graph6(s) == g


def test_header_and_bytes_accepted():
    g = Graph(4, [(0, 1), (2, 3)])
    s = to_graph6(g)
    assert from_graph6(">>graph6<<" + s) == g
    assert from_graph6(s.encode()) == g
    assert from_graph6("  " + s + "\n") == g


def test_known_literals():
    assert to_graph6(Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])) == "C~"
    k33 = Graph(6, [(i, 3 + j) for i in range(3) for j in range(3)])
    assert to_graph6(k33) == "EFz_"
    assert from_graph6("?").n == 0


def test_parse_errors():
    with pytest.raises(ParseError):
        from_graph6("")
    with pytest.raises(ParseError):
        from_graph6("C~xxxx")  # trailing garbage
    with pytest.raises(ParseError):
        from_graph6("C")  # truncated payload
    with pytest.raises(ParseError):
        from_graph6("C\x19")  # byte below printable graph6 range
    with pytest.raises(ParseError):
        from_graph6("~~")  # truncated long-form order
