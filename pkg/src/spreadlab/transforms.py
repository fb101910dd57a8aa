"""Derived graphs: line graph, total graph, and the incidence matrix.

The edge numbering used everywhere is the lexicographic one fixed by
:class:`EdgeIndex`: edge-vertex ``k`` of the line graph (and vertex ``n + k``
of the total graph, and column ``k`` of the incidence matrix) is the ``k``-th
edge of the base graph in sorted ``(i, j)`` order with ``i < j``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

import numpy as np

from .graph import Graph

__all__ = ["EdgeIndex", "incidence_matrix", "line_graph", "total_graph"]


class EdgeIndex:
    """Canonical edge numbering: lexicographically sorted ``(i, j)`` pairs."""

    __slots__ = ("edges", "_pos")

    def __init__(self, edges):
        norm = []
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop ({i}, {j}) not allowed")
            norm.append((i, j) if i < j else (j, i))
        ordered = sorted(norm)
        if len(set(ordered)) != len(ordered):
            raise ValueError("duplicate edges in edge index")
        self.edges: tuple[tuple[int, int], ...] = tuple(ordered)
        self._pos = {e: k for k, e in enumerate(self.edges)}

    def index_of(self, i: int, j: int) -> int:
        return self._pos[(i, j) if i < j else (j, i)]

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.edges)

    def __getitem__(self, k: int) -> tuple[int, int]:
        return self.edges[k]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, EdgeIndex) and self.edges == other.edges

    def __hash__(self) -> int:
        return hash(self.edges)

    def __repr__(self) -> str:
        return f"EdgeIndex({len(self.edges)} edges)"


def line_graph(g: Graph) -> tuple[Graph, EdgeIndex]:
    """Line graph: one vertex per edge, adjacent iff the edges share an end.

    Returns the line graph together with the :class:`EdgeIndex` that maps
    its vertices back to edges of ``g``.
    """
    index = EdgeIndex(g.edges())
    m = len(index)
    end_masks = [(1 << i) | (1 << j) for i, j in index]
    masks = [0] * m
    for a, b in combinations(range(m), 2):
        if end_masks[a] & end_masks[b]:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
    return Graph._from_neighbor_masks(m, masks), index


def total_graph(g: Graph) -> Graph:
    """Total graph on ``n + m`` vertices.

    Vertices ``0..n-1`` are the original ones and keep the edges of ``g``;
    vertices ``n + k`` are the edges of ``g`` in :class:`EdgeIndex` order,
    adjacent to each other iff the edges share an endpoint and to the two
    endpoints of their edge.
    """
    n = g.n
    lg, index = line_graph(g)
    m = lg.n
    masks = [g.neighbor_mask(v) for v in range(n)]
    masks += [lg.neighbor_mask(k) << n for k in range(m)]
    for k, (i, j) in enumerate(index):
        masks[i] |= 1 << (n + k)
        masks[j] |= 1 << (n + k)
        masks[n + k] |= (1 << i) | (1 << j)
    return Graph._from_neighbor_masks(n + m, masks)


def incidence_matrix(g: Graph) -> np.ndarray:
    """Vertex-edge incidence matrix (int64, ``n`` rows, ``m`` columns)."""
    index = EdgeIndex(g.edges())
    r = np.zeros((g.n, len(index)), dtype=np.int64)
    for k, (i, j) in enumerate(index):
        r[i, k] = 1
        r[j, k] = 1
    return r
