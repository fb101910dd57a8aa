"""Graph data model: immutable labeled simple graphs plus structural profiles.

Vertices are the integers ``0..n-1``.  Adjacency is stored as one neighbor
bitmask per vertex, which keeps the exhaustive sweeps cheap; dense matrices
are materialized on demand.  Everything here is exact integer combinatorics
-- no floating point.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "CapacityError",
    "ConnectivityProfile",
    "DegreeProfile",
    "Graph",
    "ParseError",
    "connectivity_profile",
    "cycle_pendant_tree_diameter",
    "degree_profile",
    "disjoint_union",
    "family",
    "from_graph6",
    "join",
    "max_induced_tree_diameter",
    "parse_edge_list",
    "to_graph6",
]


class ParseError(ValueError):
    """Malformed textual graph input (graph6 or edge list)."""


class CapacityError(ValueError):
    """Input exceeds a documented size cap."""


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "_nbr")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        nbr = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={n}")
            if i == j:
                raise ValueError(f"loop at vertex {i} not allowed")
            nbr[i] |= 1 << j
            nbr[j] |= 1 << i
        self.n = n
        self._nbr = tuple(nbr)

    @classmethod
    def _from_neighbor_masks(cls, n: int, masks: Sequence[int]) -> "Graph":
        """Unchecked fast path used by the enumerators."""
        g = cls.__new__(cls)
        g.n = n
        g._nbr = tuple(masks)
        return g

    # -- basic queries ----------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(mask.bit_count() for mask in self._nbr) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self._nbr[i] >> j) & 1)

    def degree(self, i: int) -> int:
        return self._nbr[i].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(mask.bit_count() for mask in self._nbr)

    def neighbors(self, i: int) -> Iterator[int]:
        return _bits(self._nbr[i])

    def neighbor_mask(self, i: int) -> int:
        return self._nbr[i]

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(i, j)`` with ``i < j``, lexicographically sorted."""
        out = []
        for i in range(self.n):
            mask = self._nbr[i] >> (i + 1)
            for off in _bits(mask):
                out.append((i, i + 1 + off))
        return out

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix (int64)."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for i in range(self.n):
            for j in _bits(self._nbr[i]):
                a[i, j] = 1
        return a

    # -- derived graphs ---------------------------------------------------

    def with_edge(self, i: int, j: int) -> "Graph":
        if i == j or not (0 <= i < self.n and 0 <= j < self.n):
            raise ValueError(f"invalid edge ({i}, {j})")
        if self.has_edge(i, j):
            raise ValueError(f"edge ({i}, {j}) already present")
        nbr = list(self._nbr)
        nbr[i] |= 1 << j
        nbr[j] |= 1 << i
        return Graph._from_neighbor_masks(self.n, nbr)

    def without_edge(self, i: int, j: int) -> "Graph":
        if not (0 <= i < self.n and 0 <= j < self.n) or not self.has_edge(i, j):
            raise ValueError(f"edge ({i}, {j}) not present")
        nbr = list(self._nbr)
        nbr[i] &= ~(1 << j)
        nbr[j] &= ~(1 << i)
        return Graph._from_neighbor_masks(self.n, nbr)

    def subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; vertex ``vertices[k]`` becomes vertex ``k``."""
        verts = list(vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertices in subgraph selection")
        pos = {v: k for k, v in enumerate(verts)}
        edges = [
            (pos[u], pos[v])
            for u, v in combinations(verts, 2)
            if self.has_edge(u, v)
        ]
        return Graph(len(verts), edges)

    # -- traversal --------------------------------------------------------

    def component_mask(self, start: int) -> int:
        """Bitmask of the vertices reachable from ``start``."""
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self._nbr[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return self.component_mask(0) == (1 << self.n) - 1

    def components(self) -> list[list[int]]:
        """Vertex sets of the connected components, each sorted."""
        remaining = (1 << self.n) - 1
        comps = []
        while remaining:
            start = (remaining & -remaining).bit_length() - 1
            mask = self.component_mask(start)
            comps.append(list(_bits(mask)))
            remaining &= ~mask
        return comps

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._nbr == other._nbr
        )

    def __hash__(self) -> int:
        return hash((self.n, self._nbr))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- graph6 codec ---------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_order(data: bytes) -> tuple[int, int]:
    """Decode the order field; return (n, offset of the first edge byte)."""
    if not data:
        raise ParseError("empty graph6 input")
    b0 = data[0]
    if not 63 <= b0 <= 126:
        raise ParseError(f"invalid graph6 byte {b0} at offset 0")
    if b0 != 126:
        return b0 - 63, 1
    # '~' prefix: 18-bit order in 3 bytes, or '~~' prefix: 36-bit in 6 bytes.
    if len(data) >= 2 and data[1] == 126:
        raw, start, width = data[2:8], 2, 6
    else:
        raw, start, width = data[1:4], 1, 3
    if len(raw) < width:
        raise ParseError("truncated graph6 order field")
    n = 0
    for k, byte in enumerate(raw):
        if not 63 <= byte <= 126:
            raise ParseError(f"invalid graph6 byte {byte} at offset {start + k}")
        n = (n << 6) | (byte - 63)
    return n, start + width


def from_graph6(text: str | bytes) -> Graph:
    """Decode one graph from its graph6 representation.

    Accepts an optional ``>>graph6<<`` header and surrounding whitespace.
    Raises :class:`ParseError` (reporting the byte offset) on malformed
    input.
    """
    if isinstance(text, str):
        data = text.strip().encode("ascii", errors="replace")
    else:
        data = bytes(text).strip()
    if data.startswith(_G6_HEADER.encode()):
        data = data[len(_G6_HEADER):]
    n, offset = _g6_order(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[offset:]
    if len(body) < nbytes:
        raise ParseError(
            f"graph6 body too short: need {nbytes} bytes, have {len(body)}"
        )
    if len(body) > nbytes:
        raise ParseError(
            f"trailing bytes after graph6 body at offset {offset + nbytes}"
        )
    bits = 0
    for k, byte in enumerate(body):
        if not 63 <= byte <= 126:
            raise ParseError(f"invalid graph6 byte {byte} at offset {offset + k}")
        bits = (bits << 6) | (byte - 63)
    bits >>= 6 * nbytes - nbits  # drop the padding
    nbr = [0] * n
    pos = nbits - 1  # bit index of pair (0,1); pairs are column-major
    for j in range(1, n):
        for i in range(j):
            if (bits >> pos) & 1:
                nbr[i] |= 1 << j
                nbr[j] |= 1 << i
            pos -= 1
    return Graph._from_neighbor_masks(n, nbr)


def to_graph6(g: Graph) -> str:
    """Encode a graph in graph6 (multi-byte order fields above n = 62)."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)]
    else:
        raise CapacityError(f"graph6 encoding not supported for n={n}")
    bits = 0
    nbits = n * (n - 1) // 2
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if g.has_edge(i, j):
                bits |= 1 << pos
            pos -= 1
    nbytes = (nbits + 5) // 6
    bits <<= 6 * nbytes - nbits
    body = [63 + ((bits >> (6 * (nbytes - 1 - k))) & 63) for k in range(nbytes)]
    return bytes(head + body).decode("ascii")


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format: ``n m`` then ``m`` lines ``i j``.

    Edges must satisfy ``0 <= i < j < n`` and may not repeat.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2 or not all(tok.isdigit() for tok in head):
        raise ParseError(f"bad header line {lines[0]!r}; expected 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    seen = set()
    for lineno, ln in enumerate(lines[1:], start=2):
        toks = ln.split()
        if len(toks) != 2 or not all(tok.isdigit() for tok in toks):
            raise ParseError(f"bad edge line {lineno}: {ln!r}")
        i, j = int(toks[0]), int(toks[1])
        if not (0 <= i < j < n):
            raise ParseError(
                f"edge line {lineno}: need 0 <= i < j < n, got ({i}, {j})"
            )
        if (i, j) in seen:
            raise ParseError(f"edge line {lineno}: duplicate edge ({i}, {j})")
        seen.add((i, j))
        edges.append((i, j))
    return Graph(n, edges)


# -- degree and connectivity profiles --------------------------------------


@dataclass(frozen=True)
class DegreeProfile:
    """Degree sequence facts; ``zagreb`` is the sum of squared degrees."""

    degrees: tuple[int, ...]
    min_degree: int
    max_degree: int
    zagreb: int


def degree_profile(g: Graph) -> DegreeProfile:
    degs = g.degrees()
    return DegreeProfile(
        degrees=degs,
        min_degree=min(degs, default=0),
        max_degree=max(degs, default=0),
        zagreb=sum(d * d for d in degs),
    )


@dataclass(frozen=True)
class ConnectivityProfile:
    """Connectivity, girth, diameter and regularity facts.

    ``girth`` and ``diameter`` are ``math.inf`` when undefined (acyclic /
    disconnected); ``regular_degree`` is ``None`` for irregular graphs.
    """

    is_connected: bool
    vertex_connectivity: int
    edge_connectivity: int
    girth: int | float
    diameter: int | float
    is_bipartite: bool
    is_regular: bool
    regular_degree: int | None


def _bfs_dist(g: Graph, start: int, allowed: int | None = None) -> dict[int, int]:
    """BFS distances from ``start``; restricted to ``allowed`` mask if given."""
    if allowed is None:
        allowed = (1 << g.n) - 1
    dist = {start: 0}
    seen = 1 << start
    frontier = seen
    d = 0
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.neighbor_mask(v)
        frontier = nxt & allowed & ~seen
        seen |= frontier
        d += 1
        for v in _bits(frontier):
            dist[v] = d
    return dist


def _is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def _girth(g: Graph) -> int | float:
    """Length of a shortest cycle; ``inf`` for forests.

    For each edge (u, v), a shortest u-v path avoiding that edge closes a
    shortest cycle through it.
    """
    best = math.inf
    for u, v in g.edges():
        h = g.without_edge(u, v)
        dist = _bfs_dist(h, u)
        if v in dist:
            best = min(best, dist[v] + 1)
    return best if best is math.inf else int(best)


def _diameter(g: Graph) -> int | float:
    if g.n == 0:
        return 0
    if not g.is_connected():
        return math.inf
    best = 0
    for s in range(g.n):
        dist = _bfs_dist(g, s)
        best = max(best, max(dist.values()))
    return best


def _max_flow(cap: list[list[int]], s: int, t: int) -> int:
    """Edmonds-Karp max flow on an adjacency-matrix network (small orders)."""
    order = len(cap)
    res = [row[:] for row in cap]
    total = 0
    while True:
        parent = [-1] * order
        parent[s] = s
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if u == t:
                break
            for v in range(order):
                if parent[v] < 0 and res[u][v] > 0:
                    parent[v] = u
                    queue.append(v)
        if parent[t] < 0:
            return total
        bottleneck = None
        v = t
        while v != s:
            u = parent[v]
            r = res[u][v]
            bottleneck = r if bottleneck is None else min(bottleneck, r)
            v = u
        v = t
        while v != s:
            u = parent[v]
            res[u][v] -= bottleneck
            res[v][u] += bottleneck
            v = u
        total += bottleneck


def edge_connectivity(g: Graph) -> int:
    """Smallest number of edges whose removal disconnects the graph.

    Zero for graphs on at most one vertex and for disconnected graphs.
    """
    n = g.n
    if n <= 1 or not g.is_connected():
        return 0
    cap = [[0] * n for _ in range(n)]
    for u, v in g.edges():
        cap[u][v] = 1
        cap[v][u] = 1
    return min(_max_flow(cap, 0, t) for t in range(1, n))


def vertex_connectivity(g: Graph) -> int:
    """Smallest number of vertices whose removal disconnects the graph.

    ``n - 1`` for complete graphs, zero for disconnected graphs and for
    graphs on at most one vertex.  Computed as the minimum over non-adjacent
    pairs of the vertex-capacitated max flow (vertex splitting).
    """
    n = g.n
    if n <= 1 or not g.is_connected():
        return 0
    nonadjacent = [
        (s, t) for s, t in combinations(range(n), 2) if not g.has_edge(s, t)
    ]
    if not nonadjacent:
        return n - 1
    big = n * n
    best = None
    for s, t in nonadjacent:
        # Split v into in-node 2v and out-node 2v+1 with unit capacity.
        cap = [[0] * (2 * n) for _ in range(2 * n)]
        for v in range(n):
            cap[2 * v][2 * v + 1] = big if v in (s, t) else 1
        for u, v in g.edges():
            cap[2 * u + 1][2 * v] = big
            cap[2 * v + 1][2 * u] = big
        flow = _max_flow(cap, 2 * s + 1, 2 * t)
        best = flow if best is None else min(best, flow)
    return best


def connectivity_profile(g: Graph) -> ConnectivityProfile:
    degs = g.degrees()
    regular = len(set(degs)) <= 1
    return ConnectivityProfile(
        is_connected=g.is_connected(),
        vertex_connectivity=vertex_connectivity(g),
        edge_connectivity=edge_connectivity(g),
        girth=_girth(g),
        diameter=_diameter(g),
        is_bipartite=_is_bipartite(g),
        is_regular=regular,
        regular_degree=degs[0] if (regular and g.n > 0) else None,
    )


# -- constructions ----------------------------------------------------------


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; the vertices of ``g2`` are shifted by ``g1.n``."""
    shift = g1.n
    masks = list(g1._nbr) + [mask << shift for mask in g2._nbr]
    return Graph._from_neighbor_masks(g1.n + g2.n, masks)


def join(g1: Graph, g2: Graph) -> Graph:
    """Graph join: disjoint union plus all edges between the two parts."""
    n1, n2 = g1.n, g2.n
    left_all = (1 << n1) - 1
    right_all = ((1 << n2) - 1) << n1
    masks = [mask | right_all for mask in g1._nbr]
    masks += [(mask << n1) | left_all for mask in g2._nbr]
    return Graph._from_neighbor_masks(n1 + n2, masks)


def _complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._from_neighbor_masks(n, [full ^ (1 << v) for v in range(n)])


def _path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def _complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _join_family(n: int, k: int, i: int) -> Graph:
    """Clique ``K_k`` joined to the disjoint union ``K_i + K_{n-k-i}``.

    The ``K_k`` vertices come first (``0..k-1``), then the ``K_i`` block,
    then the ``K_{n-k-i}`` block.
    """
    s = n - k - i
    if k < 1 or i < 1 or s < 1:
        raise ValueError(
            f"join family needs k >= 1, i >= 1 and n-k-i >= 1; "
            f"got n={n}, k={k}, i={i}"
        )
    return join(_complete(k), disjoint_union(_complete(i), _complete(s)))


_FAMILIES = {
    "complete": (1, lambda n: _complete(n)),
    "path": (1, lambda n: _path(n)),
    "cycle": (1, lambda n: _cycle(n)),
    "complete_bipartite": (2, lambda a, b: _complete_bipartite(a, b)),
    "join_family": (3, _join_family),
}


def family(name: str, *params: int) -> Graph:
    """Build a named parametric graph.

    Known families: ``complete(n)``, ``path(n)``, ``cycle(n)``,
    ``complete_bipartite(a, b)``, ``join_family(n, k, i)``.  Parameters must
    be positive integers (cycles need ``n >= 3``).
    """
    if name not in _FAMILIES:
        known = ", ".join(sorted(_FAMILIES))
        raise ValueError(f"unknown family {name!r}; known: {known}")
    arity, builder = _FAMILIES[name]
    if len(params) != arity:
        raise ValueError(f"family {name!r} takes {arity} parameter(s)")
    if any(p < 1 for p in params):
        raise ValueError(f"family {name!r} parameters must be positive")
    if name == "cycle" and params[0] < 3:
        raise ValueError("cycles need n >= 3")
    return builder(*params)


# -- induced-tree scans ------------------------------------------------------

#: Cap for the exponential induced-subtree scan.
MAX_TREE_SCAN_ORDER = 24


def _subset_is_tree(g: Graph, verts: tuple[int, ...], mask: int) -> bool:
    edges2 = sum((g.neighbor_mask(v) & mask).bit_count() for v in verts)
    if edges2 != 2 * (len(verts) - 1):
        return False
    # Correct edge count; still need connectivity.
    seen = 1 << verts[0]
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.neighbor_mask(v)
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def _subset_diameter(g: Graph, verts: tuple[int, ...], mask: int) -> int:
    best = 0
    for v in verts:
        dist = _bfs_dist(g, v, allowed=mask)
        best = max(best, max(dist.values()))
    return best


def max_induced_tree_diameter(g: Graph) -> int:
    """Largest diameter over all induced subtrees (exhaustive scan).

    Requires a connected graph with at most :data:`MAX_TREE_SCAN_ORDER`
    vertices; the scan over vertex subsets is exponential.  Returns 0 for
    the single-vertex graph.
    """
    if not g.is_connected():
        raise ValueError("induced-tree scan requires a connected graph")
    if g.n > MAX_TREE_SCAN_ORDER:
        raise CapacityError(
            f"induced-tree scan capped at n={MAX_TREE_SCAN_ORDER}, got {g.n}"
        )
    best = 0
    # Largest subsets first: a k-vertex tree has diameter <= k-1, so the
    # scan can stop as soon as remaining sizes cannot beat the best found.
    for size in range(g.n, 0, -1):
        if size - 1 <= best:
            break
        for verts in combinations(range(g.n), size):
            mask = 0
            for v in verts:
                mask |= 1 << v
            if _subset_is_tree(g, verts, mask):
                best = max(best, _subset_diameter(g, verts, mask))
    return best


def cycle_pendant_tree_diameter(g: Graph) -> int:
    """Largest diameter of a hanging tree rooted on the unique cycle.

    Defined for connected unicyclic graphs (``m == n``): repeatedly strip
    leaves to expose the cycle, then for each cycle vertex take the tree
    hanging at it (the component of that vertex after deleting the other
    cycle vertices, root included) and measure its diameter.  Returns 0 for
    a bare cycle.
    """
    if not g.is_connected() or g.m != g.n:
        raise ValueError("defined for connected unicyclic graphs only")
    # Strip leaves until only the cycle remains.
    alive = (1 << g.n) - 1
    deg = list(g.degrees())
    queue = deque(v for v in range(g.n) if deg[v] == 1)
    while queue:
        v = queue.popleft()
        alive &= ~(1 << v)
        for u in _bits(g.neighbor_mask(v) & alive):
            deg[u] -= 1
            if deg[u] == 1:
                queue.append(u)
    cycle_mask = alive
    best = 0
    for c in _bits(cycle_mask):
        allowed = (((1 << g.n) - 1) & ~cycle_mask) | (1 << c)
        dist = _bfs_dist(g, c, allowed=allowed)
        if len(dist) == 1:
            continue
        # Double BFS: farthest vertex from the root, then the tree diameter.
        far = max(dist, key=lambda v: (dist[v], v))
        dist2 = _bfs_dist(g, far, allowed=allowed)
        best = max(best, max(dist2.values()))
    return best
