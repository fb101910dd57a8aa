"""Partition quotients of symmetric matrices and interlacing checks.

The quotient of a symmetric matrix over a vertex partition averages each
block of rows/columns.  Its eigenvalues are real (the quotient is similar to
a symmetric matrix via the block-size scaling) and interlace the eigenvalues
of the full matrix; checking that interlacing on derived graphs is one of
the sweep's structural invariants.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Graph
from .spectra import signless_laplacian_matrix, sym_eigenvalues

__all__ = [
    "INTERLACE_TOL",
    "QuotientMatrix",
    "edge_interlacing_check",
    "interlacing_check",
    "quotient_eigenvalues",
    "quotient_matrix",
    "total_vertex_edge_blocks",
]

#: Default tolerance for interlacing comparisons.
INTERLACE_TOL = 1e-7


@dataclass(frozen=True)
class QuotientMatrix:
    """Row-averaged block quotient of a symmetric matrix.

    ``entries[a][b]`` is the average over rows in block ``a`` of the summed
    entries across block ``b``.  ``equitable`` records whether every row of
    each block has the same block-sum (the quotient then captures the
    spectrum restriction exactly instead of merely interlacing).
    """

    entries: np.ndarray
    source_order: int
    block_sizes: tuple[int, ...]
    equitable: bool


def _validate_blocks(order: int, blocks: Sequence[Sequence[int]]) -> list[list[int]]:
    cleaned = [list(b) for b in blocks]
    if not cleaned or any(not b for b in cleaned):
        raise ValueError("partition blocks must be nonempty")
    flat = [v for b in cleaned for v in b]
    if sorted(flat) != list(range(order)):
        raise ValueError(
            f"blocks must partition 0..{order - 1} exactly (got {sorted(flat)})"
        )
    return cleaned


def quotient_matrix(matrix: np.ndarray, blocks: Sequence[Sequence[int]]) -> QuotientMatrix:
    """Block quotient of a symmetric matrix over a vertex partition."""
    m = np.asarray(matrix)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] and not (m == m.T).all():
        raise ValueError("matrix is not exactly symmetric")
    order = m.shape[0]
    parts = _validate_blocks(order, blocks)
    k = len(parts)
    exact = m.dtype.kind in "iu"
    entries = np.zeros((k, k), dtype=np.float64)
    equitable = True
    for a, rows in enumerate(parts):
        for b, cols in enumerate(parts):
            block = m[np.ix_(rows, cols)]
            row_sums = block.sum(axis=1)
            entries[a, b] = row_sums.mean()
            if exact:
                if np.any(row_sums != row_sums[0]):
                    equitable = False
            elif np.any(np.abs(row_sums - row_sums[0]) > 1e-9):
                equitable = False
    return QuotientMatrix(
        entries=entries,
        source_order=order,
        block_sizes=tuple(len(b) for b in parts),
        equitable=equitable,
    )


def quotient_eigenvalues(qm: QuotientMatrix, *, backend: str | None = None) -> np.ndarray:
    """Eigenvalues of a quotient matrix, sorted nonincreasing.

    The quotient itself is not symmetric, but scaling by the square roots of
    the block sizes produces a similar symmetric matrix, so the spectrum is
    real and can go through the symmetric solver.
    """
    sizes = np.asarray(qm.block_sizes, dtype=np.float64)
    scale = np.sqrt(sizes)
    sym = qm.entries * (scale[:, None] / scale[None, :])
    sym = (sym + sym.T) / 2.0  # remove roundoff asymmetry before the solver
    return sym_eigenvalues(sym, backend=backend)


def interlacing_check(
    quotient_eigs: np.ndarray,
    full_eigs: np.ndarray,
    *,
    tol: float = INTERLACE_TOL,
) -> bool:
    """Cauchy interlacing: with both spectra nonincreasing and ``k <= n``,
    ``full[i] >= quot[i] >= full[n - k + i]`` for every ``i`` (0-based)."""
    quot = np.asarray(quotient_eigs, dtype=np.float64)
    full = np.asarray(full_eigs, dtype=np.float64)
    k, n = len(quot), len(full)
    if k > n:
        raise ValueError(f"quotient has more eigenvalues ({k}) than the matrix ({n})")
    for i in range(k):
        if quot[i] > full[i] + tol:
            return False
        if quot[i] < full[n - k + i] - tol:
            return False
    return True


def edge_interlacing_check(
    g: Graph, e: tuple[int, int], *, tol: float = INTERLACE_TOL, backend: str | None = None
) -> bool:
    """Signless-Laplacian interlacing under deletion of one edge.

    With ``q`` the spectrum of ``Q(g)`` and ``s`` the spectrum of
    ``Q(g - e)``, both nonincreasing of length ``n``, the deleted-edge chain
    requires ``0 <= s[n-1]`` and ``q[i+1] <= s[i] <= q[i]`` in 1-based terms,
    i.e. the two spectra weave.
    """
    i, j = e
    h = g.without_edge(i, j)
    q = sym_eigenvalues(signless_laplacian_matrix(g), backend=backend)
    s = sym_eigenvalues(signless_laplacian_matrix(h), backend=backend)
    n = g.n
    if s[n - 1] < -tol:
        return False
    for idx in range(n):
        if s[idx] > q[idx] + tol:
            return False
        if idx + 1 < n and s[idx] < q[idx + 1] - tol:
            return False
    return True


def total_vertex_edge_blocks(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The (original vertices, edge vertices) partition of the total graph."""
    if g.m == 0:
        raise ValueError("the edge block would be empty (graph has no edges)")
    n, m = g.n, g.m
    return tuple(range(n)), tuple(range(n, n + m))
