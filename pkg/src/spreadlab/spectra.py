"""Symmetric eigensolves, spectral summaries, and the line/signless shift.

Matrices are assembled over the integers and lifted to float64 exactly once,
inside :func:`sym_eigenvalues`.  All spectra are returned sorted
nonincreasing, matching the index convention used throughout: ``values[0]``
is the largest eigenvalue.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import CapacityError, Graph
from .transforms import line_graph

__all__ = [
    "GROUP_TOL",
    "MAX_EIG_ORDER",
    "ShiftCheck",
    "SpectralSummary",
    "adjacency_matrix",
    "laplacian_matrix",
    "signless_laplacian_matrix",
    "signless_line_shift_check",
    "spectral_summary",
    "sym_eigenvalues",
]

#: Hard cap on the order accepted by :func:`sym_eigenvalues`.
MAX_EIG_ORDER = 4096

#: Tolerance used when grouping/comparing individual eigenvalues.
GROUP_TOL = 1e-7


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Dense 0/1 adjacency matrix (int64)."""
    return g.adjacency_matrix()


def laplacian_matrix(g: Graph) -> np.ndarray:
    """Laplacian ``D - A`` (int64)."""
    a = g.adjacency_matrix()
    return np.diag(np.asarray(g.degrees(), dtype=np.int64)) - a


def signless_laplacian_matrix(g: Graph) -> np.ndarray:
    """Signless Laplacian ``D + A`` (int64)."""
    a = g.adjacency_matrix()
    return np.diag(np.asarray(g.degrees(), dtype=np.int64)) + a


def sym_eigenvalues(matrix: np.ndarray, *, backend: str | None = None) -> np.ndarray:
    """Eigenvalues of a dense symmetric real matrix, sorted nonincreasing.

    The input must be square, exactly symmetric, and contain only finite
    entries; orders above :data:`MAX_EIG_ORDER` are rejected.  Integer input
    is lifted to float64 here, once.
    """
    m = np.asarray(matrix)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] > MAX_EIG_ORDER:
        raise CapacityError(
            f"eigensolve capped at order {MAX_EIG_ORDER}, got {m.shape[0]}"
        )
    if m.dtype.kind not in "iuf":
        raise ValueError(f"expected a real matrix, got dtype {m.dtype}")
    if m.dtype.kind == "f" and not np.isfinite(m).all():
        raise ValueError("matrix contains non-finite entries")
    if m.shape[0] and not (m == m.T).all():
        raise ValueError("matrix is not exactly symmetric")
    return _kernels.eigvalsh_descending(np.asarray(m, dtype=np.float64), backend=backend)


@dataclass(frozen=True)
class SpectralSummary:
    """Adjacency / Laplacian / signless-Laplacian spectra and their spreads.

    ``line_spread`` is the spread of the line graph's adjacency spectrum
    (``None`` on edgeless graphs, whose line graph has no vertices);
    ``algebraic_connectivity`` is the second-smallest Laplacian eigenvalue
    (0.0 for graphs with fewer than two vertices).
    """

    adjacency: np.ndarray
    laplacian: np.ndarray
    signless: np.ndarray
    spread: float
    laplacian_spread: float
    q_spread: float
    line_spread: float | None
    algebraic_connectivity: float


def _spread(values: np.ndarray) -> float:
    return float(values[0] - values[-1]) if len(values) else 0.0


def spectral_summary(g: Graph, *, backend: str | None = None) -> SpectralSummary:
    """Compute all three base spectra plus the line-graph spread."""
    adj = sym_eigenvalues(adjacency_matrix(g), backend=backend)
    lap = sym_eigenvalues(laplacian_matrix(g), backend=backend)
    sig = sym_eigenvalues(signless_laplacian_matrix(g), backend=backend)
    if g.m > 0:
        lg, _ = line_graph(g)
        line = sym_eigenvalues(adjacency_matrix(lg), backend=backend)
        line_spread = _spread(line)
    else:
        line_spread = None
    return SpectralSummary(
        adjacency=adj,
        laplacian=lap,
        signless=sig,
        spread=_spread(adj),
        laplacian_spread=float(lap[0] - lap[-2]) if g.n >= 2 else 0.0,
        q_spread=_spread(sig),
        line_spread=line_spread,
        algebraic_connectivity=float(lap[-2]) if g.n >= 2 else 0.0,
    )


@dataclass(frozen=True)
class ShiftCheck:
    """Result of the signless-Laplacian / line-graph shift identity check."""

    ok: bool
    max_deviation: float
    compared: int


def signless_line_shift_check(
    g: Graph, *, tol: float = GROUP_TOL, backend: str | None = None
) -> ShiftCheck:
    """Check the shift identity between Q(G) and the line graph's spectrum.

    With both spectra sorted nonincreasing: ``q_i`` equals ``lambda_i + 2``
    (line-graph adjacency eigenvalue) for ``i`` up to ``min(n, m)``; past
    that, surplus line eigenvalues equal -2 (when ``m > n``) and surplus
    signless eigenvalues equal 0 (when ``n > m``).
    """
    q = sym_eigenvalues(signless_laplacian_matrix(g), backend=backend)
    if g.m > 0:
        lg, _ = line_graph(g)
        lam = sym_eigenvalues(adjacency_matrix(lg), backend=backend)
    else:
        lam = np.empty(0)
    n, m = g.n, len(lam)
    head = min(n, m)
    dev = 0.0
    for i in range(head):
        dev = max(dev, abs(float(q[i]) - (float(lam[i]) + 2.0)))
    for i in range(head, m):
        dev = max(dev, abs(float(lam[i]) + 2.0))
    for i in range(head, n):
        dev = max(dev, abs(float(q[i])))
    return ShiftCheck(ok=bool(dev <= tol), max_deviation=dev, compared=max(n, m))
