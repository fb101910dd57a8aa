"""Eigenvalue kernel selection.

Two interchangeable backends compute eigenvalues of dense symmetric real
matrices:

* ``compiled`` -- a Cython cyclic-Jacobi kernel, fastest for the very small
  matrices that exhaustive sweeps generate in bulk;
* ``python``   -- ``numpy.linalg.eigvalsh`` (LAPACK).

The environment variable ``SPREADLAB_BACKEND`` picks one explicitly
(``compiled`` / ``python``); the default ``auto`` uses the compiled kernel
when the extension imported and falls back to NumPy otherwise.  Matrices
larger than ``_JACOBI_MAX_ORDER`` always go to LAPACK, where blocked
algorithms win.
"""

import importlib
import os

import numpy as np

from . import _pyeig

#: Orders above this are routed to LAPACK even on the compiled backend.
#: Measured crossover (see benchmarks/bench_kernels.py): the Jacobi kernel
#: wins below order ~9, LAPACK wins above.
_JACOBI_MAX_ORDER = 9

_requested = os.environ.get("SPREADLAB_BACKEND", "auto").strip().lower()
if _requested not in {"auto", "compiled", "python"}:
    raise RuntimeError(
        "SPREADLAB_BACKEND must be one of 'auto', 'compiled', 'python'; "
        f"got {_requested!r}"
    )

_cyjacobi = None
if _requested in {"auto", "compiled"}:
    try:
        _cyjacobi = importlib.import_module("._cyjacobi", __name__)
    except ImportError:
        _cyjacobi = None
        if _requested == "compiled":
            raise RuntimeError(
                "SPREADLAB_BACKEND=compiled but the compiled kernel "
                "failed to import (was the extension built?)"
            ) from None

#: Backend actually in use for small orders: "compiled" or "python".
BACKEND = "compiled" if _cyjacobi is not None else "python"


def eigvalsh_descending(matrix: np.ndarray, *, backend: str | None = None) -> np.ndarray:
    """Eigenvalues of a dense symmetric matrix, sorted nonincreasing.

    ``backend`` forces ``"compiled"`` or ``"python"`` for this one call
    (used by the benchmark and the backend-agreement tests); the default
    follows the module-level selection.
    """
    which = BACKEND if backend is None else backend
    if which == "compiled" and _cyjacobi is None:
        raise RuntimeError("compiled kernel requested but not available")
    n = matrix.shape[0]
    if which == "compiled" and n <= _JACOBI_MAX_ORDER:
        work = np.array(matrix, dtype=np.float64, order="C", copy=True)
        out = np.empty(n, dtype=np.float64)
        _cyjacobi.jacobi_eigvalsh(work, out)
        return out
    return _pyeig.eigvalsh_descending(np.asarray(matrix, dtype=np.float64))
