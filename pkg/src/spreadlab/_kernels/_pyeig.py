"""Pure-NumPy eigenvalue backend (LAPACK via ``numpy.linalg``)."""

import numpy as np


def eigvalsh_descending(matrix: np.ndarray) -> np.ndarray:
    """Eigenvalues of a dense symmetric matrix, sorted nonincreasing."""
    return np.linalg.eigvalsh(matrix)[::-1].copy()
