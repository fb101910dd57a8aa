# cython: language_level=3
"""Cyclic Jacobi eigenvalue kernel for small dense symmetric matrices.

Exhaustive sweeps spend nearly all their time extracting eigenvalues of many
thousands of small symmetric matrices (orders up to a few dozen).  In that
regime a tight Jacobi iteration beats the LAPACK round trip; larger orders
are routed to LAPACK by the dispatching wrapper in ``spreadlab._kernels``.
"""

from libc.math cimport fabs, sqrt

# Convergence: stop once the off-diagonal Frobenius norm falls below
# _STOP_REL * (1 + ||A||_F).  Jacobi converges quadratically, so the sweep
# budget is generous; hitting it means the input was pathological.
cdef double _STOP_REL = 1e-13
cdef int _MAX_SWEEPS = 60


def jacobi_eigvalsh(double[:, ::1] a, double[::1] out):
    """Overwrite ``out`` with the eigenvalues of symmetric ``a``, descending.

    ``a`` is used as the working matrix and destroyed.  Raises
    ``RuntimeError`` if the off-diagonal mass has not collapsed after the
    sweep budget (the message reports the remaining off-diagonal norm).
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, i, j, k
    cdef double frob, off, stop, app, aqq, apq, aip, aiq
    cdef double theta, t, c, s, val
    cdef int sweep

    if a.shape[1] != n or out.shape[0] != n:
        raise ValueError("matrix and output shapes do not agree")
    if n == 0:
        return
    if n == 1:
        out[0] = a[0, 0]
        return

    frob = 0.0
    for i in range(n):
        for j in range(n):
            frob += a[i, j] * a[i, j]
    frob = sqrt(frob)
    stop = _STOP_REL * (1.0 + frob)

    for sweep in range(_MAX_SWEEPS):
        off = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off += a[i, j] * a[i, j]
        off = sqrt(2.0 * off)
        if off <= stop:
            break

        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                # Smaller-angle root of t^2 + 2t*theta - 1 = 0; overflow in
                # theta*theta degrades gracefully to t = 0 (entry absorbed).
                if theta >= 0.0:
                    t = 1.0 / (theta + sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c

                for i in range(n):
                    if i != p and i != q:
                        aip = a[i, p]
                        aiq = a[i, q]
                        a[i, p] = c * aip - s * aiq
                        a[p, i] = a[i, p]
                        a[i, q] = c * aiq + s * aip
                        a[q, i] = a[i, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
    else:
        off = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off += a[i, j] * a[i, j]
        off = sqrt(2.0 * off)
        raise RuntimeError(
            "jacobi_eigvalsh: no convergence after %d sweeps "
            "(off-diagonal norm %.3e)" % (_MAX_SWEEPS, off)
        )

    # Insertion sort of the diagonal into out, descending.
    for i in range(n):
        out[i] = a[i, i]
    for i in range(1, n):
        val = out[i]
        k = i
        while k > 0 and out[k - 1] < val:
            out[k] = out[k - 1]
            k -= 1
        out[k] = val
