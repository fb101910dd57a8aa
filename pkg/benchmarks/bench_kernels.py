"""Timing comparison of the two eigenvalue backends.

Runs both kernels (Cython cyclic Jacobi vs numpy.linalg.eigvalsh) over a
range of matrix orders and prints per-call microseconds plus the ratio.
This is where the _JACOBI_MAX_ORDER crossover in spreadlab._kernels comes
from: rerun after touching the kernel and move the cutoff if the crossover
shifted.

The compiled column calls the raw Cython routine directly so orders past
the dispatch cutoff still exercise it (the public eigvalsh_descending would
silently route them to LAPACK).

Usage:
    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --orders 4 8 16 --repeat 2000
"""

import argparse
import time

import numpy as np

from spreadlab._kernels import BACKEND, _cyjacobi, eigvalsh_descending
from spreadlab._kernels._pyeig import eigvalsh_descending as py_eig


def random_symmetric(n: int, rng: np.random.Generator) -> np.ndarray:
    a = rng.standard_normal((n, n))
    return (a + a.T) / 2.0


def time_call(fn, mats, repeat: int) -> float:
    """Best-of-3 mean microseconds per call over the matrix pool."""
    best = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        for i in range(repeat):
            fn(mats[i % len(mats)])
        dt = time.perf_counter() - t0
        best = min(best, dt / repeat * 1e6)
    return best


def run_compiled(mat: np.ndarray) -> np.ndarray:
    work = np.array(mat, dtype=np.float64, order="C", copy=True)
    out = np.empty(mat.shape[0], dtype=np.float64)
    _cyjacobi.jacobi_eigvalsh(work, out)
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--orders", type=int, nargs="+",
                    default=[2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 24, 32])
    ap.add_argument("--repeat", type=int, default=4000,
                    help="calls per timing loop (default 4000)")
    ap.add_argument("--pool", type=int, default=32,
                    help="distinct random matrices cycled through (default 32)")
    ap.add_argument("--seed", type=int, default=20240901)
    args = ap.parse_args(argv)

    if BACKEND != "compiled":
        print("compiled kernel not available; nothing to compare "
              "(build the extension, or unset SPREADLAB_BACKEND)")
        return 1

    rng = np.random.default_rng(args.seed)
    print(f"{'order':>5}  {'jacobi us':>10}  {'lapack us':>10}  "
          f"{'jacobi/lapack':>13}")
    for n in args.orders:
        mats = [random_symmetric(n, rng) for _ in range(args.pool)]
        # correctness guard before trusting the timing
        for mat in mats[:4]:
            d = np.abs(run_compiled(mat) - py_eig(mat)).max()
            if d > 1e-9 * max(1.0, float(np.abs(mat).max())) * n:
                raise AssertionError(f"backend disagreement {d:g} at order {n}")
        t_jac = time_call(run_compiled, mats, args.repeat)
        t_lap = time_call(py_eig, mats, args.repeat)
        print(f"{n:>5}  {t_jac:>10.2f}  {t_lap:>10.2f}  {t_jac / t_lap:>13.2f}")

    # sanity: the dispatcher itself, at a typical sweep order
    mats6 = [random_symmetric(6, rng) for _ in range(args.pool)]
    t_auto = time_call(eigvalsh_descending, mats6, args.repeat)
    print(f"\ndispatcher at order 6: {t_auto:.2f} us/call")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
