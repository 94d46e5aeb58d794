"""Compiled vs pure-Python Jacobi kernels on Galerkin parity blocks.

    python benchmarks/bench_jacobi.py [--sizes 4 8 12 16] [--repeat 3]

LAPACK (scipy ``eigh``) is timed alongside as a reference point.
"""
from __future__ import annotations

import argparse
import time

import numpy as np
from scipy.linalg import eigh

from specpara.galerkin import GalerkinSpec, _parity_blocks, form_matrix
from specpara.geometry import ParallelogramParams
from specpara.numerics.linalg import KERNELS, jacobi_diagonalize


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[4, 8, 12, 16])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    q = ParallelogramParams(0.3, 0.6)
    backends = sorted(KERNELS)
    print(f"backends available: {', '.join(backends)}")
    header = f"{'cutoff':>6} {'n':>5}" + "".join(f" {b + ' [ms]':>15}" for b in backends) + f" {'lapack [ms]':>12} {'speedup':>8}"
    print(header)
    for cut in args.sizes:
        spec = GalerkinSpec(cut, cut)
        block = _parity_blocks(cut, cut)[0]
        A = form_matrix(q, spec)[np.ix_(block, block)]
        ref = eigh(A, eigvals_only=True)
        row = {}
        for b in backends:
            res = jacobi_diagonalize(A, backend=b)
            assert np.allclose(res.values, ref, rtol=1e-10, atol=1e-9), b
            row[b] = best_of(lambda b=b: jacobi_diagonalize(A, backend=b), args.repeat) * 1e3
        lap = best_of(lambda: eigh(A, eigvals_only=True), args.repeat) * 1e3
        speed = row["python"] / row["compiled"] if "compiled" in row else float("nan")
        print(f"{cut:>6} {A.shape[0]:>5}" + "".join(f" {row[b]:>15.3f}" for b in backends)
              + f" {lap:>12.3f} {speed:>8.1f}x")


if __name__ == "__main__":
    main()
