"""Symmetric eigenvalue solvers: 2x2 closed form and dense cyclic Jacobi.

The Jacobi sweep kernel is compiled (Cython) when the extension was built;
otherwise the pure-Python kernel is used.  ``SPECPARA_PURE_PYTHON=1`` forces
the fallback.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Union

import numpy as np

from specpara.errors import ContractViolation, DomainError
from specpara.numerics import _jacobi_py
from specpara.numerics.interval import Interval

try:
    from specpara.numerics import _jacobi_ext
except ImportError:  # extension not built
    _jacobi_ext = None

KERNELS = {"python": _jacobi_py.jacobi_sweeps}
if _jacobi_ext is not None:
    KERNELS["compiled"] = _jacobi_ext.jacobi_sweeps

if _jacobi_ext is not None and not os.environ.get("SPECPARA_PURE_PYTHON"):
    BACKEND = "compiled"
else:
    BACKEND = "python"

Scalar = Union[float, Interval]

# off-diagonal residual target, relative to the Frobenius norm of the input
JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100


@dataclass(frozen=True)
class SymMatrix2:
    a11: Scalar
    a12: Scalar
    a22: Scalar

    def as_array(self) -> np.ndarray:
        f = lambda v: v.mid if isinstance(v, Interval) else float(v)
        return np.array([[f(self.a11), f(self.a12)], [f(self.a12), f(self.a22)]])

    def eigenvalues(self):
        return sym2_eigenvalues(self)


def sym2_eigenvalues(m: SymMatrix2):
    """Ascending eigenvalues ``(lam1, lam2)`` of a symmetric 2x2 matrix.

    Uses ``(tr -+ sqrt((a11 - a22)^2 + 4 a12^2)) / 2``; the discriminant is a
    sum of squares, so it never goes negative through cancellation.  Works on
    floats and on intervals.
    """
    a11, a12, a22 = m.a11, m.a12, m.a22
    if any(isinstance(v, Interval) for v in (a11, a12, a22)):
        a11, a12, a22 = (Interval.point(v) for v in (a11, a12, a22))
        s = (a11 - a22).sqr() + 4 * a12.sqr()
        # outward rounding of 0 + 0 dips below zero; a sum of squares cannot
        disc = Interval(max(0.0, s.lo), s.hi).sqrt()
    else:
        disc = math.sqrt((a11 - a22) ** 2 + 4.0 * a12 * a12)
    tr = a11 + a22
    return (tr - disc) / 2, (tr + disc) / 2


@dataclass(frozen=True)
class JacobiResult:
    values: np.ndarray  # ascending
    off_norm: float  # Frobenius norm of the off-diagonal part after the last sweep
    norm: float  # Frobenius norm of the input
    sweeps: int
    backend: str


def _check_symmetric(m: np.ndarray, rtol: float = 1e-12) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ContractViolation(f"expected a square matrix, got shape {m.shape}")
    scale = max(float(np.max(np.abs(m))) if m.size else 0.0, np.finfo(float).tiny)
    if m.size and float(np.max(np.abs(m - m.T))) > rtol * scale:
        raise ContractViolation("matrix is not symmetric within 1e-12 relative tolerance")
    return m


def jacobi_diagonalize(m, backend: str | None = None) -> JacobiResult:
    """Cyclic Jacobi diagonalisation with the row-major pivot order."""
    a = np.array(_check_symmetric(m), dtype=np.float64, order="C", copy=True)
    backend = backend or BACKEND
    try:
        kernel = KERNELS[backend]
    except KeyError:
        raise DomainError(f"Jacobi backend {backend!r} unavailable; have {sorted(KERNELS)}") from None
    norm = float(np.linalg.norm(a))
    if a.shape[0] <= 1:
        return JacobiResult(np.diag(a).copy(), 0.0, norm, 0, backend)
    sweeps, off = kernel(a, JACOBI_TOL * norm, JACOBI_MAX_SWEEPS)
    if off > 1e-12 * norm:
        raise ArithmeticError(f"Jacobi did not converge in {sweeps} sweeps (off-norm {off:.3e})")
    return JacobiResult(np.sort(np.diag(a)), off, norm, sweeps, backend)


def dense_sym_eigen(m, k: int | None = None, method: str = "jacobi") -> np.ndarray:
    """First ``k`` eigenvalues of a dense symmetric matrix, ascending.

    ``method="jacobi"`` is the reference solver.  ``method="lapack"`` computes
    only the requested eigenvalues through LAPACK ``dsyevr``; grid scans use it
    for throughput and the test-suite checks it against Jacobi.
    """
    m = _check_symmetric(m)
    n = m.shape[0]
    k = n if k is None else k
    if not 0 <= k <= n:
        raise DomainError(f"requested {k} eigenvalues of a {n}x{n} matrix")
    if k == 0:
        return np.empty(0)
    if method == "jacobi":
        return jacobi_diagonalize(m).values[:k]
    if method == "lapack":
        from scipy.linalg import eigh

        return eigh(m, eigvals_only=True, subset_by_index=[0, k - 1], check_finite=False)
    raise DomainError(f"unknown eigensolver method {method!r}")
