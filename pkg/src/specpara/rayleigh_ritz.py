"""The five-function trial space and the matrices L and M.

The trial functions are the rectangle eigenfunctions with index pairs
(0,0), (1,0), (0,1), (1,1), (2,0).  The form restricted to them is
block-diagonal, diag(0, L, M), so

    mu_3 <= lambda_3(A) = lambda_2(L (+) M) = min(lambda_2(L), lambda_1(M)),

the last step because lambda_1(L) <= lambda_1(M) for every c >= 0, d > 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from specpara.galerkin import GalerkinSpec, form_matrix
from specpara.geometry import ParallelogramParams
from specpara.numerics.interval import Interval
from specpara.numerics.linalg import SymMatrix2, sym2_eigenvalues

TRIAL_INDICES = ((0, 0), (1, 0), (0, 1), (1, 1), (2, 0))
_TRIAL_SPEC = GalerkinSpec(2, 2)
SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class TrialMatrixReport:
    L: SymMatrix2
    M: SymMatrix2
    A: np.ndarray
    lambda2_L: float
    lambda1_M: float
    bound: float
    block_residual: float


def _entries(q: ParallelogramParams, pi):
    if pi is None:
        c, d, p2, root2 = q.c, q.d, math.pi ** 2, SQRT2
    else:
        c, d = Interval.point(q.c), Interval.point(q.d)
        p2, root2 = pi * pi, Interval.point(2).sqrt()
    d2 = d * d
    shear = 1 + c * c / d2
    return c, d2, p2, root2, shear


def matrix_L(q: ParallelogramParams, pi: Interval | None = None) -> SymMatrix2:
    """L = [[pi^2 (1 + c^2/d^2), -8c/d^2], [-8c/d^2, pi^2/d^2]]; intervals if ``pi`` is given."""
    c, d2, p2, _, shear = _entries(q, pi)
    return SymMatrix2(p2 * shear, -8 * c / d2, p2 / d2)


def matrix_M(q: ParallelogramParams, pi: Interval | None = None) -> SymMatrix2:
    """M = [[pi^2 (1 + c^2/d^2) + pi^2/d^2, -32 sqrt2 c/(3 d^2)], [., 4 pi^2 (1 + c^2/d^2)]]."""
    c, d2, p2, root2, shear = _entries(q, pi)
    return SymMatrix2(p2 * shear + p2 / d2, -32 * root2 * c / (3 * d2), 4 * p2 * shear)


def lambda2_L(q: ParallelogramParams) -> float:
    c2, d2 = q.c * q.c, q.d * q.d
    p2 = math.pi ** 2
    return (p2 * (c2 + d2 + 1) + math.sqrt(p2 * p2 * (c2 + d2 - 1) ** 2 + 256 * c2)) / (2 * d2)


def lambda1_M(q: ParallelogramParams) -> float:
    c2, d2 = q.c * q.c, q.d * q.d
    p2 = math.pi ** 2
    return (3 * p2 * (5 * c2 + 5 * d2 + 1)
            - math.sqrt(9 * p2 * p2 * (3 * c2 + 3 * d2 - 1) ** 2 + 8192 * c2)) / (6 * d2)


def assemble_trial_A(q: ParallelogramParams) -> TrialMatrixReport:
    full = form_matrix(q, _TRIAL_SPEC)
    idx = [_TRIAL_SPEC.index(m, n) for m, n in TRIAL_INDICES]
    A = full[np.ix_(idx, idx)]
    L, M = matrix_L(q), matrix_M(q)
    expected = np.zeros((5, 5))
    expected[1:3, 1:3] = L.as_array()
    expected[3:5, 3:5] = M.as_array()
    l2, m1 = lambda2_L(q), lambda1_M(q)
    return TrialMatrixReport(
        L=L,
        M=M,
        A=A,
        lambda2_L=l2,
        lambda1_M=m1,
        bound=min(l2, m1),
        block_residual=float(np.max(np.abs(A - expected))),
    )


def mu3_upper_bound(q: ParallelogramParams) -> float:
    """lambda_2(L (+) M) = min(lambda_2(L), lambda_1(M))."""
    return min(lambda2_L(q), lambda1_M(q))


def lowest_eigenvalues(q: ParallelogramParams) -> tuple[float, float]:
    """``(lambda_1(L), lambda_1(M))`` from the 2x2 solver."""
    return sym2_eigenvalues(matrix_L(q))[0], sym2_eigenvalues(matrix_M(q))[0]
