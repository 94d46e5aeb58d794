"""Neumann eigenvalues of a parallelogram by Galerkin projection.

The shear x -> x + y c/d carries the rectangle [0, 1] x [0, d] onto the
parallelogram with unit Jacobian, so the Neumann Laplacian there is unitarily
equivalent to the operator of the form

    h[u] = int (1 + c^2/d^2)|u_x|^2 + |u_y|^2 - (2c/d) u_x u_y

on the rectangle.  Writing y = d*eta, every matrix entry in a tensor basis
a_m(x) b_n(eta) / sqrt(d) is a product of two 1D integrals on [0, 1]:

    K[m, k] = int a_m' a_k'        C[m, k] = int a_m' a_k

    A = (1 + c^2/d^2) Kx (x) I  +  I (x) Ky / d^2  -  (c/d^2) (Cx (x) Cy^T + Cx^T (x) Cy)

with (x) the Kronecker product in row-major (m-major) index order.  Both
available bases are L2-orthonormal, so the mass matrix is the identity and
every Ritz value is an upper bound for the matching eigenvalue.

``cosine``    a_0 = 1, a_m = sqrt(2) cos(m pi x): exact eigenfunctions of the
              rectangle, but under strong shear the conormal boundary condition
              makes the expansion converge slowly (Ritz values lock high).
``legendre``  a_m = sqrt(2m + 1) P_m(2x - 1): contains every polynomial in
              x + c*eta exactly, so it does not lock as d -> 0.

The operator commutes with the point reflection about the centre, which keeps
the parity of m + n; the matrix splits into two blocks that are solved
separately.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from specpara.errors import DomainError
from specpara.geometry import ParallelogramParams
from specpara.numerics.linalg import dense_sym_eigen

BASES = ("cosine", "legendre")
MAX_BASIS_SIZE = 10_000


@dataclass(frozen=True)
class GalerkinSpec:
    max_mx: int = 16
    max_my: int = 16
    basis: str = "cosine"

    def __post_init__(self):
        if self.max_mx < 2 or self.max_my < 2:
            raise DomainError(f"cutoffs must be >= 2, got ({self.max_mx}, {self.max_my})")
        if self.size > MAX_BASIS_SIZE:
            raise DomainError(f"basis size {self.size} exceeds {MAX_BASIS_SIZE}")
        if self.basis not in BASES:
            raise DomainError(f"unknown basis {self.basis!r}; choose from {BASES}")

    @property
    def size(self) -> int:
        return (self.max_mx + 1) * (self.max_my + 1)

    def index(self, m: int, n: int) -> int:
        return m * (self.max_my + 1) + n


DEFAULT_SPEC = GalerkinSpec(16, 16)
SPOT_SPEC = GalerkinSpec(32, 32)
# trial spaces whose smallest Ritz value is reported as "the" Galerkin mu3
SCAN_SPECS = (GalerkinSpec(10, 10, "cosine"), GalerkinSpec(12, 12, "legendre"))


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    spec: GalerkinSpec
    params: ParallelogramParams

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)


def sin_cos_integral(m: int, k: int) -> float:
    """``int_0^1 sin(m pi x) cos(k pi x) dx``."""
    if m == k or (m + k) % 2 == 0:
        return 0.0
    return 2.0 * m / (math.pi * (m * m - k * k))


@lru_cache(maxsize=None)
def _cosine_1d(n: int) -> tuple[np.ndarray, np.ndarray]:
    amp = [1.0] + [math.sqrt(2.0)] * n
    K = np.diag([(m * math.pi) ** 2 for m in range(n + 1)])
    C = np.zeros((n + 1, n + 1))
    for m in range(1, n + 1):
        for k in range(n + 1):
            # a_m' = -amp_m m pi sin(m pi x)
            C[m, k] = -amp[m] * amp[k] * m * math.pi * sin_cos_integral(m, k)
    return K, C


@lru_cache(maxsize=None)
def _legendre_1d(n: int) -> tuple[np.ndarray, np.ndarray]:
    # p_m' = 2 sqrt(2m+1) * sum_{j < m, m - j odd} sqrt(2j+1) p_j
    K = np.zeros((n + 1, n + 1))
    C = np.zeros((n + 1, n + 1))
    for m in range(n + 1):
        for k in range(n + 1):
            w = 2.0 * math.sqrt((2 * m + 1) * (2 * k + 1))
            if (m - k) % 2 == 0:
                s = min(m, k)
                K[m, k] = w * s * (s + 1)
            elif k < m:
                C[m, k] = w
    return K, C


def basis_matrices(basis: str, n: int) -> tuple[np.ndarray, np.ndarray]:
    """1D stiffness ``K`` and derivative-coupling ``C`` matrices for modes 0..n."""
    K, C = (_cosine_1d if basis == "cosine" else _legendre_1d)(n)
    return K.copy(), C.copy()


def _basis_1d(basis: str, n: int):
    return (_cosine_1d if basis == "cosine" else _legendre_1d)(n)


@lru_cache(maxsize=None)
def _form_pieces(s: GalerkinSpec) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``Kx (x) I``, ``I (x) Ky`` and the symmetric cross term, c/d independent."""
    Kx, Cx = _basis_1d(s.basis, s.max_mx)
    Ky, Cy = _basis_1d(s.basis, s.max_my)
    Ix, Iy = np.eye(s.max_mx + 1), np.eye(s.max_my + 1)
    cross = np.kron(Cx, Cy.T) + np.kron(Cx.T, Cy)
    return np.kron(Kx, Iy), np.kron(Ix, Ky), cross


def _combine(pieces, q: ParallelogramParams) -> np.ndarray:
    kx, ky, cross = pieces
    c, d2 = q.c, q.d * q.d
    A = (1.0 + c * c / d2) * kx + ky / d2
    if c != 0.0:
        A -= (c / d2) * cross
    return A


def form_matrix(q: ParallelogramParams, s: GalerkinSpec = DEFAULT_SPEC) -> np.ndarray:
    """Matrix of the transformed form in the orthonormal tensor basis of ``s``."""
    return _combine(_form_pieces(s), q)


@lru_cache(maxsize=None)
def _parity_blocks(max_mx: int, max_my: int) -> tuple[np.ndarray, np.ndarray]:
    m, n = np.divmod(np.arange((max_mx + 1) * (max_my + 1)), max_my + 1)
    even = (m + n) % 2 == 0
    return np.flatnonzero(even), np.flatnonzero(~even)


@lru_cache(maxsize=None)
def _block_pieces(s: GalerkinSpec):
    pieces = _form_pieces(s)
    return [tuple(P[np.ix_(b, b)] for P in pieces) for b in _parity_blocks(s.max_mx, s.max_my) if b.size]


def neumann_spectrum(
    q: ParallelogramParams,
    s: GalerkinSpec = DEFAULT_SPEC,
    k: int = 3,
    method: str = "jacobi",
) -> Spectrum:
    """First ``k`` Ritz values (upper approximations of mu_1..mu_k)."""
    if not 1 <= k <= s.size:
        raise DomainError(f"k={k} must lie in [1, {s.size}] for this basis")
    values = []
    for pieces in _block_pieces(s):
        sub = _combine(pieces, q)
        values.extend(dense_sym_eigen(sub, min(k, sub.shape[0]), method=method))
    values.sort()
    return Spectrum(tuple(float(v) for v in values[:k]), s, q)


def galerkin_mu3(
    q: ParallelogramParams,
    specs: tuple[GalerkinSpec, ...] = SCAN_SPECS,
    method: str = "lapack",
) -> float:
    """Smallest third Ritz value over several trial spaces.

    Each Ritz value bounds mu_3 from above, so the minimum does too; pairing
    the cosine and Legendre bases keeps the estimate sharp at all shears.
    """
    return min(neumann_spectrum(q, s, 3, method=method).values[2] for s in specs)


def rectangle_exact_eigenvalues(d: float, k: int) -> list[float]:
    """First ``k`` Neumann eigenvalues of [0, 1] x [0, d]: pi^2 (m^2 + n^2/d^2)."""
    if not 0 < d <= 1:
        raise DomainError(f"d must lie in (0, 1], got {d}")
    p2 = math.pi ** 2
    vals = sorted(p2 * (m * m + n * n / (d * d)) for m in range(k) for n in range(k))
    return vals[:k]
