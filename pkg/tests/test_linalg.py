import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from specpara.errors import ContractViolation, DomainError
from specpara.numerics import Interval, SymMatrix2, dense_sym_eigen, jacobi_diagonalize, sym2_eigenvalues
from specpara.numerics.linalg import BACKEND, KERNELS

BACKENDS = sorted(KERNELS)


def test_compiled_kernel_is_built_and_default():
    assert "compiled" in KERNELS
    assert BACKEND == "compiled"


def test_sym2_examples():
    assert sym2_eigenvalues(SymMatrix2(1.0, 0.0, 2.0)) == (1.0, 2.0)
    assert sym2_eigenvalues(SymMatrix2(0.0, 1.0, 0.0)) == (-1.0, 1.0)
    p2 = math.pi ** 2
    lo, hi = sym2_eigenvalues(SymMatrix2(p2, 0.0, 4 * p2))
    assert lo == pytest.approx(p2, abs=1e-12) and hi == pytest.approx(4 * p2, abs=1e-12)


def test_sym2_interval_encloses_float():
    m = SymMatrix2(Interval.point(3.0), Interval.point(-1.25), Interval.point(7.5))
    lo, hi = sym2_eigenvalues(m)
    ref = np.linalg.eigvalsh(np.array([[3.0, -1.25], [-1.25, 7.5]]))
    assert abs(lo.mid - ref[0]) < 1e-14 and lo.width < 1e-13
    assert abs(hi.mid - ref[1]) < 1e-14 and hi.width < 1e-13


def test_sym2_interval_double_eigenvalue():
    p2 = Interval.point(math.pi ** 2)
    lo, hi = sym2_eigenvalues(SymMatrix2(p2, Interval.point(0.0), p2))
    assert lo.contains(math.pi ** 2) and hi.contains(math.pi ** 2)


@pytest.mark.parametrize("backend", BACKENDS)
def test_dense_examples(backend):
    assert np.allclose(jacobi_diagonalize(np.eye(3), backend).values, [1, 1, 1])
    assert np.allclose(jacobi_diagonalize(np.diag([3.0, 1.0, 2.0]), backend).values, [1, 2, 3])


def test_rejects_nonsymmetric():
    with pytest.raises(ContractViolation):
        dense_sym_eigen(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(ContractViolation):
        dense_sym_eigen(np.ones((2, 3)))
    with pytest.raises(DomainError):
        dense_sym_eigen(np.eye(2), k=3)
    with pytest.raises(DomainError):
        jacobi_diagonalize(np.eye(2), backend="fortran")


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("n", [2, 5, 17, 40])
def test_jacobi_matches_lapack(backend, n):
    rng = np.random.default_rng(n)
    a = rng.normal(size=(n, n))
    a = a + a.T
    res = jacobi_diagonalize(a, backend)
    assert np.allclose(res.values, np.linalg.eigvalsh(a), atol=1e-12 * np.linalg.norm(a))
    assert np.all(np.diff(res.values) >= 0)
    assert res.off_norm <= 1e-12 * res.norm


def test_backends_agree_exactly():
    rng = np.random.default_rng(3)
    a = rng.normal(size=(30, 30))
    a = a + a.T
    vals = [jacobi_diagonalize(a, b) for b in BACKENDS]
    for v in vals[1:]:
        assert np.allclose(v.values, vals[0].values, rtol=0, atol=1e-12)
        assert v.sweeps == vals[0].sweeps


def test_lapack_subset_matches_jacobi():
    rng = np.random.default_rng(4)
    a = rng.normal(size=(25, 25))
    a = a @ a.T
    assert np.allclose(dense_sym_eigen(a, 4, "lapack"), dense_sym_eigen(a, 4, "jacobi"), atol=1e-11)


@settings(max_examples=300, deadline=None)
@given(st.floats(-1e3, 1e3), st.floats(-1e3, 1e3), st.floats(-1e3, 1e3))
def test_dense_agrees_with_sym2(a, b, c):
    m = SymMatrix2(a, b, c)
    ref = sym2_eigenvalues(m)
    got = dense_sym_eigen(m.as_array())
    assert got[0] <= got[1]
    assert abs(got[0] - ref[0]) <= 1e-12 * max(1.0, abs(a) + abs(b) + abs(c))
    assert abs(got[1] - ref[1]) <= 1e-12 * max(1.0, abs(a) + abs(b) + abs(c))
