"""Certified arithmetic kernels: intervals, exact polynomials, eigensolvers, constants."""
from specpara.numerics.bessel import bessel_j0_first_zero, j0
from specpara.numerics.constants import Constants, constants, derive_constants
from specpara.numerics.interval import Certainty, Interval, certified_lt
from specpara.numerics.linalg import (
    BACKEND,
    SymMatrix2,
    dense_sym_eigen,
    jacobi_diagonalize,
    sym2_eigenvalues,
)
from specpara.numerics.polynomial import IntervalPolynomial, RationalPolynomial

__all__ = [
    "BACKEND",
    "Certainty",
    "Constants",
    "Interval",
    "IntervalPolynomial",
    "RationalPolynomial",
    "SymMatrix2",
    "bessel_j0_first_zero",
    "certified_lt",
    "constants",
    "dense_sym_eigen",
    "derive_constants",
    "j0",
    "jacobi_diagonalize",
    "sym2_eigenvalues",
]
