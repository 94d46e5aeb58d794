"""Acceptance criteria 1-12.  A PASS/FAIL line per criterion is printed in the terminal summary."""
import math

import numpy as np
import pytest

from specpara.certificates import Status, certify_A1, certify_A2, certify_A3, certify_A4, certify_all
from specpara.galerkin import DEFAULT_SPEC, galerkin_mu3, neumann_spectrum
from specpara.geometry import HALF_PI, ParallelogramParams, PolarPoint, from_polar, perimeter
from specpara.numerics import bessel_j0_first_zero, constants, sym2_eigenvalues
from specpara.rayleigh_ritz import assemble_trial_A, lambda1_M, lambda2_L, matrix_L, matrix_M
from specpara.regions import coverage_scan, kroger_bound, target_scan

P2 = math.pi ** 2
SQRT2 = math.sqrt(2)


def random_params(n: int, seed: int) -> list[ParallelogramParams]:
    """Uniform in the quarter disk c >= 0, d > 0, c^2 + d^2 <= 1."""
    rng = np.random.default_rng(seed)
    r = np.sqrt(rng.uniform(1e-4, 1.0, n))
    theta = rng.uniform(1e-4, HALF_PI, n)
    return [from_polar(PolarPoint(float(a), float(b))) for a, b in zip(r, theta)]


@pytest.mark.criterion(1, "rectangle exactness at (0, 1/2), cutoff (16,16)")
def test_c01_rectangle_exactness():
    q = ParallelogramParams(0.0, 0.5)
    assert (DEFAULT_SPEC.max_mx, DEFAULT_SPEC.max_my) == (16, 16)
    vals = neumann_spectrum(q, DEFAULT_SPEC, 3).values
    assert np.allclose(vals, [0.0, P2, 4 * P2], atol=1e-10, rtol=0)
    target = vals[2] * perimeter(q) ** 2
    assert abs(target - 36 * P2) <= 1e-8 * 36 * P2


@pytest.mark.criterion(2, "5x5 trial matrix entries match the closed forms at 50 random params")
def test_c02_matrix_entries():
    for q in random_params(50, seed=2):
        c, d = q.c, q.d
        d2 = d * d
        expected = np.zeros((5, 5))
        expected[1, 1] = P2 * (1 + c * c / d2)
        expected[2, 2] = P2 / d2
        expected[1, 2] = expected[2, 1] = -8 * c / d2
        expected[3, 3] = P2 * (1 + c * c / d2) + P2 / d2
        expected[4, 4] = 4 * P2 * (1 + c * c / d2)
        expected[3, 4] = expected[4, 3] = -32 * SQRT2 * c / (3 * d2)
        rep = assemble_trial_A(q)
        scale = max(1.0, float(np.max(np.abs(expected))))
        assert np.max(np.abs(rep.A - expected)) <= 1e-12 * scale
        assert rep.block_residual <= 1e-12 * scale


@pytest.mark.criterion(3, "closed-form eigenvalues agree with the 2x2 solver; 4 pi^2 at (0, 1/2)")
def test_c03_closed_forms():
    for q in random_params(100, seed=3):
        l2 = sym2_eigenvalues(matrix_L(q))[1]
        m1 = sym2_eigenvalues(matrix_M(q))[0]
        assert abs(lambda2_L(q) - l2) <= 1e-12 * abs(l2)
        assert abs(lambda1_M(q) - m1) <= 1e-12 * abs(m1)
    q = ParallelogramParams(0.0, 0.5)
    assert abs(lambda2_L(q) - 4 * P2) <= 1e-12
    assert abs(lambda1_M(q) - 4 * P2) <= 1e-12


@pytest.mark.criterion(4, "lambda_1(L) <= lambda_1(M) at 10^4 random params")
def test_c04_ordering():
    for q in random_params(10_000, seed=4):
        l1 = sym2_eigenvalues(matrix_L(q))[0]
        m1 = sym2_eigenvalues(matrix_M(q))[0]
        assert l1 <= m1 + 1e-12 * max(1.0, abs(m1))


@pytest.mark.criterion(5, "c_star, r_star and j01 enclosures")
def test_c05_constants():
    k = constants()
    assert abs(k.c_star.lo - 0.4235) <= 5e-5 and abs(k.c_star.hi - 0.4235) <= 5e-5
    assert abs(k.r_star.lo - 0.6401) <= 5e-5 and abs(k.r_star.hi - 0.6401) <= 5e-5
    j = bessel_j0_first_zero()
    assert j.width <= 1e-12
    assert j.contains(2.404825557695773)


@pytest.mark.criterion(6, "footnote ratios 7.28761, 29.7613, 9.11554 and their certified bounds")
def test_c06_footnote_ratios():
    rep = certify_A2()
    for name, ref in (("ratio1_lt_pi2", 7.28761), ("ratio2_lt_4pi2", 29.7613), ("ratio3_lt_4pi2", 9.11554)):
        check = rep.check(name)
        assert check.status is Status.PASS_ENCLOSURE
        assert float(f"{check.enclosure.mid:.6g}") == ref
        assert check.enclosure.width <= 1e-4


@pytest.mark.criterion(7, "A1 and A3 identities PASS-EXACT with zero residual")
def test_c07_exact_certificates():
    a1, a3 = certify_A1(), certify_A3()
    for rep in (a1, a3):
        exact = [c for c in rep.checks if c.status is not Status.PASS_ENCLOSURE]
        assert exact and all(c.status is Status.PASS_EXACT and c.detail["residual"] == "0" for c in exact)
    for name in ("lhs_shift_coefficients", "factorization_at_pi4_0", "factorization_at_pi4_1", "p_shift_coefficients"):
        assert a1.check(name).status is Status.PASS_EXACT
    assert a3.check("h_factorization").status is Status.PASS_EXACT


@pytest.mark.criterion(8, "S anchors: S(1/2) = 0, S(r_star) ~ -1.81, S3''(r_star) ~ -22.28, signs, chain")
def test_c08_s_anchors():
    rep = certify_A4()
    s_half = rep.check("s_half_zero").enclosure
    assert abs(s_half.lo) <= 1e-10 and abs(s_half.hi) <= 1e-10
    s_star = rep.check("s_rstar_negative")
    assert s_star.status is Status.PASS_ENCLOSURE
    enc = s_star.enclosure
    assert -1.95 < enc.lo and enc.hi < -1.65
    assert abs(enc.mid - (-1.81)) < 0.005
    s3 = rep.check("s3_dd_rstar").enclosure
    assert abs(s3.lo + 22.28) <= 0.05 and abs(s3.hi + 22.28) <= 0.05
    for name in ("32768-207pi4", "81pi4-2048", "1152-9pi4"):
        assert rep.check(f"sign_{name}_positive").status is Status.PASS_ENCLOSURE
    assert rep.check("second_derivative_chain_positive").status is Status.PASS_ENCLOSURE


@pytest.mark.criterion(9, "2000x2000 grid covered by R1-R4")
def test_c09_coverage():
    rep = coverage_scan(2000, 2000)
    assert rep.n_uncovered == 0
    assert rep.tail_ok
    assert all(v > 0 for v in rep.counts.values())


@pytest.fixture(scope="module")
def scan_400():
    return target_scan(400, 400)


@pytest.mark.criterion(10, "400x400 scan: margin < 0 off the equality ball, max ratio <= 1 + 1e-9 at (0, 1/2)")
def test_c10_main_scan(scan_400):
    rows = scan_400.rows
    assert len(rows) == 400 * 400
    for row in rows:
        if math.hypot(row.r - 0.5, row.theta - HALF_PI) > 1e-3:
            assert row.margin < 0, row
    best = scan_400.argmax
    assert best.target_ratio <= 1 + 1e-9
    nearest = min(rows, key=lambda row: row.c ** 2 + (row.d - 0.5) ** 2)
    assert (best.i, best.j) == (nearest.i, nearest.j)


@pytest.mark.criterion(11, "Galerkin mu_3 <= Kroger bound at 400 sampled params")
def test_c11_kroger_sanity():
    for q in random_params(400, seed=11):
        assert galerkin_mu3(q) <= kroger_bound(q), q


@pytest.mark.criterion(12, "widened constants give UNDETERMINED, never FAIL")
def test_c12_widening():
    baseline = {(r.lemma, c.name): c.status for r in certify_all() for c in r.checks}
    assert all(st.passed for st in baseline.values())
    saw_undetermined = False
    for pi_r, j_r in ((1e-12, 0.0), (1e-8, 0.0), (1e-4, 1e-4), (1e-2, 0.0), (0.05, 0.0), (0.0, 0.05), (0.05, 0.05)):
        for rep in certify_all(constants(pi_radius=pi_r, j01_radius=j_r)):
            for c in rep.checks:
                assert c.status is not Status.FAIL, (pi_r, j_r, rep.lemma, c.name)
                if baseline[(rep.lemma, c.name)] is Status.PASS_EXACT:
                    assert c.status is Status.PASS_EXACT
                saw_undetermined |= c.status is Status.UNDETERMINED
    assert saw_undetermined
