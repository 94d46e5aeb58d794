import json
import math
from fractions import Fraction

import mpmath
import pytest
import sympy as sp

from specpara.certificates import (
    A1_P_SHIFT,
    A1_SHIFT,
    Status,
    a1_lhs,
    a2_ratios,
    certify_A1,
    certify_A2,
    certify_A3,
    certify_A4,
    certify_all,
    g_polynomial,
    h_polynomial,
    s3_dd,
    s_value,
    subdivide,
    transcription_checks,
)
from specpara.numerics.constants import constants

mpmath.mp.dps = 40
r, s, P = sp.symbols("r s P")
J01 = mpmath.besseljzero(0, 1)
C_STAR = 2 * (2 * J01 + mpmath.pi) ** 2 / (9 * mpmath.pi ** 2) - 1
R_STAR = mpmath.sqrt(1 - C_STAR ** 2) - mpmath.sqrt(mpmath.mpf(1) / 4 - C_STAR ** 2)


def _coeffs(expr, var):
    return [Fraction(str(c)) for c in reversed(sp.Poly(sp.expand(expr), var).all_coeffs())]


def test_a1_identities_against_sympy():
    lead = 9 * (r ** 2 + sp.Rational(3, 4)) ** 2 - 2 * (r ** 2 + 1) * (1 + r) ** 2
    assert _coeffs(lead.subs(r, s + sp.Rational(1, 2)), s) == [Fraction(c) for c in A1_SHIFT]
    lhs = (81 * P * (r ** 2 + sp.Rational(3, 4)) ** 4
           - 36 * P * (r ** 2 + sp.Rational(3, 4)) ** 2 * (r ** 2 + 1) * (1 + r) ** 2
           + 4 * P * (r ** 2 + 1) ** 2 * (1 + r) ** 4
           - 4 * (P * (r ** 2 - 1) ** 2 + 160 * r ** 2 - 64 * r ** 4 - 36) * (1 + r) ** 4)
    rhs = (2 * r - 1) / 256 * (4096 * (1 + r) ** 4 * (2 * r - 3) * (2 * r + 1) * (2 * r + 3)
                               + P * (6 * r - 1) * (4 * r ** 2 - 8 * r + 9) * (12 * r ** 2 + 8 * r + 17) * (20 * r ** 2 + 8 * r + 9))
    assert sp.expand(lhs - rhs) == 0
    assert _coeffs(lhs.subs(P, 7), r) == list(a1_lhs(7).coeffs)
    p = (128 * (1 + r) ** 4 * (2 * r - 3) * (2 * r + 1) * (2 * r + 3)
         + 3 * (6 * r - 1) * (4 * r ** 2 - 8 * r + 9) * (12 * r ** 2 + 8 * r + 17) * (20 * r ** 2 + 8 * r + 9))
    assert _coeffs(p.subs(r, s + sp.Rational(1, 2)), s) == list(A1_P_SHIFT)


def test_a3_identity_against_sympy():
    H = 9 * (5 * r ** 2 + 1) * (1 + r) ** 2 - 4 * (1 + r) ** 4 * (1 + r ** 2) - 81 * r ** 2
    assert sp.expand(H - (1 - 2 * r) * (2 * r + 5) * (r ** 4 + 2 * r ** 3 - 7 * r ** 2 + 2 * r + 1)) == 0
    assert _coeffs(H, r) == list(h_polynomial().coeffs)


def test_exact_reports_have_zero_residual():
    for rep in (certify_A1(), certify_A3()):
        assert rep.overall == "PASS"
        for c in rep.checks:
            if c.status is Status.PASS_EXACT:
                assert c.detail["residual"] == "0"


def _g_mp(x):
    pi4, c2 = mpmath.pi ** 4, C_STAR ** 2
    return (324 * pi4 * (1 - c2) * (5 * x ** 2 + 1) * (1 + x) ** 2 - 144 * pi4 * (1 + x ** 2) * (1 + x) ** 4
            - 2916 * pi4 * x ** 2 * (1 - c2) ** 2 + 8192 * c2 * (1 + x) ** 4)


def test_a2_against_quadrature():
    G = g_polynomial(constants())
    assert G(0).lo - 1e-9 <= float(_g_mp(0)) <= G(0).hi + 1e-9
    assert G(0).mid == pytest.approx(13342.41, abs=0.01)
    ratios = a2_ratios()
    for (a, b), enc in zip(((0, 0.5), (0.5, 0.75), (0.75, 1)), ratios):
        num = mpmath.quad(lambda x: mpmath.diff(_g_mp, x) ** 2, [a, b])
        den = mpmath.quad(lambda x: _g_mp(x) ** 2, [a, b])
        ref = float(num / den)
        assert enc.lo - 1e-9 <= ref <= enc.hi + 1e-9
        assert enc.width <= 1e-4


def test_a2_report():
    rep = certify_A2()
    assert rep.overall == "PASS"
    for name, approx in (("ratio1_lt_pi2", "7.28761"), ("ratio2_lt_4pi2", "29.7613"), ("ratio3_lt_4pi2", "9.11554")):
        c = rep.check(name)
        assert c.status is Status.PASS_ENCLOSURE and c.detail["approx"] == approx


def _s_mp(x):
    pi2 = mpmath.pi ** 2
    return (3 * pi2 * (5 * x ** 2 + 1)
            - mpmath.sqrt(9 * pi2 ** 2 * (3 * x ** 2 - 1) ** 2 - 128 * (16 * x ** 4 - 40 * x ** 2 + 9))
            - 27 * pi2 * (x ** 2 + mpmath.mpf(3) / 4) ** 2 / (2 * (x + 1) ** 2))


def test_a4_anchors_against_mpmath():
    k = constants()
    v = s_value(k.r_star, k.pi2)
    assert v.lo - 1e-12 <= float(_s_mp(R_STAR)) <= v.hi + 1e-12
    assert round(v.mid, 2) == -1.81
    d2 = s3_dd(k.r_star, k.pi2)
    ref = mpmath.diff(lambda x: -mpmath.sqrt(9 * mpmath.pi ** 4 * (3 * x ** 2 - 1) ** 2
                                             - 128 * (16 * x ** 4 - 40 * x ** 2 + 9)), R_STAR, 2)
    assert d2.lo - 1e-9 <= float(ref) <= d2.hi + 1e-9
    assert abs(float(_s_mp(mpmath.mpf(1) / 2))) < 1e-30


def test_s_is_graph_of_g_on_the_r2_boundary():
    from specpara.regions import eval_g, r2_threshold

    for x in (0.52, 0.58, 0.63):
        assert s_value(x) == pytest.approx(eval_g(x, r2_threshold(x)), abs=1e-10)


def test_transcription_checks_pass():
    assert all(c.status is Status.PASS_ENCLOSURE for c in transcription_checks())


def test_a4_report():
    rep = certify_A4()
    assert rep.overall == "PASS"
    for name in ("32768-207pi4", "81pi4-2048", "1152-9pi4"):
        assert rep.check(f"sign_{name}_positive").status is Status.PASS_ENCLOSURE
    assert rep.check("s1_dd_half_exact").status is Status.PASS_EXACT
    assert rep.check("s_negative_on_half_to_rstar").status is Status.PASS_ENCLOSURE


def test_certify_all_and_json_schema():
    reports = certify_all()
    assert [r.lemma for r in reports] == ["A1", "A2", "A3", "A4", "regions"]
    assert all(r.overall == "PASS" for r in reports)
    data = json.loads(reports[1].to_json())
    assert set(data) == {"lemma", "checks", "overall"}
    first = data["checks"][0]
    assert {"name", "status", "enclosure"} <= set(first)
    assert first["status"] in {"PASS-EXACT", "PASS-ENCLOSURE", "FAIL", "UNDETERMINED"}


def test_monotone_under_tightening():
    """Tighter constants never turn a pass into a failure."""
    loose = {(r.lemma, c.name): c.status for r in certify_all(constants(pi_radius=1e-9)) for c in r.checks}
    tight = {(r.lemma, c.name): c.status for r in certify_all() for c in r.checks}
    for key, st in loose.items():
        if st.passed:
            assert tight[key].passed


def test_subdivide_covers_range():
    pieces = subdivide(Fraction(1, 2), Fraction(3, 4), 8)
    assert pieces[0].lo <= 0.5 and pieces[-1].hi >= 0.75
    for a, b in zip(pieces, pieces[1:]):
        assert a.hi >= b.lo
