"""Machine checks of the four auxiliary inequalities behind the region argument.

A1  positivity of the polynomial that controls the R2 comparison for r > 1/2
A2  positivity of G on (0, 1] through three integral-ratio (Wirtinger type) bounds
A3  positivity of H on (0, 1/2) through its factorisation
A4  negativity of S on (1/2, r_star] through convexity

Polynomial identities are checked in exact rational arithmetic and carry a
zero residual.  Everything that involves pi, j01, c_star or r_star is checked
on interval enclosures; an enclosure too wide to decide gives UNDETERMINED,
never FAIL.
"""
from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from specpara.errors import DomainError
from specpara.numerics.constants import Constants, constants
from specpara.numerics.interval import Certainty, Interval, certified_lt, sqrt
from specpara.numerics.linalg import sym2_eigenvalues
from specpara.numerics.polynomial import IntervalPolynomial, RationalPolynomial

HALF = Fraction(1, 2)
SAMPLE_POINTS = 1024
SUBINTERVALS = 64
FD_STEP = 1e-5
FD_RTOL = 1e-5


class Status(str, enum.Enum):
    PASS_EXACT = "PASS-EXACT"
    PASS_ENCLOSURE = "PASS-ENCLOSURE"
    FAIL = "FAIL"
    UNDETERMINED = "UNDETERMINED"

    @property
    def passed(self) -> bool:
        return self in (Status.PASS_EXACT, Status.PASS_ENCLOSURE)


@dataclass(frozen=True)
class Check:
    name: str
    status: Status
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status.passed

    @property
    def enclosure(self) -> Interval | None:
        enc = self.detail.get("enclosure")
        return Interval(*enc) if enc is not None else None

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status.value, **self.detail}


@dataclass(frozen=True)
class CertificateReport:
    lemma: str
    checks: tuple[Check, ...]

    @property
    def overall(self) -> str:
        return overall_status(c.status for c in self.checks)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"lemma": self.lemma, "checks": [c.to_dict() for c in self.checks], "overall": self.overall}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def overall_status(statuses: Iterable[Status]) -> str:
    statuses = list(statuses)
    if any(s is Status.FAIL for s in statuses):
        return "FAIL"
    if any(s is Status.UNDETERMINED for s in statuses):
        return "UNDETERMINED"
    return "PASS"


# -- check constructors ------------------------------------------------------

def _poly_detail(p: RationalPolynomial) -> dict:
    if p.is_zero():
        return {"residual": "0"}
    k = next(i for i, c in enumerate(p.coeffs) if c)
    return {"residual": str(max(abs(c) for c in p.coeffs)), "offending_coefficient": {"degree": k, "value": str(p.coeffs[k])}}


def _exact(name: str, residual, **detail) -> Check:
    """PASS-EXACT iff the rational residual (number or polynomial) is literally zero."""
    if isinstance(residual, RationalPolynomial):
        info = _poly_detail(residual)
        ok = residual.is_zero()
    else:
        residual = Fraction(residual)
        info = {"residual": str(residual)}
        ok = residual == 0
    return Check(name, Status.PASS_EXACT if ok else Status.FAIL, {**info, **detail})


def _exact_holds(name: str, holds: bool, **detail) -> Check:
    """An exact rational predicate; the residual counts violations."""
    return Check(name, Status.PASS_EXACT if holds else Status.FAIL, {"residual": "0" if holds else "1", **detail})


def _to_status(cert: Certainty) -> Status:
    return {Certainty.TRUE: Status.PASS_ENCLOSURE, Certainty.FALSE: Status.FAIL}.get(cert, Status.UNDETERMINED)


def _enclosed(name: str, cert: Certainty, enclosure: Interval, **detail) -> Check:
    return Check(name, _to_status(cert), {"enclosure": enclosure.as_list(), "width": enclosure.width, **detail})


def combine(certs: Iterable[Certainty]) -> Certainty:
    """Conjunction of tri-state facts."""
    out = Certainty.TRUE
    for c in certs:
        if c is Certainty.FALSE:
            return Certainty.FALSE
        if c is Certainty.UNDETERMINED:
            out = Certainty.UNDETERMINED
    return out


def within(x: Interval, lo: float, hi: float) -> Certainty:
    """Is the enclosed value inside ``[lo, hi]``?"""
    if lo <= x.lo and x.hi <= hi:
        return Certainty.TRUE
    if x.hi < lo or x.lo > hi:
        return Certainty.FALSE
    return Certainty.UNDETERMINED


def _guarded(name: str, fn: Callable[[], Check]) -> Check:
    try:
        return fn()
    except (DomainError, ZeroDivisionError) as exc:
        return Check(name, Status.UNDETERMINED, {"error": str(exc)})


def _from_conclusion(name: str, premises: Iterable[Check], note: str) -> Check:
    statuses = [p.status for p in premises]
    summary = overall_status(statuses)
    status = {"PASS": Status.PASS_ENCLOSURE, "FAIL": Status.FAIL}.get(summary, Status.UNDETERMINED)
    return Check(name, status, {"premises": summary, "note": note})


def _anchor(name: str, x: Interval, value: float, tol: float) -> Check:
    return _enclosed(name, within(x, value - tol, value + tol), x, expected=value, tolerance=tol)


def subdivide(lo, hi, n: int = SUBINTERVALS) -> list[Interval]:
    """``n`` closed pieces covering ``[lo, hi]``; endpoints may be intervals."""
    lo, hi = Interval.point(lo), Interval.point(hi)
    step = (hi - lo) / n
    pieces = []
    for k in range(n):
        a = lo + step * k if k else lo
        b = lo + step * (k + 1) if k + 1 < n else hi
        pieces.append(Interval(a.lo, b.hi))
    return pieces


def interior_samples(lo, hi, n: int = SAMPLE_POINTS) -> list[Fraction]:
    """``n`` equispaced rationals strictly inside ``(lo, hi)``."""
    lo, hi = Fraction(lo), Fraction(hi)
    return [lo + (hi - lo) * k / (n + 1) for k in range(1, n + 1)]


X = RationalPolynomial.x()


def _poly(*coeffs) -> RationalPolynomial:
    return RationalPolynomial(Fraction(c) for c in coeffs)


# -- A1 ----------------------------------------------------------------------

A1_SHIFT = (Fraction(27, 8), 6, 14, 10, 7)
A1_P_SHIFT = tuple(32 * c for c in (162, 1269, 2502, 3759, 3680, 3136, 1552, 572))


def a1_lhs(pi4) -> RationalPolynomial:
    """Cleared-denominator form of the squared R2 comparison, pi^4 replaced by ``pi4``."""
    pi4 = Fraction(pi4)
    q = X ** 2 + Fraction(3, 4)
    r2p1 = X ** 2 + 1
    op = 1 + X
    return (81 * pi4 * q ** 4 - 36 * pi4 * q ** 2 * r2p1 * op ** 2 + 4 * pi4 * r2p1 ** 2 * op ** 4
            - 4 * (pi4 * (X ** 2 - 1) ** 2 + 160 * X ** 2 - 64 * X ** 4 - 36) * op ** 4)


def _a1_quartic_factors() -> tuple[RationalPolynomial, RationalPolynomial]:
    rational = 4096 * (1 + X) ** 4 * (2 * X - 3) * (2 * X + 1) * (2 * X + 3)
    pi_part = (6 * X - 1) * _poly(9, -8, 4) * _poly(17, 8, 12) * _poly(9, 8, 20)
    return rational, pi_part


def a1_factored(pi4) -> RationalPolynomial:
    rational, pi_part = _a1_quartic_factors()
    return (2 * X - 1) * Fraction(1, 256) * (rational + Fraction(pi4) * pi_part)


def a1_p() -> RationalPolynomial:
    rational, pi_part = _a1_quartic_factors()
    return Fraction(1, 32) * rational + 3 * pi_part


def certify_A1(consts: Constants | None = None) -> CertificateReport:
    consts = consts or constants()
    checks = []

    lead = 9 * (X ** 2 + Fraction(3, 4)) ** 2 - 2 * (X ** 2 + 1) * (1 + X) ** 2
    shifted = lead.shift_compose(HALF)
    checks.append(_exact("lhs_shift_coefficients", shifted - _poly(*A1_SHIFT),
                         coefficients=[str(c) for c in shifted.coeffs]))
    checks.append(_exact_holds("lhs_shift_coefficients_positive", all(c > 0 for c in shifted.coeffs)))

    # both sides are affine in pi^4, so agreement at two values of pi^4 is agreement
    # as polynomials in (r, pi^4); a third value guards the construction
    for pi4 in (0, 1, 96):
        checks.append(_exact(f"factorization_at_pi4_{pi4}", a1_lhs(pi4) - a1_factored(pi4)))

    p = a1_p()
    checks.append(_exact("p_shift_coefficients", p.shift_compose(HALF) - _poly(*A1_P_SHIFT)))
    checks.append(_exact("p_at_half", p(HALF) - 5184))

    for name, quad in (("4r2-8r+9", _poly(9, -8, 4)), ("12r2+8r+17", _poly(17, 8, 12)), ("20r2+8r+9", _poly(9, 8, 20))):
        c0, c1, c2 = quad.coeffs
        disc = c1 * c1 - 4 * c2 * c0
        checks.append(_exact_holds(f"discriminant_negative_{name}", disc < 0 and c2 > 0, discriminant=str(disc)))
    checks.append(_exact_holds("factor_6r-1_positive_for_r_gt_half", (6 * X - 1)(HALF) > 0))

    checks.append(_guarded("pi4_gt_96", lambda: _enclosed("pi4_gt_96", certified_lt(96, consts.pi4), consts.pi4)))
    return CertificateReport("A1", tuple(checks))


# -- A2 ----------------------------------------------------------------------

A2_INTERVALS = ((Fraction(0), HALF), (HALF, Fraction(3, 4)), (Fraction(3, 4), Fraction(1)))
A2_FOOTNOTE = (7.28761, 29.7613, 9.11554)


def g_polynomial(consts: Constants) -> IntervalPolynomial:
    pi4 = consts.pi4
    c2 = consts.c_star.sqr()
    one_minus = 1 - c2
    op = 1 + X
    return ((5 * X ** 2 + 1) * op ** 2 * (324 * pi4 * one_minus)
            - (1 + X ** 2) * op ** 4 * (144 * pi4)
            - X ** 2 * (2916 * pi4 * one_minus.sqr())
            + op ** 4 * (8192 * c2))


def a2_ratios(consts: Constants | None = None) -> list[Interval]:
    G = g_polynomial(consts or constants())
    num, den = G.derivative().square(), G.square()
    return [num.definite_integral(a, b) / den.definite_integral(a, b) for a, b in A2_INTERVALS]


def _sig5_tol(v: float) -> float:
    return 0.5 * 10.0 ** (math.floor(math.log10(abs(v))) - 4)


def certify_A2(consts: Constants | None = None) -> CertificateReport:
    consts = consts or constants()
    checks = []
    G = g_polynomial(consts)
    g0 = G(0)
    checks.append(_enclosed("G0_positive", certified_lt(0, g0), g0))

    num, den = G.derivative().square(), G.square()
    bounds = (consts.pi2, 4 * consts.pi2, 4 * consts.pi2)
    labels = ("pi2", "4pi2", "4pi2")
    for i, ((a, b), bound, label, fn) in enumerate(zip(A2_INTERVALS, bounds, labels, A2_FOOTNOTE), start=1):
        def ratio_check(a=a, b=b, bound=bound, label=label, i=i):
            ratio = num.definite_integral(a, b) / den.definite_integral(a, b)
            return _enclosed(f"ratio{i}_lt_{label}", certified_lt(ratio, bound), ratio,
                             interval=[str(a), str(b)], approx=f"{ratio.mid:.6g}")
        check = _guarded(f"ratio{i}_lt_{label}", ratio_check)
        checks.append(check)
        if check.enclosure is not None:
            checks.append(_anchor(f"ratio{i}_approx_{fn}", check.enclosure, fn, _sig5_tol(fn)))

        # int_a^b (G^2)' = G(b)^2 - G(a)^2 must hold between enclosures
        lhs = den.derivative().definite_integral(a, b)
        rhs = G(b).sqr() - G(a).sqr()
        consistent = not (lhs.hi < rhs.lo or rhs.hi < lhs.lo)
        checks.append(Check(f"fundamental_theorem_interval{i}",
                            Status.PASS_ENCLOSURE if consistent else Status.FAIL,
                            {"enclosure": lhs.as_list(), "reference": rhs.as_list(), "width": lhs.width}))
    return CertificateReport("A2", tuple(checks))


# -- A3 ----------------------------------------------------------------------

def h_polynomial() -> RationalPolynomial:
    op = 1 + X
    return 9 * (5 * X ** 2 + 1) * op ** 2 - 4 * op ** 4 * (1 + X ** 2) - 81 * X ** 2


H_QUARTIC = _poly(1, 2, -7, 2, 1)
H_QUADRATIC = _poly(1, 2, -7)


def _qsqrt2_mul(a, b):
    """Product in Q(sqrt 2); elements are pairs (p, q) meaning p + q sqrt 2."""
    return (a[0] * b[0] + 2 * a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def certify_A3(consts: Constants | None = None) -> CertificateReport:
    checks = []
    H = h_polynomial()
    product = (1 - 2 * X) * (2 * X + 5) * H_QUARTIC
    checks.append(_exact("h_factorization", H - product))
    checks.append(_exact("h_at_zero", H(0) - 5))
    checks.append(_exact("h_at_half", H(HALF)))
    checks.append(_exact_holds("quartic_excess_nonnegative_coefficients",
                               all(c >= 0 for c in (H_QUARTIC - H_QUADRATIC).coeffs)))

    # -7 (r + (2 sqrt2 - 1)/7)(r - (1 + 2 sqrt2)/7) in Q(sqrt 2)
    u = (Fraction(-1, 7), Fraction(2, 7))
    v = (Fraction(-1, 7), Fraction(-2, 7))
    uv = _qsqrt2_mul(u, v)
    root_sum = (u[0] + v[0], u[1] + v[1])
    # -7 (r^2 + (u + v) r + u v) must equal -7 r^2 + 2 r + 1
    residual = [-7 * uv[0] - 1, -7 * uv[1], -7 * root_sum[0] - 2, -7 * root_sum[1]]
    checks.append(_exact("quadratic_root_factorization", max(abs(x) for x in residual)))

    def root_check():
        root = (1 + 2 * Interval.point(2).sqrt()) / 7
        return _enclosed("root_gt_half", certified_lt(Fraction(1, 2), root), root, approx=f"{root.mid:.6g}")
    checks.append(_guarded("root_gt_half", root_check))

    samples = interior_samples(0, HALF)
    bad = [r for r in samples if H(r) <= 0]
    checks.append(_exact_holds("h_positive_at_samples", not bad, samples=len(samples),
                               first_violation=str(bad[0]) if bad else None))
    quad_pieces = [H_QUADRATIC(piece) for piece in subdivide(0, HALF)]
    hull = quad_pieces[0]
    for q in quad_pieces[1:]:
        hull = hull.hull(q)
    checks.append(_enclosed("quadratic_positive_on_subintervals",
                            combine(certified_lt(0, q) for q in quad_pieces), hull, pieces=len(quad_pieces)))
    return CertificateReport("A3", tuple(checks))


# -- A4 ----------------------------------------------------------------------
# The functions below take floats or intervals for both r and pi^2.

def s_radicand(r, pi2):
    return 9 * pi2 * pi2 * (3 * r * r - 1) ** 2 - 128 * (16 * r ** 4 - 40 * r * r + 9)


def s1(r, pi2):
    return -27 * pi2 * (r * r + 0.75) ** 2 / (2 * (r + 1) ** 2)


def s2(r, pi2):
    return 3 * pi2 * (5 * r * r + 1)


def s3(r, pi2):
    return -sqrt(s_radicand(r, pi2))


def s_value(r, pi2=math.pi ** 2):
    """S = S1 + S2 + S3; negative on (1/2, r_star], zero at 1/2."""
    return s1(r, pi2) + s2(r, pi2) + s3(r, pi2)


def s1_dd(r, pi2):
    return -27 * pi2 * (16 * r ** 4 + 64 * r ** 3 + 96 * r * r - 48 * r + 51) / (16 * (r + 1) ** 4)


def s1_ddd(r, pi2):
    return -567 * pi2 * (4 * r - 3) / (4 * (r + 1) ** 5)


def s3_dd(r, pi2):
    pi4 = pi2 * pi2
    D = s_radicand(r, pi2)
    u = 3 * r * r - 1
    num = (-486 * pi4 * pi4 * u ** 3
           - 131072 * (64 * r ** 6 - 240 * r ** 4 + 108 * r * r - 45)
           + 2304 * pi4 * (288 * r ** 6 - 684 * r ** 4 + 291 * r * r - 47))
    return num / (D * sqrt(D))


def s3_ddd(r, pi2):
    pi4 = pi2 * pi2
    D = s_radicand(r, pi2)
    num = -1536 * (32768 - 207 * pi4) * r * ((81 * pi4 - 2048) * r ** 4 + 1152 - 9 * pi4)
    return num / (D * D * sqrt(D))


def s_dd(r, pi2):
    return s1_dd(r, pi2) + 30 * pi2 + s3_dd(r, pi2)


def _fd_check(name: str, closed: float, approx: float) -> Check:
    rel = abs(closed - approx) / max(abs(closed), 1e-300)
    status = Status.PASS_ENCLOSURE if rel <= FD_RTOL else Status.FAIL
    return Check(name, status, {"residual": rel, "tolerance": FD_RTOL, "closed_form": closed, "difference": approx})


def transcription_checks(points=(0.52, 0.56, 0.6, 0.63)) -> list[Check]:
    """Closed-form derivatives against central differences of the functions they differentiate."""
    p2, h = math.pi ** 2, FD_STEP
    checks = []
    second = lambda f, r: (f(r + h, p2) - 2 * f(r, p2) + f(r - h, p2)) / (h * h)
    first = lambda f, r: (f(r + h, p2) - f(r - h, p2)) / (2 * h)
    for r in points:
        checks.append(_fd_check(f"s1_dd_matches_difference_at_{r}", s1_dd(r, p2), second(s1, r)))
        checks.append(_fd_check(f"s3_dd_matches_difference_at_{r}", s3_dd(r, p2), second(s3, r)))
        checks.append(_fd_check(f"s1_ddd_matches_difference_at_{r}", s1_ddd(r, p2), first(s1_dd, r)))
        checks.append(_fd_check(f"s3_ddd_matches_difference_at_{r}", s3_ddd(r, p2), first(s3_dd, r)))
    return checks


def certify_A4(consts: Constants | None = None) -> CertificateReport:
    consts = consts or constants()
    pi2, pi4, r_star = consts.pi2, consts.pi4, consts.r_star
    checks = []

    # S(1/2) in units of pi^2: the radicand's rational part 16/16 - 40/4 + 9 vanishes
    checks.append(_exact("s_half_radicand_rational_part", Fraction(16, 16) - Fraction(40, 4) + 9))
    checks.append(_exact("s_half_exact", Fraction(-27, 2) * Fraction(1) / Fraction(9, 4)
                         + 3 * Fraction(9, 4) - 3 * Fraction(1, 4)))

    def s_half():
        v = s_value(Interval.point(HALF), pi2)
        return _enclosed("s_half_zero", within(v, -1e-10, 1e-10), v)
    checks.append(_guarded("s_half_zero", s_half))

    def s_rstar_negative():
        v = s_value(r_star, pi2)
        return _enclosed("s_rstar_negative", certified_lt(v, 0), v, approx=f"{v.mid:.6g}")
    neg = _guarded("s_rstar_negative", s_rstar_negative)
    checks.append(neg)
    if neg.enclosure is not None:
        checks.append(_anchor("s_rstar_approx_-1.81", neg.enclosure, -1.81, 0.1))

    for name, value in (("32768-207pi4", 32768 - 207 * pi4),
                        ("81pi4-2048", 81 * pi4 - 2048),
                        ("1152-9pi4", 1152 - 9 * pi4)):
        checks.append(_enclosed(f"sign_{name}_positive", certified_lt(0, value), value))

    checks.append(_enclosed("rstar_lt_three_quarters", certified_lt(r_star, Fraction(3, 4)), r_star))
    checks.append(_from_conclusion("s1_ddd_positive", checks[-1:],
                                   "S1''' has the sign of 3 - 4r, positive for r < r_star < 3/4"))
    # S1''(1/2) = -27 * 60 / (16 * 81/16) pi^2
    poly60 = _poly(51, -48, 96, 64, 16)(HALF)
    checks.append(_exact("s1_dd_half_exact", Fraction(-27) * poly60 / (16 * Fraction(81, 16)) + 20,
                         polynomial_value=str(poly60)))

    checks.extend(transcription_checks())

    def radicand_positive():
        pieces = [s_radicand(x, pi2) for x in subdivide(HALF, r_star)]
        hull = pieces[0]
        for p in pieces[1:]:
            hull = hull.hull(p)
        return _enclosed("radicand_positive_on_subintervals", combine(certified_lt(0, p) for p in pieces), hull,
                         pieces=len(pieces))
    rad = _guarded("radicand_positive_on_subintervals", radicand_positive)
    checks.append(rad)
    signs = [c for c in checks if c.name.startswith("sign_")]
    checks.append(_from_conclusion("s3_ddd_negative", signs + [rad],
                                   "numerator factors and radicand have fixed signs on (1/2, r_star)"))

    def s3_dd_rstar():
        v = s3_dd(r_star, pi2)
        return _enclosed("s3_dd_rstar", certified_lt(v, 0), v, approx=f"{v.mid:.6g}")
    s3r = _guarded("s3_dd_rstar", s3_dd_rstar)
    checks.append(s3r)
    if s3r.enclosure is not None:
        checks.append(_anchor("s3_dd_rstar_approx_-22.28", s3r.enclosure, -22.28, 0.05))

        chain = -20 * pi2 + 30 * pi2 + s3r.enclosure
        checks.append(_enclosed("second_derivative_chain_positive", certified_lt(0, chain), chain))
    else:
        checks.append(Check("second_derivative_chain_positive", Status.UNDETERMINED, {"error": "no S3'' enclosure"}))

    def s_dd_positive():
        pieces = [s_dd(x, pi2) for x in subdivide(HALF, r_star)]
        hull = pieces[0]
        for p in pieces[1:]:
            hull = hull.hull(p)
        return _enclosed("s_dd_positive_on_subintervals", combine(certified_lt(0, p) for p in pieces), hull,
                         pieces=len(pieces))
    checks.append(_guarded("s_dd_positive_on_subintervals", s_dd_positive))

    def s_negative_samples():
        half = Interval.point(HALF)
        step = (r_star - half) / SAMPLE_POINTS
        values = [s_value(half + step * k, pi2) for k in range(1, SAMPLE_POINTS + 1)]
        worst = max(values, key=lambda v: v.hi)
        return _enclosed("s_negative_at_samples", combine(certified_lt(v, 0) for v in values), worst,
                         samples=len(values))
    checks.append(_guarded("s_negative_at_samples", s_negative_samples))

    premises = [c for c in checks if c.name in ("s_half_exact", "s_rstar_negative", "s1_ddd_positive",
                                                "s1_dd_half_exact", "s3_ddd_negative",
                                                "second_derivative_chain_positive")]
    checks.append(_from_conclusion("s_negative_on_half_to_rstar", premises,
                                   "S'' > 0, S(1/2) = 0 and S(r_star) < 0 give S < 0 on (1/2, r_star]"))
    return CertificateReport("A4", tuple(checks))


# -- cross-module ------------------------------------------------------------

def g_enclosure(r, t, pi2: Interval) -> Interval:
    r, t = Interval.point(r), Interval.point(t)
    return (3 * pi2 * (5 * r.sqr() + 1)
            - (9 * pi2 * pi2 * (3 * r.sqr() - 1).sqr() + 8192 * r.sqr() * t).sqrt()
            - 54 * pi2 * r.sqr() * (1 - t) / (1 + r).sqr())


def _negative_everywhere(name: str, values: list[Interval], **detail) -> Check:
    worst = max(values, key=lambda v: v.hi)
    return _enclosed(name, combine(certified_lt(v, 0) for v in values), worst, samples=len(values), **detail)


def certify_regions(consts: Constants | None = None, n: int = 64) -> CertificateReport:
    """Ordering lambda_1(L) < lambda_1(M) at sample parameters and the endpoint values of g."""
    from specpara.geometry import PolarPoint, from_polar
    from specpara.rayleigh_ritz import matrix_L, matrix_M
    from specpara.regions import polar_grid

    consts = consts or constants()
    pi2, c2, r_star = consts.pi2, consts.c_star.sqr(), consts.r_star
    checks = []

    def ordering():
        r, theta = polar_grid(16, 16)
        certs, gaps = [], []
        for ri in r:
            for th in theta:
                q = from_polar(PolarPoint(float(ri), float(th)))
                l1 = sym2_eigenvalues(matrix_L(q, consts.pi))[0]
                m1 = sym2_eigenvalues(matrix_M(q, consts.pi))[0]
                certs.append(certified_lt(l1, m1))
                gaps.append(m1 - l1)
        worst = min(gaps, key=lambda g: g.lo)
        return _enclosed("lambda1_L_lt_lambda1_M", combine(certs), worst, samples=len(certs))
    checks.append(_guarded("lambda1_L_lt_lambda1_M", ordering))

    def upper_cstar():
        half = Interval.point(HALF)
        step = (r_star - half) / n
        rs = [half + step * k for k in range(1, n + 1)]
        return _negative_everywhere("g_at_cstar2_on_half_to_rstar", [g_enclosure(x, c2, pi2) for x in rs])
    checks.append(_guarded("g_at_cstar2_on_half_to_rstar", upper_cstar))

    def upper_boundary():
        half = Interval.point(HALF)
        step = (r_star - half) / n
        rs = [half + step * k for k in range(1, n + 1)]
        ts = [1 - (x.sqr() + 0.75).sqr() / (4 * x.sqr()) for x in rs]
        return _negative_everywhere("g_at_r2_boundary_on_half_to_rstar",
                                    [g_enclosure(x, t, pi2) for x, t in zip(rs, ts)])
    checks.append(_guarded("g_at_r2_boundary_on_half_to_rstar", upper_boundary))

    lower = [Fraction(k, 2 * n) for k in range(1, n + 1)]
    checks.append(_guarded("g_at_cstar2_on_zero_to_half",
                           lambda: _negative_everywhere("g_at_cstar2_on_zero_to_half",
                                                        [g_enclosure(x, c2, pi2) for x in lower])))
    checks.append(_guarded("g_at_zero_below_half",
                           lambda: _negative_everywhere("g_at_zero_below_half",
                                                        [g_enclosure(x, 0, pi2) for x in lower[:-1]])))
    # g(1/2, 0) / pi^2 = 3 (5/4 + 1) - 3 |3/4 - 1| - 54 (1/4) / (9/4)
    checks.append(_exact("g_at_half_zero_exact",
                         3 * (Fraction(5, 4) + 1) - 3 * abs(Fraction(3, 4) - 1) - 54 * Fraction(1, 4) / Fraction(9, 4)))
    return CertificateReport("regions", tuple(checks))


CERTIFIERS = {"a1": certify_A1, "a2": certify_A2, "a3": certify_A3, "a4": certify_A4}


def certify_all(consts: Constants | None = None) -> list[CertificateReport]:
    consts = consts or constants()
    reports = [fn(consts) for fn in CERTIFIERS.values()]
    reports.append(certify_regions(consts))
    return reports
