"""Kroger's bound, the four-region cover of the parameter quarter disk, and scans.

In polar coordinates c = r cos(theta), d = r sin(theta) the claim to check is

    min(lambda_2(L (+) M), (2 j01 + pi)^2 / (1 + 2 r cos(theta) + r^2)) < 9 pi^2 / (1 + r)^2

everywhere except the 2:1 rectangle (r, theta) = (1/2, pi/2).  Each region
names the bound that wins there:

    R1  cos(theta) > c_star                                   Kroger
    R2  1/2 < r <= 1, cos^2 < 1 - (r^2 + 3/4)^2 / (4 r^2),
        cos(theta) <= c_star                                  lambda_2(L)
    R3  1/2 < r <= r_star,
        1 - (r^2 + 3/4)^2 / (4 r^2) <= cos^2 <= c_star^2      lambda_1(M)
    R4  r <= 1/2, cos(theta) <= c_star                        lambda_1(M)

R2 is closed at r = 1 so the arc r = 1, cos(theta) <= c_star is covered.
"""
from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from specpara.errors import DomainError
from specpara.galerkin import SCAN_SPECS, GalerkinSpec, galerkin_mu3
from specpara.geometry import (
    HALF_PI,
    ParallelogramParams,
    PolarPoint,
    diameter,
    from_polar,
    scale_invariant_target,
)
from specpara.numerics.constants import constants
from specpara.rayleigh_ritz import mu3_upper_bound

_C = constants()
J01 = _C.j01.mid
C_STAR = _C.c_star.mid
R_STAR = _C.r_star.mid
PI2 = math.pi ** 2
TARGET = 36 * PI2

BOUNDARY_SLACK = 1e-14
EQUALITY_TOL = 1e-10
EQUALITY_POINT = PolarPoint(0.5, HALF_PI)


class RegionId(enum.Enum):
    R1 = 1
    R2 = 2
    R3 = 3
    R4 = 4

    def __lt__(self, other):
        return self.value < other.value


def kroger_bound(q: ParallelogramParams) -> float:
    """(2 j01 + pi)^2 / diameter^2, Kroger's upper bound for mu_3 of a convex domain."""
    return (2 * J01 + math.pi) ** 2 / diameter(q) ** 2


def _check_g_args(r, t):
    if not (0 < r <= 1) or not (0 <= t <= 1):
        raise DomainError(f"g(r, t) needs r in (0, 1] and t in [0, 1], got ({r}, {t})")


def eval_g(r: float, t: float) -> float:
    """g(r, t) = 3 pi^2 (5 r^2 + 1) - sqrt(9 pi^4 (3 r^2 - 1)^2 + 8192 r^2 t) - 54 pi^2 r^2 (1 - t)/(1 + r)^2.

    With t = cos^2(theta), g < 0 is equivalent to lambda_1(M) < 9 pi^2/(1 + r)^2.
    """
    _check_g_args(r, t)
    return (3 * PI2 * (5 * r * r + 1)
            - math.sqrt(9 * PI2 * PI2 * (3 * r * r - 1) ** 2 + 8192 * r * r * t)
            - 54 * PI2 * r * r * (1 - t) / (1 + r) ** 2)


def eval_g_tt(r: float, t: float) -> float:
    """Second t-derivative of g: b^2 / (4 (a + b t)^(3/2)) with a = 9 pi^4 (3r^2 - 1)^2, b = 8192 r^2."""
    _check_g_args(r, t)
    a = 9 * PI2 * PI2 * (3 * r * r - 1) ** 2
    b = 8192 * r * r
    return b * b / (4 * (a + b * t) ** 1.5)


def r2_threshold(r):
    """1 - (r^2 + 3/4)^2 / (4 r^2), the cos^2 boundary between R2 and R3."""
    return 1 - (r * r + 0.75) ** 2 / (4 * r * r)


def region_masks(r, cos_t):
    """Vectorised membership tests; every comparison is slackened toward inclusion."""
    eps = BOUNDARY_SLACK
    cos2 = cos_t * cos_t
    thr = r2_threshold(r)
    low_angle = cos_t <= C_STAR + eps
    r1 = cos_t > C_STAR - eps
    r2 = (r > 0.5 - eps) & (r <= 1 + eps) & (cos2 < thr + eps) & low_angle
    r3 = (r > 0.5 - eps) & (r <= R_STAR + eps) & (cos2 >= thr - eps) & (cos2 <= C_STAR ** 2 + eps)
    r4 = (r <= 0.5 + eps) & low_angle
    return r1, r2, r3, r4


def _polar_cos(p: PolarPoint) -> float:
    return 0.0 if p.theta == HALF_PI else math.cos(p.theta)


def classify(p: PolarPoint) -> frozenset[RegionId]:
    masks = region_masks(np.float64(p.r), np.float64(_polar_cos(p)))
    return frozenset(rid for rid, hit in zip(RegionId, masks) if bool(hit))


def format_regions(regions) -> str:
    return "|".join(r.name for r in sorted(regions))


@dataclass(frozen=True)
class MarginReport:
    point: PolarPoint
    rr_bound: float
    kroger: float
    rhs: float
    margin: float
    regions: frozenset

    @property
    def params(self) -> ParallelogramParams:
        return from_polar(self.point)

    @property
    def is_equality_point(self) -> bool:
        return is_equality_point(self.point)

    @property
    def status(self) -> str:
        if self.is_equality_point and abs(self.margin) <= EQUALITY_TOL:
            return "EQUALITY"
        return "STRICT" if self.margin < 0 else "VIOLATED"


def is_equality_point(p: PolarPoint, tol: float = 1e-12) -> bool:
    return abs(p.r - 0.5) <= tol and abs(p.theta - HALF_PI) <= tol


def main_inequality(p: PolarPoint) -> MarginReport:
    q = from_polar(p)
    rr = mu3_upper_bound(q)
    kr = kroger_bound(q)
    rhs = 9 * PI2 / (1 + p.r) ** 2
    return MarginReport(p, rr, kr, rhs, min(rr, kr) - rhs, classify(p))


# -- grid scans ------------------------------------------------------------

def polar_grid(nr: int, ntheta: int) -> tuple[np.ndarray, np.ndarray]:
    """Grid r_i = i/nr, theta_j = j pi/(2 ntheta) for i, j >= 1.

    Open at r = 0 and theta = 0, closed at r = 1 and theta = pi/2, so the
    square (0, 1) and, for even nr, the 2:1 rectangle are grid points.
    """
    if nr < 2 or ntheta < 2:
        raise DomainError(f"grid must be at least 2 x 2, got {nr} x {ntheta}")
    r = np.arange(1, nr + 1) / nr
    theta = np.arange(1, ntheta + 1) / ntheta * HALF_PI  # j = ntheta lands exactly on pi/2
    return r, theta


@dataclass
class CoverageReport:
    nr: int
    ntheta: int
    uncovered: list[tuple[float, float]]
    counts: dict[str, int]
    tail_ok: bool  # 1 - (r^2 + 3/4)^2/(4 r^2) > c_star^2 on every grid r in (r_star, 1]
    tail_min_gap: float

    @property
    def n_uncovered(self) -> int:
        return len(self.uncovered)

    @property
    def ok(self) -> bool:
        return not self.uncovered and self.tail_ok


def coverage_scan(nr: int, ntheta: int) -> CoverageReport:
    r, theta = polar_grid(nr, ntheta)
    R, T = np.meshgrid(r, theta, indexing="ij")
    masks = region_masks(R, np.cos(T))
    union = np.logical_or.reduce(masks)
    bad = np.argwhere(~union)
    tail = r[r > R_STAR]
    gaps = r2_threshold(tail) - C_STAR ** 2
    return CoverageReport(
        nr=nr,
        ntheta=ntheta,
        uncovered=[(float(r[i]), float(theta[j])) for i, j in bad],
        counts={rid.name: int(m.sum()) for rid, m in zip(RegionId, masks)},
        tail_ok=bool(np.all(gaps > 0)),
        tail_min_gap=float(gaps.min()) if gaps.size else math.inf,
    )


CSV_HEADER = ("r", "theta", "c", "d", "mu3", "rr_bound", "kroger", "rhs", "margin", "target_ratio", "regions")


@dataclass(frozen=True)
class ScanRow:
    i: int
    j: int
    r: float
    theta: float
    c: float
    d: float
    mu3: float
    rr_bound: float
    kroger: float
    rhs: float
    margin: float
    target_ratio: float
    regions: str

    def csv_fields(self) -> list[str]:
        vals = (self.r, self.theta, self.c, self.d, self.mu3, self.rr_bound,
                self.kroger, self.rhs, self.margin, self.target_ratio)
        return [repr(float(v)) for v in vals] + [self.regions]


@dataclass
class ScanReport:
    nr: int
    ntheta: int
    specs: tuple[GalerkinSpec, ...]
    rows: list[ScanRow] = field(repr=False)

    @property
    def argmax(self) -> ScanRow:
        return max(self.rows, key=lambda row: (row.target_ratio, -row.i, -row.j))

    @property
    def max_ratio(self) -> float:
        return self.argmax.target_ratio


def _scan_row(args) -> list[ScanRow]:
    i, r, thetas, specs, with_galerkin = args
    out = []
    for j, th in enumerate(thetas):
        p = PolarPoint(float(r), float(th))
        q = from_polar(p)
        rep = main_inequality(p)
        mu3 = galerkin_mu3(q, specs) if with_galerkin else math.nan
        ratio = scale_invariant_target(mu3, q) / TARGET if with_galerkin else math.nan
        out.append(ScanRow(i, j, p.r, p.theta, q.c, q.d, mu3, rep.rr_bound, rep.kroger,
                           rep.rhs, rep.margin, ratio, format_regions(rep.regions)))
    return out


def worker_count() -> int:
    env = os.environ.get("SPECPARA_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise DomainError(f"SPECPARA_THREADS must be an integer, got {env!r}") from None
        return max(1, n)
    return os.cpu_count() or 1


def target_scan(
    nr: int,
    ntheta: int,
    specs: tuple[GalerkinSpec, ...] = SCAN_SPECS,
    workers: int | None = None,
    with_galerkin: bool = True,
) -> ScanReport:
    """Evaluate bounds and the Galerkin target ratio on the polar grid.

    Rows come back ordered by (i, j) whatever the worker count.
    """
    r, theta = polar_grid(nr, ntheta)
    jobs = [(i, ri, theta, tuple(specs), with_galerkin) for i, ri in enumerate(r)]
    workers = worker_count() if workers is None else workers
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_scan_row, jobs))
    else:
        chunks = [_scan_row(job) for job in jobs]
    rows = [row for chunk in chunks for row in chunk]
    return ScanReport(nr, ntheta, tuple(specs), rows)


def nearest_grid_point(report: ScanReport, c: float, d: float) -> ScanRow:
    return min(report.rows, key=lambda row: (row.c - c) ** 2 + (row.d - d) ** 2)
