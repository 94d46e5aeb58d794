"""The parallelogram family spanned by (1, 0) and (c, d).

Vertices are (0, 0), (c, d), (c + 1, d), (1, 0).  Any parallelogram can be
scaled so its longest side is 1 and moved into this position, which gives the
normalisation ``c >= 0, d > 0, c^2 + d^2 <= 1``.  Inputs outside it are
rejected, not reflected back.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from specpara.errors import DomainError

HALF_PI = math.pi / 2
# absorbs rounding in c^2 + d^2 for points produced from r = 1
_UNIT_SLACK = 1e-12


@dataclass(frozen=True)
class ParallelogramParams:
    c: float
    d: float

    def __post_init__(self):
        if not (math.isfinite(self.c) and math.isfinite(self.d)):
            raise DomainError(f"non-finite parameters c={self.c}, d={self.d}")
        if self.c < 0:
            raise DomainError(f"c must be >= 0, got c={self.c}")
        if self.d <= 0:
            raise DomainError(f"d must be > 0, got d={self.d}")
        if self.c * self.c + self.d * self.d > 1 + _UNIT_SLACK:
            raise DomainError(f"c^2 + d^2 must be <= 1, got {self.c ** 2 + self.d ** 2:.6g}")

    @property
    def radius(self) -> float:
        return math.hypot(self.c, self.d)


@dataclass(frozen=True)
class PolarPoint:
    r: float
    theta: float

    def __post_init__(self):
        if not (0 < self.r <= 1):
            raise DomainError(f"r must lie in (0, 1], got r={self.r}")
        if not (0 < self.theta <= HALF_PI):
            raise DomainError(f"theta must lie in (0, pi/2], got theta={self.theta}")


def from_polar(p: PolarPoint) -> ParallelogramParams:
    if p.theta == HALF_PI:
        return ParallelogramParams(0.0, p.r)
    return ParallelogramParams(p.r * math.cos(p.theta), p.r * math.sin(p.theta))


def to_polar(q: ParallelogramParams) -> PolarPoint:
    r = math.hypot(q.c, q.d)
    return PolarPoint(min(r, 1.0), math.atan2(q.d, q.c))


def perimeter(q: ParallelogramParams) -> float:
    return 2.0 * (1.0 + math.hypot(q.c, q.d))


def diameter(q: ParallelogramParams) -> float:
    """Length of the long diagonal, from (0, 0) to (1 + c, d)."""
    return math.hypot(1.0 + q.c, q.d)


def transform_point(q: ParallelogramParams, x: float, y: float) -> tuple[float, float]:
    """The shear (x, y) -> (x + y c/d, y) from [0, 1] x [0, d] onto the parallelogram."""
    if not (0 <= x <= 1 and 0 <= y <= q.d):
        raise DomainError(f"({x}, {y}) is outside the rectangle [0, 1] x [0, {q.d}]")
    if y == q.d:
        return x + q.c, y
    return x + y * q.c / q.d, y


def scale_invariant_target(mu3: float, q: ParallelogramParams) -> float:
    """``mu3 * |boundary|^2``; dilation-invariant, conjectured <= 36 pi^2."""
    if mu3 < 0:
        raise DomainError(f"eigenvalue must be non-negative, got {mu3}")
    return mu3 * perimeter(q) ** 2
