"""Outward-rounded interval arithmetic on binary64 endpoints.

Every primitive operation computes its endpoints in round-to-nearest and then
moves each one a single ulp outward (``math.nextafter``).  Round-to-nearest is
within half an ulp of the exact value, so the widened interval encloses the
exact result without touching the FPU rounding mode.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from specpara.errors import DomainError

_INF = math.inf


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


def fraction_bounds(q: Rational) -> tuple[float, float]:
    """Tightest pair of floats ``lo <= q <= hi``."""
    q = Fraction(q)
    x = float(q)  # correctly rounded
    fx = Fraction(x)
    if fx == q:
        return x, x
    if fx > q:
        return _down(x), x
    return x, _up(x)


class Certainty(enum.Enum):
    TRUE = "TRUE"
    FALSE = "FALSE"
    UNDETERMINED = "UNDETERMINED"

    def __bool__(self) -> bool:
        return self is Certainty.TRUE


@dataclass(frozen=True, slots=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise DomainError(f"interval endpoints must be finite, got [{self.lo}, {self.hi}]")
        if self.lo > self.hi:
            raise DomainError(f"empty interval [{self.lo}, {self.hi}]")

    # -- construction -------------------------------------------------------
    @classmethod
    def point(cls, x) -> Interval:
        """Enclosure of a single exact number (int, float or rational)."""
        if isinstance(x, Interval):
            return x
        if isinstance(x, float):
            return cls(x, x)
        if not isinstance(x, Rational):
            raise TypeError(f"cannot enclose {type(x).__name__}")
        lo, hi = fraction_bounds(x)
        return cls(lo, hi)

    @classmethod
    def from_bounds(cls, lo, hi) -> Interval:
        """Enclosure of ``[lo, hi]`` for exact (possibly rational) bounds."""
        return cls(fraction_bounds(lo)[0], fraction_bounds(hi)[1])

    # -- inspection ---------------------------------------------------------
    @property
    def mid(self) -> float:
        return 0.5 * self.lo + 0.5 * self.hi

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mag(self) -> float:
        return max(abs(self.lo), abs(self.hi))

    def contains(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        if isinstance(x, float):
            return self.lo <= x <= self.hi
        q = Fraction(x)
        return Fraction(self.lo) <= q <= Fraction(self.hi)

    def __contains__(self, x) -> bool:
        return self.contains(x)

    def hull(self, other) -> Interval:
        other = Interval.point(other)
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def widen(self, radius: float) -> Interval:
        return Interval(_down(self.lo - radius), _up(self.hi + radius))

    def as_list(self) -> list[float]:
        return [self.lo, self.hi]

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"

    # -- arithmetic ---------------------------------------------------------
    def __neg__(self) -> Interval:
        return Interval(-self.hi, -self.lo)

    def __pos__(self) -> Interval:
        return self

    def __add__(self, other) -> Interval:
        try:
            o = Interval.point(other)
        except TypeError:
            return NotImplemented
        return Interval(_down(self.lo + o.lo), _up(self.hi + o.hi))

    __radd__ = __add__

    def __sub__(self, other) -> Interval:
        try:
            o = Interval.point(other)
        except TypeError:
            return NotImplemented
        return Interval(_down(self.lo - o.hi), _up(self.hi - o.lo))

    def __rsub__(self, other) -> Interval:
        return Interval.point(other) - self

    def __mul__(self, other) -> Interval:
        try:
            o = Interval.point(other)
        except TypeError:
            return NotImplemented
        p = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(_down(min(p)), _up(max(p)))

    __rmul__ = __mul__

    def __truediv__(self, other) -> Interval:
        try:
            o = Interval.point(other)
        except TypeError:
            return NotImplemented
        if o.lo <= 0.0 <= o.hi:
            raise DomainError(f"division by an interval containing zero: {o!r}")
        q = (self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi)
        return Interval(_down(min(q)), _up(max(q)))

    def __rtruediv__(self, other) -> Interval:
        return Interval.point(other) / self

    def __pow__(self, n: int) -> Interval:
        if not isinstance(n, int) or n < 0:
            raise DomainError("only non-negative integer powers are supported")
        if n == 0:
            return Interval(1.0, 1.0)
        result = self
        for _ in range(n - 1):
            result = result * self
        if n % 2 == 0 and result.lo < 0.0:
            # even power of a sign-changing interval; the product bound is loose
            result = Interval(0.0, result.hi)
        return result

    def sqr(self) -> Interval:
        lo, hi = abs(self.lo), abs(self.hi)
        if self.lo <= 0.0 <= self.hi:
            return Interval(0.0, _up(max(lo, hi) ** 2))
        a, b = min(lo, hi), max(lo, hi)
        return Interval(max(0.0, _down(a * a)), _up(b * b))

    def sqrt(self) -> Interval:
        if self.lo < 0.0:
            raise DomainError(f"sqrt of an interval with negative part: {self!r}")
        return Interval(max(0.0, _down(math.sqrt(self.lo))), _up(math.sqrt(self.hi)))

    # -- certified comparisons ----------------------------------------------
    def certainly_lt(self, other) -> Certainty:
        return certified_lt(self, other)

    def certainly_gt(self, other) -> Certainty:
        return certified_lt(other, self)


def certified_lt(x, y) -> Certainty:
    """Tri-state ``x < y``: TRUE only if x.hi < y.lo, FALSE only if y.hi < x.lo."""
    x, y = Interval.point(x), Interval.point(y)
    if x.hi < y.lo:
        return Certainty.TRUE
    if y.hi < x.lo:
        return Certainty.FALSE
    return Certainty.UNDETERMINED


def sqrt(x):
    """``sqrt`` for floats or intervals."""
    if isinstance(x, Interval):
        return x.sqrt()
    if x < 0:
        raise DomainError(f"sqrt of negative number {x}")
    return math.sqrt(x)
