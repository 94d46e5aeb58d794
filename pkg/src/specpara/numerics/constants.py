"""Enclosures of pi, j_{0,1} and the two region constants c_star, r_star.

pi is seeded from a 30-digit rational bracket; pi^2 and pi^4 are always
derived from it by interval multiplication.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from specpara.numerics.bessel import bessel_j0_first_zero
from specpara.numerics.interval import Interval

PI_LO = Fraction("3.14159265358979323846264338327")
PI_HI = Fraction("3.14159265358979323846264338328")


@dataclass(frozen=True)
class Constants:
    pi: Interval
    j01: Interval
    c_star: Interval
    r_star: Interval

    @property
    def pi2(self) -> Interval:
        return self.pi * self.pi

    @property
    def pi4(self) -> Interval:
        p2 = self.pi2
        return p2 * p2

    @property
    def kroger_numerator(self) -> Interval:
        """``(2 j01 + pi)^2``."""
        return (2 * self.j01 + self.pi).sqr()


def derive_constants(pi: Interval, j01: Interval) -> Constants:
    """c_star = 2(2 j01 + pi)^2 / (9 pi^2) - 1,  r_star = sqrt(1 - c^2) - sqrt(1/4 - c^2).

    c_star is evaluated as 2 (1 + 2 j01/pi)^2 / 9 - 1 so each input occurs
    once, which keeps the enclosure tight when pi or j01 are widened.
    """
    c_star = 2 * (1 + 2 * j01 / pi).sqr() / 9 - 1
    c2 = c_star.sqr()
    r_star = (1 - c2).sqrt() - (Fraction(1, 4) - c2).sqrt()
    return Constants(pi=pi, j01=j01, c_star=c_star, r_star=r_star)


@lru_cache(maxsize=None)
def constants(pi_radius: float = 0.0, j01_radius: float = 0.0) -> Constants:
    """The certified constants.

    Non-zero radii inflate the pi / j01 enclosures before anything is derived
    from them; this simulates precision loss when probing soundness.
    """
    pi = Interval.from_bounds(PI_LO, PI_HI)
    j01 = bessel_j0_first_zero()
    if pi_radius:
        pi = pi.widen(pi_radius)
    if j01_radius:
        j01 = j01.widen(j01_radius)
    return derive_constants(pi, j01)
