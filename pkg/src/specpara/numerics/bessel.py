"""First zero of J0 by bisection on its power series.

On ``[2, 3]`` the series ``J0(x) = sum_k (-1)^k (x^2/4)^k / (k!)^2`` alternates
and, from ``k = 1`` on, its terms decrease in magnitude, so every partial sum
sequence brackets the limit: ``J0(x)`` lies between consecutive partial sums.
Evaluating those sums in exact rational arithmetic gives a sign test with no
rounding at all.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from specpara.numerics.interval import Interval

_BRACKET = (Fraction(2), Fraction(3))
_TERM_CUTOFF = Fraction(1, 2**80)


def j0_series_bracket(x: Fraction) -> tuple[Fraction, Fraction]:
    """Rational ``(lo, hi)`` with ``lo <= J0(x) <= hi`` for ``0 <= x <= 3``."""
    x = Fraction(x)
    if not 0 <= x <= 3:
        raise ValueError("bracketing argument only valid on [0, 3]")
    q = x * x / 4
    term = Fraction(1)
    partial = term
    k = 0
    while True:
        k += 1
        term = -term * q / (k * k)
        nxt = partial + term
        if k >= 2 and abs(term) < _TERM_CUTOFF:
            return min(partial, nxt), max(partial, nxt)
        partial = nxt


def j0(x: float) -> float:
    """Floating-point J0 from the same series (accurate for ``|x| <= 3``)."""
    q = x * x / 4.0
    term = 1.0
    total = 1.0
    k = 0
    while abs(term) > 1e-18 * max(1.0, abs(total)) or k < 2:
        k += 1
        term *= -q / (k * k)
        total += term
    return total


@lru_cache(maxsize=None)
def bessel_j0_first_zero(width: float = 2.0**-46) -> Interval:
    """Enclosure of j_{0,1}, the first positive zero of J0, narrower than ``width``."""
    a, b = _BRACKET
    assert j0_series_bracket(a)[0] > 0 and j0_series_bracket(b)[1] < 0
    while b - a > Fraction(width):
        m = (a + b) / 2
        lo, hi = j0_series_bracket(m)
        if lo > 0:
            a = m
        elif hi < 0:
            b = m
        else:  # sign undecidable at this resolution; [a, b] is still a valid bracket
            break
    return Interval.from_bounds(a, b)


def bessel_j0_first_zero_float() -> float:
    return bessel_j0_first_zero().mid


__all__ = ["bessel_j0_first_zero", "bessel_j0_first_zero_float", "j0", "j0_series_bracket"]
