"""Univariate polynomials with exact rational or interval coefficients.

Coefficients are stored in ascending degree.  ``RationalPolynomial`` is exact
(``fractions.Fraction`` carries arbitrary-precision integers); the zero
polynomial has an empty coefficient tuple and degree -1.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Iterable, Sequence

from specpara.numerics.interval import Interval


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class RationalPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim([Fraction(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPolynomial is immutable")

    @classmethod
    def x(cls) -> RationalPolynomial:
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> RationalPolynomial:
        return cls((c,))

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, Rational):
            return cls((other,))
        return None

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "RationalPolynomial(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*r" if k == 1 else f"{c}*r^{k}")
        return "RationalPolynomial(" + " + ".join(terms) + ")"

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial(self.coefficient(k) + other.coefficient(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Interval):
            return IntervalPolynomial.from_rational(self) * other
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = RationalPolynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; exact for rationals, enclosing for intervals."""
        if isinstance(x, Interval):
            return IntervalPolynomial.from_rational(self)(x)
        if isinstance(x, float):
            acc = 0.0
            for c in reversed(self.coeffs):
                acc = acc * x + float(c)
            return acc
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> RationalPolynomial:
        return RationalPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def antiderivative(self) -> RationalPolynomial:
        return RationalPolynomial([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def definite_integral(self, a, b) -> Fraction:
        anti = self.antiderivative()
        return anti(Fraction(b)) - anti(Fraction(a))

    def shift_compose(self, a) -> RationalPolynomial:
        """Coefficients of ``s -> p(s + a)`` (Taylor shift)."""
        a = Fraction(a)
        n = len(self.coeffs)
        out = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            apow = Fraction(1)
            # c * (s + a)^k = c * sum_j C(k, j) a^(k-j) s^j
            for j in range(k, -1, -1):
                out[j] += c * comb(k, j) * apow
                apow *= a
        return RationalPolynomial(out)


class IntervalPolynomial:
    """Polynomial whose coefficients are enclosures of real numbers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Interval]):
        object.__setattr__(self, "coeffs", tuple(Interval.point(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntervalPolynomial is immutable")

    @classmethod
    def from_rational(cls, p: RationalPolynomial) -> IntervalPolynomial:
        return cls([Interval.point(c) for c in p.coeffs])

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, IntervalPolynomial):
            return other
        if isinstance(other, RationalPolynomial):
            return cls.from_rational(other)
        return None

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Interval:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Interval(0.0, 0.0)

    def __repr__(self):
        return f"IntervalPolynomial({list(self.coeffs)!r})"

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return IntervalPolynomial([self.coefficient(k) + other.coefficient(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return IntervalPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (Interval, Rational, float)):
            s = Interval.point(other)
            return IntervalPolynomial([c * s for c in self.coeffs])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntervalPolynomial([])
        n = len(self.coeffs) + len(other.coeffs) - 1
        out = []
        for k in range(n):
            acc = Interval(0.0, 0.0)
            for i in range(max(0, k - len(other.coeffs) + 1), min(k, len(self.coeffs) - 1) + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return IntervalPolynomial(out)

    __rmul__ = __mul__

    def square(self) -> IntervalPolynomial:
        return self * self

    def __call__(self, x) -> Interval:
        x = Interval.point(x)
        acc = Interval(0.0, 0.0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> IntervalPolynomial:
        return IntervalPolynomial([c * k for k, c in enumerate(self.coeffs) if k])

    def antiderivative(self) -> IntervalPolynomial:
        return IntervalPolynomial([Interval(0.0, 0.0)] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def definite_integral(self, a, b) -> Interval:
        """Exact antiderivative evaluated at rational (or float) bounds."""
        anti = self.antiderivative()
        return anti(b) - anti(a)
