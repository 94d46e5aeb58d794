import math

import pytest
from hypothesis import given, settings, strategies as st

from specpara.errors import DomainError
from specpara.geometry import (
    HALF_PI,
    ParallelogramParams,
    PolarPoint,
    diameter,
    from_polar,
    perimeter,
    scale_invariant_target,
    to_polar,
    transform_point,
)

polar = st.builds(PolarPoint, st.floats(1e-3, 1.0), st.floats(1e-3, HALF_PI))


def test_validation():
    for c, d in ((-0.1, 0.5), (0.0, 0.0), (0.0, -1.0), (0.9, 0.5), (math.nan, 0.5)):
        with pytest.raises(DomainError):
            ParallelogramParams(c, d)
    for r, th in ((0.0, 1.0), (1.1, 1.0), (0.5, 0.0), (0.5, 2.0)):
        with pytest.raises(DomainError):
            PolarPoint(r, th)


def test_polar_examples():
    assert from_polar(PolarPoint(0.5, HALF_PI)) == ParallelogramParams(0.0, 0.5)
    p = to_polar(ParallelogramParams(0.3, 0.4))
    assert p.r == pytest.approx(0.5, abs=1e-15) and p.theta == math.atan2(0.4, 0.3)


def test_perimeter_diameter_examples():
    assert perimeter(ParallelogramParams(0, 0.5)) == 3
    assert perimeter(ParallelogramParams(0.3, 0.4)) == pytest.approx(3, abs=1e-15)
    assert perimeter(ParallelogramParams(0, 1)) == 4
    assert diameter(ParallelogramParams(0, 0.5)) == pytest.approx(math.sqrt(5) / 2, abs=1e-15)
    assert diameter(ParallelogramParams(0, 1)) == pytest.approx(math.sqrt(2), abs=1e-15)
    assert diameter(ParallelogramParams(0.6, 0.8)) == pytest.approx(math.sqrt(3.2), abs=1e-15)


def test_transform_corners():
    q = ParallelogramParams(0.3, 0.6)
    assert transform_point(q, 0, 0) == (0, 0)
    assert transform_point(q, 1, 0) == (1, 0)
    assert transform_point(q, 0, q.d) == (q.c, q.d)
    assert transform_point(q, 1, q.d) == (1 + q.c, q.d)
    with pytest.raises(DomainError):
        transform_point(q, 1.1, 0.1)


def test_target_examples():
    p2 = math.pi ** 2
    assert scale_invariant_target(4 * p2, ParallelogramParams(0, 0.5)) == pytest.approx(36 * p2, rel=1e-15)
    assert scale_invariant_target(p2, ParallelogramParams(0, 1)) == pytest.approx(16 * p2, rel=1e-15)
    assert scale_invariant_target(0, ParallelogramParams(0.2, 0.2)) == 0
    with pytest.raises(DomainError):
        scale_invariant_target(-1.0, ParallelogramParams(0.2, 0.2))


@settings(max_examples=1000, deadline=None)
@given(polar)
def test_roundtrip_and_bounds(p):
    q = from_polar(p)
    back = to_polar(q)
    assert abs(back.r - p.r) <= 1e-14 and abs(back.theta - p.theta) <= 1e-14
    P, D = perimeter(q), diameter(q)
    assert 2 < P <= 4 + 1e-15 and 1 < D <= 2 + 1e-15


def test_half_pi_gives_exact_zero_shear():
    assert from_polar(PolarPoint(0.7, HALF_PI)).c == 0.0
