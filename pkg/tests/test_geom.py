import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pgcover.geom import (
    Instance,
    Placement,
    Sensor,
    boundary_extremes,
    coverage_arc,
    placement_cost,
    point_boundary_distance,
    sensor_vertex_distance,
    wrap_angle,
)

radii = st.floats(0.0, 1.0)
angles = st.floats(-20.0, 20.0, allow_nan=False)


def test_extremes_on_axis():
    e = boundary_extremes(Sensor.from_xy(0.5, 0.0))
    assert e.nearest_dist == 0.5 and e.farthest_dist == 1.5 and e.nearest_angle == 0.0


def test_extremes_at_center():
    e = boundary_extremes(Sensor.from_xy(0.0, 0.0))
    assert e.nearest_dist == 1.0 and e.farthest_dist == 1.0


def test_extremes_pythagorean():
    e = boundary_extremes(Sensor.from_xy(0.3, 0.4))
    assert e.nearest_dist == pytest.approx(0.5, abs=1e-15)
    assert e.nearest_angle == pytest.approx(math.atan2(0.4, 0.3))


@pytest.mark.parametrize(
    "xy, vertex_angle, expected",
    [((1.0, 0.0), 0.0, 0.0), ((0.0, 0.0), 1.234, 1.0), ((0.5, 0.0), math.pi, 1.5)],
)
def test_vertex_distance_examples(xy, vertex_angle, expected):
    assert sensor_vertex_distance(Sensor.from_xy(*xy), Placement(1, vertex_angle), 0) == pytest.approx(expected, abs=1e-15)


def test_coverage_arc_examples():
    s = Sensor.from_xy(0.5, 0.0)
    assert coverage_arc(s, 0.5).half_width == 0.0
    assert coverage_arc(s, 1.5).full
    assert coverage_arc(s, 1.0).half_width == pytest.approx(math.acos(0.25), abs=1e-12)
    assert coverage_arc(s, 0.49) is None


def test_coverage_arc_against_sampling():
    s = Sensor.from_xy(0.5, 0.0)
    arc = coverage_arc(s, 1.0)
    for k in range(4000):
        a = -math.pi + 2 * math.pi * k / 4000
        if abs(abs(a) - arc.half_width) < 1e-9:
            continue
        assert (point_boundary_distance(s, a) <= 1.0) == (abs(a) <= arc.half_width)


@given(radii, angles, st.floats(0.0, 2.5))
def test_arc_membership_matches_distance(r, a, lam):
    s = Sensor(r, wrap_angle(a))
    arc = coverage_arc(s, lam)
    for k in range(24):
        t = 2 * math.pi * k / 24
        d = point_boundary_distance(s, t)
        inside = arc is not None and arc.contains(t, eps=0.0)
        if abs(d - lam) > 1e-9:
            assert inside == (d < lam)


@given(radii, angles, angles)
def test_distance_bounds(r, a, t):
    d = point_boundary_distance(Sensor(r, wrap_angle(a)), t)
    assert 1 - r - 1e-12 <= d <= 1 + r + 1e-12


@given(st.integers(1, 40), angles)
def test_canonical_offset_range(n, t):
    p = Placement.canonical(n, t)
    assert 0.0 <= p.offset < 2 * math.pi / n
    # same vertex set as the raw offset
    raw = Placement(n, t)
    got = sorted(p.vertex_angle(j) for j in range(n))
    want = sorted(raw.vertex_angle(j) for j in range(n))
    for x, y in zip(got, want):
        assert min(abs(x - y), 2 * math.pi - abs(x - y)) < 1e-9


def test_instance_normalization():
    inst = Instance.from_points([(3.0, 3.0), (2.0, 2.0)], center=(2.0, 2.0), radius=2.0)
    assert inst.sensors[0].radius == pytest.approx(math.hypot(0.5, 0.5))
    assert inst.sensors[1].radius == 0.0
    assert inst.to_original(0.5, 0.5) == (3.0, 3.0)
    with pytest.raises(ValueError):
        Instance.from_points([(5.0, 0.0)], radius=2.0)


def test_placement_cost_rejects_non_permutation():
    inst = Instance.from_polar([(1.0, 0.0), (1.0, math.pi)])
    with pytest.raises(ValueError):
        placement_cost(inst, Placement(2, 0.0), [0, 0])
    assert placement_cost(inst, Placement(2, 0.0), [0, 1]) == pytest.approx((0.0, 0.0), abs=1e-15)
