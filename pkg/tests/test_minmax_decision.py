import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_instance, regular_instance
from pgcover.geom import Instance, coverage_arc, placement_cost
from pgcover.kernels import available_backends
from pgcover.minmax_decision import build_initial_graph, feasible, rotation_events
from pgcover.oracles import brute_feasible


def test_initial_graph_identity_on_polygon():
    g = build_initial_graph(regular_instance(4), 0.0)
    assert [(v.id, v.begin, v.end) for v in g.vertices] == [(j, j, j) for j in range(4)]


def test_initial_graph_full_and_empty():
    inst = random_instance(random.Random(3), 6)
    g = build_initial_graph(inst, 2.0)
    assert all(len(g.neighbors(v)) == 6 for v in g.vertices)
    center = Instance.from_polar([(0.0, 0.0), (1.0, 1.0)])
    assert 0 not in {v.id for v in build_initial_graph(center, 0.5).vertices}


def test_single_sensor_events():
    inst = Instance.from_polar([(0.5, 0.0)])
    seq = rotation_events(inst, 0.6)
    kinds = sorted(e.kind for e in seq.events)
    assert kinds == ["add", "remove"]
    # the vertex enters and leaves the coverage arc at +-gamma from the sensor
    gamma = coverage_arc(inst.sensors[0], 0.6).half_width
    times = sorted(e.time for e in seq.events)
    assert times[0] == pytest.approx(gamma, abs=1e-9)
    assert times[1] == pytest.approx(2 * math.pi - gamma, abs=1e-6)
    # dense sampling: vertex at -t is within 0.6 exactly between the two times
    for k in range(1, 2000):
        t = 2 * math.pi * k / 2000
        d = math.sqrt(1.25 - math.cos(t))
        if min(abs(t - times[0]), abs(t - times[1])) > 1e-6:
            assert (d <= 0.6) == (t < times[0] or t > times[1])


def test_full_coverage_has_no_events():
    inst = Instance.from_polar([(0.3, 1.0), (0.6, 2.0)])
    assert rotation_events(inst, 1.7).events == ()


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 15), st.floats(0.0, 2.0), st.integers(0, 2**32 - 1))
def test_event_count(n, lam, seed):
    inst = random_instance(random.Random(seed), n)
    proper = sum(1 for s in inst.sensors if (a := coverage_arc(s, lam)) is not None and not a.full)
    assert len(rotation_events(inst, lam).events) == 2 * proper


@pytest.mark.parametrize("n", [1, 3, 8])
def test_polygon_zero_movement(n):
    w = feasible(regular_instance(n, 0.3), 0.0)
    assert w.feasible and w.max_move <= 1e-9


def test_closed_form_examples():
    two = Instance.from_polar([(1.0, 0.0), (1.0, 0.0)])
    assert feasible(two, 1.415).feasible and not feasible(two, 1.413).feasible
    one = Instance.from_polar([(0.5, 0.0)])
    assert feasible(one, 0.5).feasible and not feasible(one, 0.499).feasible


def test_negative_lambda_rejected():
    with pytest.raises(ValueError):
        feasible(regular_instance(3), -0.1)


@pytest.mark.parametrize("backend", available_backends())
@pytest.mark.parametrize("seed", range(3))
def test_witness_and_brute_agreement(backend, seed):
    rng = random.Random(seed)
    for _ in range(40):
        inst = random_instance(rng, rng.randint(1, 9), clustered=rng.random() < 0.3)
        lam = rng.uniform(0.0, 1.6)
        w = feasible(inst, lam, backend)
        assert w.feasible == brute_feasible(inst, lam)
        if w.feasible:
            worst, _ = placement_cost(inst, w.placement, w.assignment)
            assert worst == pytest.approx(w.max_move, abs=1e-12)
            assert worst <= lam + 1e-9


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 10), st.integers(0, 2**32 - 1), st.floats(0.0, 2.0), st.floats(0.0, 0.5))
def test_monotone_in_lambda(n, seed, lam, extra):
    inst = random_instance(random.Random(seed), n)
    if feasible(inst, lam).feasible:
        assert feasible(inst, lam + extra).feasible
