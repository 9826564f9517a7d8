import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import brentq

from conftest import random_instance, regular_instance
from pgcover.geom import Instance, Placement
from pgcover.minmax_decision import feasible
from pgcover.minmax_opt import (
    FALLING,
    RISING,
    SortedDistanceArrays,
    build_curve_family,
    compute_lambda_c,
    count_vertices_above,
    extend_pseudolines,
    farthest_distances_inside,
    kth_highest_vertex,
    search_sorted_arrays,
    trivial_lower_bound,
)
from pgcover.oracles import bottleneck_assignment, brute_lambda_c


def test_trivial_lower_bound():
    assert trivial_lower_bound(regular_instance(5)) == 0.0
    assert trivial_lower_bound(Instance.from_polar([(0.0, 0.0)])) == 1.0
    assert trivial_lower_bound(Instance.from_polar([(0.2, 0.0), (0.7, 1.0)])) == pytest.approx(0.8)


def test_search_hand_example():
    assert search_sorted_arrays([[1, 3, 5], [2, 4, 6]], lambda x: x >= 3.5) == (3, 4)


@pytest.mark.parametrize("k", [1, 4, 9])
def test_search_single_run(k):
    assert search_sorted_arrays([list(range(1, 11))], lambda x: x >= k + 0.5) == (k, k + 1)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.lists(st.floats(0, 100), min_size=0, max_size=12), min_size=1, max_size=6), st.data())
def test_search_against_full_sort(raw, data):
    arrays = [sorted(a) for a in raw]
    union = sorted(x for a in arrays for x in a)
    if not union:
        return
    cut = data.draw(st.floats(-1.0, union[-1]))
    above = min(x for x in union if x > cut) if cut < union[-1] else union[-1]
    below = max((x for x in union if x < above), default=-2.0)
    got = search_sorted_arrays(arrays, lambda x: x >= above, lower=-2.0)
    assert got == (below, above)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_distance_arrays_hold_all_distances(n, seed):
    inst = random_instance(random.Random(seed), n)
    arrays = SortedDistanceArrays(inst)
    for run in arrays:
        vals = list(run)
        assert vals == sorted(vals)
    got = np.sort(arrays.all_values())
    # distances at sweep time 0, every sensor to every vertex
    p = Placement(n, 0.0)
    want = np.sort([math.dist(s.xy, p.vertex_xy(j)) for s in inst.sensors for j in range(n)])
    assert np.allclose(got, want, atol=1e-12)
    x = float(np.median(want))
    assert int(arrays.count_at_most(x).sum()) == int((got <= x).sum())


def test_center_sensor_has_no_curves():
    inst = Instance.from_polar([(0.0, 0.0), (1.0, 0.5)])
    fam = build_curve_family(inst, (1.0, 2.0))
    assert all(c.sensor != 0 for c in fam.curves)


def test_two_boundary_sensors_cross_at_sqrt2():
    inst = Instance.from_polar([(1.0, 0.0), (1.0, 0.0)])
    fam = extend_pseudolines(build_curve_family(inst, (0.0, 2.0)))
    assert sorted(c.direction for c in fam.curves) == [FALLING, RISING]
    assert sum(c.multiplicity for c in fam.curves) == 4
    assert count_vertices_above(fam, fam.y_range()[0]) == 1
    assert kth_highest_vertex(fam, 1) == pytest.approx(math.sqrt(2), abs=1e-12)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 20), st.integers(0, 2**32 - 1))
def test_family_size_bound(n, seed):
    inst = random_instance(random.Random(seed), n)
    vals = sorted(SortedDistanceArrays(inst).all_values())
    base = trivial_lower_bound(inst)
    vals = [v for v in vals if v > base]
    if len(vals) < 2:
        return
    k = random.Random(seed).randrange(len(vals) - 1)
    fam = build_curve_family(inst, (vals[k], vals[k + 1]))
    assert sum(c.multiplicity for c in fam.curves) <= 2 * n
    keys = [(c.direction, c.radius, c.shift) for c in fam.curves]
    assert len(keys) == len(set(keys))


def _apex_free_families(seed, trials):
    """Families built on bands cut between consecutive canonical distances and at every 1 + r."""
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(2, 10)
        inst = random_instance(rng, n, clustered=rng.random() < 0.3)
        base = trivial_lower_bound(inst)
        vals = [v for v in sorted(SortedDistanceArrays(inst).all_values()) if v > base + 1e-9]
        if len(vals) < 2:
            continue
        k = rng.randrange(len(vals) - 1)
        lo, hi = max(base, vals[k]), vals[k + 1]
        cuts = [lo, *farthest_distances_inside(inst, (lo, hi)), hi]
        q = rng.randrange(len(cuts) - 1)
        fam = extend_pseudolines(build_curve_family(inst, (cuts[q], cuts[q + 1])))
        if len(fam) >= 2:
            yield fam


def _pairwise_crossings(fam) -> list[float]:
    """Root isolation per pair on a dense grid, refined with brentq."""
    bottom, top = fam.y_range()
    ys = np.linspace(bottom, top, 1501)
    grid = np.array([fam.times_at(y) for y in ys])
    roots = []
    for i in range(len(fam)):
        for j in range(i + 1, len(fam)):
            gv = grid[:, i] - grid[:, j]
            g = lambda y: fam.curves[i].time_at(y) - fam.curves[j].time_at(y)
            roots.extend(ys[gv == 0.0])
            for a in np.flatnonzero(gv[:-1] * gv[1:] < 0.0):
                roots.append(brentq(g, ys[a], ys[a + 1], xtol=1e-14))
    return sorted(roots, reverse=True)


@pytest.mark.parametrize("seed", range(3))
def test_rank_queries_against_enumeration(seed):
    checked = 0
    for fam in _apex_free_families(seed, 25):
        roots = _pairwise_crossings(fam)
        bottom, top = fam.y_range()
        assert count_vertices_above(fam, top) == 0
        assert count_vertices_above(fam, bottom) == len(roots)
        if not roots:
            continue
        for y in np.linspace(roots[-1], roots[0], 7):
            if min(abs(y - r) for r in roots) > 1e-7:
                assert count_vertices_above(fam, y) == sum(r > y for r in roots)
        picks = {1, len(roots)} | set(random.Random(seed).sample(range(1, len(roots) + 1), min(10, len(roots))))
        for k in sorted(picks):
            assert kth_highest_vertex(fam, k, limit=0 if k % 2 else None) == pytest.approx(roots[k - 1], abs=1e-8)
        checked += 1
    assert checked > 5


def test_parallel_tails_cross_at_most_once():
    for fam in _apex_free_families(7, 30):
        bottom, top = fam.y_range()
        grid = np.array([fam.times_at(y) for y in np.linspace(bottom, top, 1501)])
        for i in range(len(fam)):
            for j in range(i + 1, len(fam)):
                if fam.curves[i].direction == fam.curves[j].direction:
                    d = grid[:, i] - grid[:, j]
                    assert int(np.sum(d[:-1] * d[1:] < 0)) <= 1


def test_rank_out_of_range():
    inst = Instance.from_polar([(1.0, 0.0), (1.0, 0.0)])
    fam = extend_pseudolines(build_curve_family(inst, (0.0, 2.0)))
    with pytest.raises(ValueError):
        kth_highest_vertex(fam, 2)
    with pytest.raises(ValueError):
        count_vertices_above(build_curve_family(inst, (0.0, 2.0)), 1.0)


@pytest.mark.parametrize("n", [1, 4, 7])
def test_polygon_needs_no_movement(n):
    lam, w = compute_lambda_c(regular_instance(n, 0.1))
    assert lam == 0.0 and w.feasible


def test_closed_form_values():
    lam, _ = compute_lambda_c(Instance.from_polar([(0.5, 0.0)]))
    assert lam == 0.5
    lam, w = compute_lambda_c(Instance.from_polar([(1.0, 0.0), (1.0, 0.0)]))
    assert lam == pytest.approx(math.sqrt(2), abs=1e-9)
    # dense placement grid with exact bottleneck assignments
    grid = min(bottleneck_assignment(Instance.from_polar([(1.0, 0.0), (1.0, 0.0)]), Placement(2, t))
               for t in np.linspace(0, math.pi, 20001))
    assert grid == pytest.approx(lam, abs=1e-6)


@pytest.mark.parametrize("seed", range(4))
def test_against_brute_force(seed):
    rng = random.Random(seed)
    for _ in range(12):
        inst = random_instance(rng, rng.randint(1, 8), clustered=rng.random() < 0.4)
        lam, w = compute_lambda_c(inst, seed=seed, limit=rng.choice([0, None]))
        assert lam == pytest.approx(brute_lambda_c(inst), abs=1e-9)
        assert w.feasible and w.max_move == pytest.approx(lam, abs=1e-9)
        below = lam * (1 - 1e-6) - 1e-12
        assert below < 0 or not feasible(inst, below).feasible


def test_seed_does_not_change_result():
    inst = random_instance(random.Random(99), 40, clustered=True)
    values = {compute_lambda_c(inst, seed=s, limit=0)[0] for s in range(3)}
    assert len(values) == 1
