"""Acceptance criteria 1-9.

Each test records one ``CRITERION k: PASS|FAIL`` line; the lines are printed
together at the end of the pytest run (and directly when this file is run
as a script).
"""

from __future__ import annotations

import math
import random
import statistics
import time

import numpy as np
import pytest
from scipy.optimize import linear_sum_assignment

from conftest import ACCEPTANCE_LINES, random_circular_intervals, random_instance
from pgcover.geom import Instance, Placement
from pgcover.matching_dynamic import DynamicCircularMatching
from pgcover.matching_static import CircularConvexGraph, max_matching_circular
from pgcover.minmax_decision import feasible
from pgcover.minmax_opt import compute_lambda_c, trivial_lower_bound
from pgcover.minsum import CirclePointSet, min_weight_circle_matching, minsum_approx, minsum_boundary, minsum_lower_bound
from pgcover.oracles import (
    ExplicitBipartiteGraph,
    brute_feasible,
    brute_lambda_c,
    grid_minsum_upper,
    hungarian_min_weight,
    max_matching_generic,
)

pytestmark = pytest.mark.slow


def record(k: int, ok: bool, detail: str) -> None:
    line = f"CRITERION {k}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES[k] = line
    print(line)


def _mixed_instance(rng: random.Random, n: int) -> Instance:
    return random_instance(rng, n, clustered=rng.random() < 0.3)


def test_criterion_1_dynamic_matches_static():
    t0 = time.perf_counter()
    steps = bad = 0
    for n2 in (8, 16, 32):
        for seed in range(20):
            rng = random.Random(1000 * n2 + seed)
            d = DynamicCircularMatching(n2)
            live = []
            for step in range(500):
                if live and rng.random() < 0.45:
                    d.delete(live.pop(rng.randrange(len(live))))
                else:
                    (b, e), = random_circular_intervals(rng, n2, 1)
                    d.insert(step, b, e)
                    live.append(step)
                steps += 1
                bad += d.size != max_matching_circular(d.graph()).size
    wall = time.perf_counter() - t0
    ok = bad == 0 and wall < 60
    record(1, ok, f"{steps} update steps, {bad} size mismatches, {wall:.1f}s")
    assert ok


def test_criterion_2_circular_matching_exact():
    t0 = time.perf_counter()
    rng = random.Random(2)
    bad = 0
    for _ in range(1000):
        n2 = rng.randint(1, 64)
        g = CircularConvexGraph.of(n2, random_circular_intervals(rng, n2, rng.randint(0, n2 + 8)))
        explicit = ExplicitBipartiteGraph(len(g.vertices), n2, tuple((v.id, p) for v in g.vertices for p in g.neighbors(v)))
        bad += max_matching_circular(g).size != max_matching_generic(explicit)
    wall = time.perf_counter() - t0
    ok = bad == 0 and wall < 60
    record(2, ok, f"1000 graphs, {bad} mismatches, {wall:.1f}s")
    assert ok


def test_criterion_3_decision_matches_brute_force():
    t0 = time.perf_counter()
    rng = random.Random(3)
    bad = 0
    for _ in range(200):
        inst = _mixed_instance(rng, rng.randint(1, 12))
        base = trivial_lower_bound(inst)
        # spread probes over the interesting range and include the exact optimum
        probes = [rng.uniform(0, 2.0), rng.uniform(base, base + 0.5), base, rng.uniform(0, base + 1e-3)]
        probes.append(brute_lambda_c(inst) if inst.n <= 6 else rng.uniform(base, 2.0))
        for lam in probes:
            bad += feasible(inst, lam).feasible != brute_feasible(inst, lam)
    wall = time.perf_counter() - t0
    ok = bad == 0 and wall < 120
    record(3, ok, f"200 instances x 5 lambda, {bad} disagreements, {wall:.1f}s")
    assert ok


def test_criterion_4_optimum_matches_brute_force():
    t0 = time.perf_counter()
    rng = random.Random(4)
    worst = 0.0
    bracket_bad = 0
    for k in range(100):
        inst = _mixed_instance(rng, rng.randint(1, 10))
        lam, w = compute_lambda_c(inst, seed=k)
        worst = max(worst, abs(lam - brute_lambda_c(inst)))
        below = lam * (1 - 1e-6) - 1e-12
        bracket_bad += not (feasible(inst, lam).feasible and (below < 0 or not feasible(inst, below).feasible))
    wall = time.perf_counter() - t0
    ok = worst <= 1e-9 and bracket_bad == 0 and wall < 300
    record(4, ok, f"100 instances, max |diff| {worst:.2e}, {bracket_bad} bracket failures, {wall:.1f}s")
    assert ok


def test_criterion_5_closed_forms():
    lam1, _ = compute_lambda_c(Instance.from_polar([(0.5, 0.0)]))
    two = Instance.from_polar([(1.0, 0.0), (1.0, 0.0)])
    lam2, _ = compute_lambda_c(two)
    ms = minsum_boundary(two).cost
    ok = lam1 == 0.5 and abs(lam2 - math.sqrt(2)) <= 1e-9 and abs(ms - 2.0) <= 1e-9
    record(5, ok, f"single sensor {lam1!r}, coincident pair {lam2:.12f}, min-sum {ms:.12f}")
    assert ok


def _hungarian_at(inst: Instance, p: Placement) -> float:
    return hungarian_min_weight([[math.dist(s.xy, p.vertex_xy(j)) for j in range(inst.n)] for s in inst.sensors])[1]


def test_criterion_6_boundary_minsum_exact():
    t0 = time.perf_counter()
    rng = random.Random(6)
    worst = 0.0
    beaten = 0
    for _ in range(100):
        inst = random_instance(rng, rng.randint(1, 10), boundary=True, clustered=rng.random() < 0.3)
        cost = minsum_boundary(inst).cost
        anchored = min(_hungarian_at(inst, Placement.canonical(inst.n, s.angle)) for s in inst.sensors)
        worst = max(worst, abs(cost - anchored))
        # random placements: all assignment problems solved in one vectorized pass
        r = np.array([s.radius for s in inst.sensors])[:, None]
        beta = np.array([s.angle for s in inst.sensors])[:, None]
        j = np.arange(inst.n)[None, :]
        for t in np.array([rng.uniform(0, 2 * math.pi) for _ in range(1000)]):
            c = np.sqrt(np.maximum(1 + r * r - 2 * r * np.cos(t - j * inst.pitch - beta), 0.0))
            rows, cols = linear_sum_assignment(c)
            beaten += c[rows, cols].sum() < cost - 1e-9
    wall = time.perf_counter() - t0
    ok = worst <= 1e-9 and beaten == 0 and wall < 300
    record(6, ok, f"100 instances, max |diff| {worst:.2e}, {beaten} placements beat it, {wall:.1f}s")
    assert ok


def test_criterion_7_approximation_bounds():
    t0 = time.perf_counter()
    rng = random.Random(7)
    chain_bad = ratio_bad = 0
    worst_ratio = 0.0
    for _ in range(200):
        inst = _mixed_instance(rng, rng.randint(1, 50))
        cost = minsum_approx(inst).cost
        chain = minsum_lower_bound(inst) + minsum_boundary(inst, require_boundary=False).cost
        chain_bad += cost > chain + 1e-9
        upper = grid_minsum_upper(inst, 10**4)
        if upper > 0:
            worst_ratio = max(worst_ratio, cost / upper)
        ratio_bad += cost > 3 * upper + 1e-9
    wall = time.perf_counter() - t0
    ok = chain_bad == 0 and ratio_bad == 0 and wall < 300
    record(7, ok, f"200 instances, {chain_bad} chain and {ratio_bad} ratio violations, "
                  f"worst cost/grid {worst_ratio:.3f}, {wall:.1f}s")
    assert ok


def _crossing(red, blue, assignment) -> bool:
    two_pi = 2 * math.pi
    chords = [(red[i] % two_pi, blue[j] % two_pi) for i, j in enumerate(assignment)]
    for p in range(len(chords)):
        a, b = sorted(chords[p])
        for q in range(p + 1, len(chords)):
            c, d = chords[q]
            if len({round(x, 12) for x in (a, b, c, d)}) < 4:
                continue
            if (a < c < b) != (a < d < b):
                return True
    return False


def test_criterion_8_circle_matching_engine():
    t0 = time.perf_counter()
    rng = random.Random(8)
    worst = 0.0
    crossing = 0
    for _ in range(500):
        n = rng.randint(1, 20)
        red = [rng.uniform(0, 2 * math.pi) for _ in range(n)]
        blue = [rng.uniform(0, 2 * math.pi) for _ in range(n)]
        res = min_weight_circle_matching(CirclePointSet.of(red), CirclePointSet.of(blue))
        ref = hungarian_min_weight([[2 * abs(math.sin((a - b) / 2)) for b in blue] for a in red])[1]
        worst = max(worst, abs(res.total_cost - ref))
        crossing += _crossing(red, blue, res.assignment)
    wall = time.perf_counter() - t0
    ok = worst <= 1e-9 and crossing == 0 and wall < 120
    record(8, ok, f"500 sets, max |diff| {worst:.2e}, {crossing} crossing matchings, {wall:.1f}s")
    assert ok


def _median_feasible_time(n: int, runs: int = 5) -> float:
    inst = random_instance(random.Random(n), n)
    lam = trivial_lower_bound(inst) + 0.25
    times = []
    for _ in range(runs):
        t0 = time.perf_counter()
        feasible(inst, lam)
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def test_criterion_9_decision_scaling():
    t0 = time.perf_counter()
    small = _median_feasible_time(2**12)
    large = _median_feasible_time(2**14)
    ratio = large / small
    wall = time.perf_counter() - t0
    verdict = "within 5x" if ratio <= 5 else "within the 8x soft limit" if ratio <= 8 else "above 8x"
    ok = ratio <= 8 and wall < 600
    record(9, ok, f"median feasible() {small:.3f}s at 2^12, {large:.3f}s at 2^14, ratio {ratio:.2f} ({verdict})")
    assert ok


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
