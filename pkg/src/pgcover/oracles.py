"""Slow, direct reference implementations used to check the fast solvers.

Nothing here reuses the fast code paths; only :mod:`pgcover.geom` is shared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from pgcover.geom import Instance, Placement, sensor_vertex_distance

TAU_TOL = 1e-10


@dataclass(frozen=True)
class ExplicitBipartiteGraph:
    n1: int
    n2: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("duplicate edge")
        for a, b in self.edges:
            if not (0 <= a < self.n1 and 0 <= b < self.n2):
                raise ValueError(f"edge {(a, b)} out of range")

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n1)]
        for a, b in self.edges:
            adj[a].append(b)
        return adj


def _augmenting_path_size(adj: Sequence[Sequence[int]], n2: int) -> int:
    match_right = [-1] * n2

    def augment(a: int, seen: list[bool]) -> bool:
        for b in adj[a]:
            if not seen[b]:
                seen[b] = True
                if match_right[b] < 0 or augment(match_right[b], seen):
                    match_right[b] = a
                    return True
        return False

    size = 0
    for a in range(len(adj)):
        if augment(a, [False] * n2):
            size += 1
    return size


def max_matching_generic(g: ExplicitBipartiteGraph) -> int:
    """Maximum matching size by repeated augmenting-path search."""
    return _augmenting_path_size(g.adjacency(), g.n2)


def hungarian_min_weight(costs: Sequence[Sequence[float]]) -> tuple[list[int], float]:
    """Minimum-cost perfect assignment of a square matrix (row ``i`` -> column ``result[i]``).

    Shortest augmenting paths with vertex potentials, ``O(n^3)``.
    """
    a = [list(map(float, row)) for row in costs]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("cost matrix must be square")
    if n == 0:
        return [], 0.0
    inf = math.inf
    u = [0.0] * (n + 1)
    v = [0.0] * (n + 1)
    p = [0] * (n + 1)  # p[col] = row matched to col (1-based, 0 = free)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [inf] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = inf
            j1 = 0
            for j in range(1, n + 1):
                if not used[j]:
                    cur = a[i0 - 1][j - 1] - u[i0] - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while True:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
            if j0 == 0:
                break
    result = [0] * n
    for j in range(1, n + 1):
        result[p[j] - 1] = j - 1
    return result, sum(a[i][result[i]] for i in range(n))


def _distance_matrix(inst: Instance, placement: Placement) -> list[list[float]]:
    return [[sensor_vertex_distance(s, placement, j) for j in range(inst.n)] for s in inst.sensors]


def bottleneck_assignment(inst: Instance, placement: Placement) -> float:
    """Least possible largest distance over perfect assignments at a fixed placement."""
    dist = _distance_matrix(inst, placement)
    values = sorted({d for row in dist for d in row})
    n = inst.n
    lo, hi = 0, len(values) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        cap = values[mid]
        adj = [[j for j in range(n) if dist[i][j] <= cap] for i in range(n)]
        if _augmenting_path_size(adj, n) == n:
            hi = mid
        else:
            lo = mid + 1
    return values[lo]


# ---------------------------------------------------------------- min-max by brute force


def _sweep_distances(inst: Instance, tau: np.ndarray) -> np.ndarray:
    """Distances ``[k, i, j]`` from sensor ``i`` to vertex ``j`` at sweep time ``tau[k]``.

    Vertex ``j`` sits at angle ``-j*pitch - tau`` during the sweep.
    """
    r = np.array([s.radius for s in inst.sensors])
    beta = np.array([s.angle for s in inst.sensors])
    j = np.arange(inst.n)
    phi = -j[None, None, :] * inst.pitch - tau[:, None, None]
    delta = phi - beta[None, :, None]
    sq = 1.0 + r[None, :, None] ** 2 - 2.0 * r[None, :, None] * np.cos(delta)
    return np.sqrt(np.maximum(sq, 0.0))


def _threshold_times(inst: Instance, lam: float) -> np.ndarray:
    """Sweep times in ``[0, pitch]`` at which some sensor-vertex distance equals ``lam``."""
    h = inst.pitch
    times = [0.0, h]
    for s in inst.sensors:
        if s.radius <= 1e-12:
            continue
        c = (1.0 + s.radius**2 - lam * lam) / (2.0 * s.radius)
        if not -1.0 - 1e-9 <= c <= 1.0 + 1e-9:
            continue
        g = math.acos(min(1.0, max(-1.0, c)))
        for j in range(inst.n):
            base = -j * h - s.angle
            for t in (base - g, base + g):
                t = math.fmod(t, 2 * math.pi)
                if t < 0:
                    t += 2 * math.pi
                if t <= h + 1e-15:
                    times.append(min(t, h))
    return np.unique(np.array(times))


def brute_feasible(inst: Instance, lam: float, tol: float = TAU_TOL) -> bool:
    """Test a static matching at every threshold moment of the sweep and between them."""
    if lam < 0.0:
        raise ValueError("lam must be non-negative")
    times = _threshold_times(inst, lam)
    probes = np.concatenate([times, (times[:-1] + times[1:]) / 2.0])
    n = inst.n
    for chunk in np.array_split(probes, max(1, len(probes) // 256)):
        dist = _sweep_distances(inst, chunk)
        ok = dist <= lam + tol
        for k in range(len(chunk)):
            grid = ok[k]
            if not grid.any(axis=1).all() or not grid.any(axis=0).all():
                continue
            adj = [np.flatnonzero(grid[i]).tolist() for i in range(n)]
            if _augmenting_path_size(adj, n) == n:
                return True
    return False


def _monotone_pieces(inst: Instance) -> list[tuple[int, int, float, float]]:
    """Split each sensor-vertex distance over the sweep at its nearest/farthest crossings."""
    h = inst.pitch
    pieces = []
    for i, s in enumerate(inst.sensors):
        for j in range(inst.n):
            cuts = [0.0, h]
            if s.radius > 1e-12:
                for shift in (0.0, math.pi):
                    t = math.fmod(-j * h - s.angle - shift, 2 * math.pi)
                    if t < 0:
                        t += 2 * math.pi
                    if 0.0 < t < h:
                        cuts.append(t)
            cuts.sort()
            for a, b in zip(cuts, cuts[1:]):
                if b - a > 1e-15:
                    pieces.append((i, j, a, b))
    return pieces


def _piece_values(inst: Instance, who: np.ndarray, tau: np.ndarray) -> np.ndarray:
    r = np.array([s.radius for s in inst.sensors])[who[:, 0]]
    beta = np.array([s.angle for s in inst.sensors])[who[:, 0]]
    phi = -who[:, 1] * inst.pitch
    if tau.ndim == 2:
        r, beta, phi = r[:, None], beta[:, None], phi[:, None]
    sq = 1.0 + r * r - 2.0 * r * np.cos(phi - tau - beta)
    return np.sqrt(np.maximum(sq, 0.0))


def _crossing_ordinates(inst: Instance, samples: int = 17, rounds: int = 80) -> np.ndarray:
    """Ordinates where two distance pieces meet, over the whole pitch and all pairs."""
    pieces = _monotone_pieces(inst)
    m = len(pieces)
    if m < 2:
        return np.empty(0)
    who = np.array([(p[0], p[1]) for p in pieces])
    lo = np.array([p[2] for p in pieces])
    hi = np.array([p[3] for p in pieces])
    a_idx, b_idx = np.triu_indices(m, 1)
    keep = (who[a_idx] != who[b_idx]).any(axis=1)
    start = np.maximum(lo[a_idx], lo[b_idx])
    stop = np.minimum(hi[a_idx], hi[b_idx])
    keep &= stop >= start
    a_idx, b_idx, start, stop = a_idx[keep], b_idx[keep], start[keep], stop[keep]
    out = []
    frac = np.linspace(0.0, 1.0, samples)
    for lo_k in range(0, len(a_idx), 20000):
        sl = slice(lo_k, lo_k + 20000)
        A, B, s0, s1 = a_idx[sl], b_idx[sl], start[sl], stop[sl]
        grid = s0[:, None] + (s1 - s0)[:, None] * frac[None, :]
        diff = _piece_values(inst, who[A], grid) - _piece_values(inst, who[B], grid)
        zero = np.argwhere(diff == 0.0)
        for p, k in zero:
            out.append(_piece_values(inst, who[A[p : p + 1]], grid[p : p + 1, k])[0])
        change = np.argwhere(diff[:, :-1] * diff[:, 1:] < 0.0)
        if len(change) == 0:
            continue
        p, k = change[:, 0], change[:, 1]
        left, right = grid[p, k], grid[p, k + 1]
        sign_left = np.sign(diff[p, k])
        wa, wb = who[A[p]], who[B[p]]
        for _ in range(rounds):
            mid = 0.5 * (left + right)
            d = _piece_values(inst, wa, mid) - _piece_values(inst, wb, mid)
            same = np.sign(d) == sign_left
            left = np.where(same, mid, left)
            right = np.where(same, right, mid)
        mid = 0.5 * (left + right)
        out.extend((0.5 * (_piece_values(inst, wa, mid) + _piece_values(inst, wb, mid))).tolist())
    return np.array(out)


def brute_lambda_c(inst: Instance) -> float:
    """Smallest candidate value accepted by :func:`brute_feasible`.

    Candidates: every ``1 - r``, every distance at sweep time 0, and every
    value where two distance pieces meet during the sweep (any directions).
    """
    cands = [1.0 - s.radius for s in inst.sensors]
    cands.extend(_sweep_distances(inst, np.array([0.0])).ravel().tolist())
    cands.extend(_crossing_ordinates(inst).tolist())
    values = np.unique(np.array(cands))
    values = values[values >= max(1.0 - s.radius for s in inst.sensors) - 1e-15]
    lo, hi = 0, len(values) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if brute_feasible(inst, float(values[mid])):
            hi = mid
        else:
            lo = mid + 1
    return float(values[lo])


# ---------------------------------------------------------------- min-sum upper bound


def grid_minsum_upper(inst: Instance, m: int) -> float:
    """Least optimal total movement over ``m`` evenly spaced placements of one pitch.

    A placement whose sum of row minima already reaches the best total so
    far cannot improve it and skips the assignment solve.
    """
    if m < 1:
        raise ValueError("m must be positive")
    r = np.array([s.radius for s in inst.sensors])[None, :, None]
    beta = np.array([s.angle for s in inst.sensors])[None, :, None]
    j = np.arange(inst.n)
    best = math.inf
    ts = np.arange(m) * (inst.pitch / m)
    for chunk in np.array_split(ts, max(1, m // 64)):
        ang = chunk[:, None, None] - j[None, None, :] * inst.pitch
        cost = np.sqrt(np.maximum(1.0 + r * r - 2.0 * r * np.cos(ang - beta), 0.0))
        floor = cost.min(axis=2).sum(axis=1)
        for k in np.argsort(floor):
            if floor[k] >= best:
                break
            rows, cols = linear_sum_assignment(cost[k])
            best = min(best, float(cost[k][rows, cols].sum()))
    return best
