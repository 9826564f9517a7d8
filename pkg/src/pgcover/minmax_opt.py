"""Exact min-max movement: the smallest ``lam`` accepted by the decision procedure.

Outline
-------
1. If every sensor can reach the circle within ``max(1 - r)`` at some common
   moment, that lower bound is the answer.
2. Otherwise binary-search the ``n**2`` sensor-vertex distances of the
   canonical placement (kept implicitly as ``2n`` sorted arrays) for two
   consecutive values ``lo < hi`` with ``lo`` infeasible and ``hi`` feasible.
3. Inside the open band ``(lo, hi)`` each sensor contributes at most one
   rising and one falling distance curve over the sweep.  The answer is
   ``hi`` or the ordinate of a crossing of two such curves.
4. Extending each curve by slope-one tails makes the family pairwise
   crossing at most once, so the crossings between two horizontal lines
   are exactly the inversions between the left-to-right curve orders on
   those lines.  Random crossings in the band serve as pivots for the
   decision procedure until few crossings remain; those are enumerated and
   searched directly.
"""

from __future__ import annotations

import bisect
import math
import random
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from pgcover.geom import CENTER_EPS, Instance, chord_distance
from pgcover.kernels import count_inversions
from pgcover.minmax_decision import FeasibilityWitness, feasible

RISING = 1
FALLING = -1
# vertex offsets this close to a band edge are treated as lying on it
_SNAP = 1e-11


def trivial_lower_bound(inst: Instance) -> float:
    """Largest distance from a sensor to its nearest boundary point."""
    return max(1.0 - s.radius for s in inst.sensors)


# ---------------------------------------------------------------- sorted arrays


def _run_values(radius, start, pitch: float, k):
    """Chord length to the vertex ``k`` steps along a run (vectorized)."""
    a = start + k * pitch
    return np.sqrt(np.maximum(1.0 + radius * radius - 2.0 * radius * np.cos(a), 0.0))


class _DistanceRun(Sequence[float]):
    """Distances from one sensor to vertices whose offset from it is ``start + k*pitch``."""

    def __init__(self, radius: float, start: float, pitch: float, length: int) -> None:
        self.radius = radius
        self.start = start
        self.pitch = pitch
        self.length = length

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, k):  # type: ignore[override]
        if isinstance(k, slice):
            return [self[i] for i in range(*k.indices(self.length))]
        if k < 0:
            k += self.length
        if not 0 <= k < self.length:
            raise IndexError(k)
        return float(_run_values(self.radius, self.start, self.pitch, k))


class SortedDistanceArrays(Sequence[_DistanceRun]):
    """All sensor-vertex distances at offset 0, split into ``2n`` nondecreasing arrays.

    For sensor ``i`` the angular offsets of the vertices form an arithmetic
    progression of step ``pitch``.  Offsets in ``[0, pi]`` (walking one way)
    and offsets in ``(pi, 2*pi)`` (walking the other way) each give a sorted
    run of distances.  Entry ``2*i`` is the first run, ``2*i + 1`` the second.
    """

    def __init__(self, inst: Instance) -> None:
        n, h = inst.n, inst.pitch
        runs: list[_DistanceRun] = []
        for s in inst.sensors:
            if s.radius <= CENTER_EPS:
                runs.append(_DistanceRun(0.0, 0.0, h, n))
                runs.append(_DistanceRun(0.0, 0.0, h, 0))
                continue
            c = math.fmod(s.angle, h)
            near = min(n, int(math.floor((math.pi - c) / h)) + 1)
            runs.append(_DistanceRun(s.radius, c, h, near))
            runs.append(_DistanceRun(s.radius, h - c, h, n - near))
        self._runs = runs
        self.pitch = h
        self._radius = np.array([r.radius for r in runs])
        self._start = np.array([r.start for r in runs])
        self._length = np.array([r.length for r in runs], dtype=np.int64)

    def __len__(self) -> int:
        return len(self._runs)

    def __getitem__(self, i):  # type: ignore[override]
        return self._runs[i]

    def all_values(self) -> list[float]:
        return [v for run in self._runs for v in run]

    def values_at(self, k: np.ndarray) -> np.ndarray:
        """Element ``k[a]`` of every run ``a`` (indices must be in range)."""
        return _run_values(self._radius, self._start, self.pitch, k)

    def count_at_most(self, x: float) -> np.ndarray:
        """Per run, the number of elements ``<= x``."""
        r, L = self._radius, self._length
        with np.errstate(divide="ignore", invalid="ignore"):
            c = np.clip((1.0 + r * r - x * x) / (2.0 * r), -1.0, 1.0)
            est = np.floor((np.arccos(c) - self._start) / self.pitch) + 1.0
        est = np.where(r > 0.0, est, np.where(x >= 1.0, L, 0))
        k = np.clip(np.nan_to_num(est), 0, L).astype(np.int64)
        # the closed form can be off by one ulp-sized step; settle on exact comparisons
        for _ in range(4):
            up = (k < L) & (self.values_at(np.minimum(k, L - 1)) <= x)
            down = (k > 0) & (self.values_at(np.maximum(k - 1, 0)) > x)
            if not up.any() and not down.any():
                return k
            k = k + up - down
        raise AssertionError("rank correction did not settle")


def _ranges_generic(arrays: Sequence[Sequence[float]], lo: float, hi: float):
    out = []
    for a in arrays:
        i = bisect.bisect_right(a, lo)
        j = bisect.bisect_left(a, hi, i)
        if j > i:
            out.append((a[(i + j) // 2], j - i))
    return out


def _ranges_distances(arrays: SortedDistanceArrays, lo: float, hi: float):
    i = arrays.count_at_most(lo)
    # elements < hi are those <= the largest double below hi
    j = arrays.count_at_most(float(np.nextafter(hi, -np.inf)))
    live = j > i
    mid = (i + j) // 2
    med = arrays.values_at(np.where(live, mid, 0))
    return list(zip(med[live].tolist(), (j - i)[live].tolist()))


def search_sorted_arrays(
    arrays: Sequence[Sequence[float]],
    oracle: Callable[[float], bool],
    lower: float = 0.0,
) -> tuple[float, float]:
    """Locate the oracle's threshold among the union of sorted arrays.

    Returns ``(below, above)``: ``above`` is the smallest element accepted by
    ``oracle`` and ``below`` the largest element under it (or ``lower`` when
    no element lies between ``lower`` and ``above``).  ``oracle`` must be
    monotone and is assumed false at ``lower`` and true at the largest element.
    Each round probes the weighted median of the per-array medians, which
    removes at least a quarter of the remaining elements.
    """
    top = max((a[len(a) - 1] for a in arrays if len(a)), default=None)
    if top is None:
        raise ValueError("no elements to search")
    ranges = _ranges_distances if isinstance(arrays, SortedDistanceArrays) else _ranges_generic
    lo, hi = lower, top
    while True:
        medians = sorted(ranges(arrays, lo, hi))
        if not medians:
            return lo, hi
        half = sum(w for _, w in medians) / 2.0
        acc = 0
        for value, w in medians:
            acc += w
            if acc >= half:
                pivot = value
                break
        if oracle(pivot):
            hi = pivot
        else:
            lo = pivot


# ---------------------------------------------------------------- curve family


@dataclass(frozen=True)
class DistanceCurve:
    """One sensor-vertex distance over the part of the sweep where it lies in the band.

    In its own range the curve is the inverse map ``y -> direction*angle(y) + shift``
    where ``angle(y)`` is the offset at which the sensor is ``y`` away from
    the circle.  ``multiplicity`` counts identical curves merged into this one.
    """

    sensor: int
    vertex: int
    direction: int
    radius: float
    shift: float
    t_low: float
    t_high: float
    y_low: float
    y_high: float
    multiplicity: int = 1

    def time_at(self, y: float) -> float:
        """Sweep time at which the (extended) curve has value ``y``."""
        if y < self.y_low:
            return self.t_low - self.direction * (self.y_low - y)
        if y > self.y_high:
            return self.t_high + self.direction * (y - self.y_high)
        return self.direction * _offset_for_distance(self.radius, y) + self.shift

    def value_at(self, t: float) -> float:
        lo, hi = sorted((self.t_low, self.t_high))
        if not lo <= t <= hi:
            raise ValueError("time outside the curve's domain")
        return chord_distance(self.radius, self.direction * (t - self.shift))


def _offset_for_distance(radius: float, y):
    c = (1.0 + radius * radius - y * y) / (2.0 * radius)
    return np.arccos(np.clip(c, -1.0, 1.0))


@dataclass(frozen=True)
class CurveFamily:
    band: tuple[float, float]
    pitch: float
    curves: tuple[DistanceCurve, ...]
    extended: bool = False

    def __len__(self) -> int:
        return len(self.curves)

    def _columns(self):
        cols = getattr(self, "_cache", None)
        if cols is None:
            c = self.curves
            cols = tuple(
                np.array([getattr(x, name) for x in c], dtype=float)
                for name in ("direction", "radius", "shift", "t_low", "t_high", "y_low", "y_high")
            )
            object.__setattr__(self, "_cache", cols)
        return cols

    def times_at(self, y: float) -> np.ndarray:
        """Sweep times of all extended curves on the horizontal line ``y``."""
        d, r, shift, t_lo, t_hi, y_lo, y_hi = self._columns()
        yc = np.clip(y, y_lo, y_hi)
        arg = np.clip((1.0 + r * r - yc * yc) / (2.0 * r), -1.0, 1.0)
        t = d * np.arccos(arg) + shift
        t = np.where(y < y_lo, t_lo - d * (y_lo - y), t)
        return np.where(y > y_hi, t_hi + d * (y - y_hi), t)

    def order_at(self, y: float, above: bool = True) -> np.ndarray:
        """Curve indices left to right along the line ``y``.

        Curves meeting exactly on the line are ordered as just above it
        (``above=True``) or just below it.
        """
        d = self._columns()[0]
        tie = -d if above else d
        return np.lexsort((np.arange(len(d)), tie, self.times_at(y)))

    def y_range(self) -> tuple[float, float]:
        """Bounds strictly containing every crossing of the extended family."""
        _, _, _, _, _, y_lo, y_hi = self._columns()
        return float(y_lo.min()) - self.pitch - 1.0, float(y_hi.max()) + self.pitch + 1.0


def farthest_distances_inside(inst: Instance, gap: tuple[float, float]) -> list[float]:
    """Sorted distinct values ``1 + r`` lying strictly inside ``gap``.

    A curve whose sensor's farthest distance falls inside the band stops
    short of its top edge; splitting the band at these values keeps every
    curve spanning its band, which is what makes the extended family cross
    pairwise at most once.
    """
    lo, hi = gap
    return sorted({1.0 + s.radius for s in inst.sensors if lo < 1.0 + s.radius < hi})


def build_curve_family(inst: Instance, gap: tuple[float, float]) -> CurveFamily:
    """Rising and falling distance curves with values inside the open band ``gap``.

    No distance of the canonical placement may lie strictly inside ``gap``,
    and its lower end must be at least :func:`trivial_lower_bound`.  The
    extended family is a set of pseudolines when in addition
    :func:`farthest_distances_inside` is empty for ``gap``.
    """
    lo, hi = gap
    if not lo < hi:
        raise ValueError("gap must be a nonempty interval")
    if lo < trivial_lower_bound(inst) - 1e-12:
        raise ValueError("gap lies below the trivial lower bound")
    n, h = inst.n, inst.pitch
    found: dict[tuple, DistanceCurve] = {}
    for i, s in enumerate(inst.sensors):
        r = s.radius
        if r <= CENTER_EPS or lo >= 1.0 + r:
            continue
        a_lo = float(_offset_for_distance(r, lo))
        a_hi = float(_offset_for_distance(r, min(hi, 1.0 + r)))
        c = math.fmod(s.angle, h)
        # vertex offsets are c + k*h; the rising curve comes from the last one at or before a_lo
        start = c + math.floor((a_lo - c) / h) * h
        if start > a_lo + _SNAP:
            start -= h
        elif start + h <= a_lo + _SNAP:
            start += h
        # falling side uses the mirrored offsets (-c) + k*h; first one at or after a_hi
        cm = math.fmod(h - c, h)
        top = cm + math.ceil((a_hi - cm) / h) * h
        if top < a_hi - _SNAP:
            top += h
        elif top - h >= a_hi - _SNAP:
            top -= h
        pieces = (
            (RISING, -start, a_lo - start, min(a_hi - start, h), start - s.angle),
            (FALLING, top, top - a_hi, min(top - a_lo, h), -top - s.angle),
        )
        for direction, shift, t0, t1, rel in pieces:
            t0 = max(t0, 0.0)
            if not t1 > t0:
                continue
            y0 = chord_distance(r, direction * (t0 - shift))
            y1 = chord_distance(r, direction * (t1 - shift))
            if direction == RISING:
                t_low, t_high, y_low, y_high = t0, t1, y0, y1
            else:
                t_low, t_high, y_low, y_high = t1, t0, y1, y0
            vertex = round(rel / h) % n
            key = (direction, r, shift)
            prev = found.get(key)
            if prev is not None:
                found[key] = DistanceCurve(**{**prev.__dict__, "multiplicity": prev.multiplicity + 1})
            else:
                found[key] = DistanceCurve(i, vertex, direction, r, shift, t_low, t_high, y_low, y_high)
    return CurveFamily((lo, hi), h, tuple(found.values()))


def extend_pseudolines(family: CurveFamily) -> CurveFamily:
    """Attach slope-one tails so every curve is defined for all values.

    The tails are implicit in :meth:`DistanceCurve.time_at`; this marks the
    family as extended so rank queries accept it.
    """
    return CurveFamily(family.band, family.pitch, family.curves, True)


# ---------------------------------------------------------------- arrangement ranks


def _relative(order_from: np.ndarray, order_to: np.ndarray) -> list[int]:
    """Positions in ``order_from`` of the curves listed in ``order_to``."""
    pos = np.empty(len(order_from), dtype=np.int64)
    pos[order_from] = np.arange(len(order_from))
    return pos[order_to].tolist()


def _require_extended(family: CurveFamily) -> None:
    if not family.extended:
        raise ValueError("curve family must be extended first")


def count_vertices_above(family: CurveFamily, y: float) -> int:
    """Number of pairwise crossings of the extended family strictly above ``y``."""
    _require_extended(family)
    if len(family) < 2:
        return 0
    _, top = family.y_range()
    return count_inversions(_relative(family.order_at(top), family.order_at(y)))


def _inverted_pairs(perm: list[int]) -> list[tuple[int, int]]:
    """All positions ``(i, j)`` with ``i < j`` and ``perm[i] > perm[j]`` (merge sort)."""
    out: list[tuple[int, int]] = []

    def sort(lo: int, hi: int) -> list[int]:
        if hi - lo == 1:
            return [lo]
        mid = (lo + hi) // 2
        left, right = sort(lo, mid), sort(mid, hi)
        merged = []
        a = b = 0
        while a < len(left) and b < len(right):
            if perm[left[a]] <= perm[right[b]]:
                merged.append(left[a])
                a += 1
            else:
                for k in range(a, len(left)):
                    out.append((left[k], right[b]))
                merged.append(right[b])
                b += 1
        merged.extend(left[a:])
        merged.extend(right[b:])
        return merged

    if perm:
        sort(0, len(perm))
    return out


def _random_inverted_pair(perm: list[int], rng: random.Random) -> tuple[int, int] | None:
    """A uniformly random inversion of ``perm`` (as positions), or ``None``."""
    m = len(perm)
    bit = [0] * (m + 1)
    weight = [0] * m
    for i in range(m - 1, -1, -1):
        j = perm[i]
        smaller = 0
        while j > 0:
            smaller += bit[j]
            j -= j & -j
        weight[i] = smaller
        j = perm[i] + 1
        while j <= m:
            bit[j] += 1
            j += j & -j
    total = sum(weight)
    if total == 0:
        return None
    pick = rng.randrange(total)
    i = 0
    while pick >= weight[i]:
        pick -= weight[i]
        i += 1
    for j in range(i + 1, m):
        if perm[j] < perm[i]:
            if pick == 0:
                return i, j
            pick -= 1
    raise AssertionError("inversion weights are inconsistent")


def _crossing_values(family: CurveFamily, pairs: Sequence[tuple[int, int]], lo: float, hi: float) -> np.ndarray:
    """Ordinates where each pair of extended curves crosses inside ``[lo, hi]``.

    Bisection on the difference of sweep times; the two curves must be in
    opposite left-right order at ``lo`` and ``hi``.
    """
    if not pairs:
        return np.empty(0)
    p = np.array(pairs)
    d, r, shift, t_lo, t_hi, y_lo, y_hi = family._columns()

    def diff(y: np.ndarray) -> np.ndarray:
        out = []
        for idx in (p[:, 0], p[:, 1]):
            yc = np.clip(y, y_lo[idx], y_hi[idx])
            arg = np.clip((1.0 + r[idx] ** 2 - yc * yc) / (2.0 * r[idx]), -1.0, 1.0)
            t = d[idx] * np.arccos(arg) + shift[idx]
            t = np.where(y < y_lo[idx], t_lo[idx] - d[idx] * (y_lo[idx] - y), t)
            out.append(np.where(y > y_hi[idx], t_hi[idx] + d[idx] * (y - y_hi[idx]), t))
        return out[0] - out[1]

    left = np.full(len(p), lo, dtype=float)
    right = np.full(len(p), hi, dtype=float)
    sign_left = np.sign(diff(left))
    for _ in range(200):
        mid = 0.5 * (left + right)
        if np.all((mid == left) | (mid == right)):
            break
        s = np.sign(diff(mid))
        move = (s == sign_left) & (s != 0)
        hit = s == 0
        left = np.where(move, mid, left)
        right = np.where(move, right, mid)
        left = np.where(hit, mid, left)
    return 0.5 * (left + right)


class _Band:
    """Horizontal band ``(lo, hi]`` of the arrangement, with the curve orders on its edges.

    The orders are computed once per edge and reused, so a crossing lying
    (numerically) on an edge is counted on exactly one side of it.
    """

    def __init__(self, family: CurveFamily, lo: float, hi: float) -> None:
        self.family = family
        self.lo, self.hi = lo, hi
        self.order_lo = family.order_at(lo, above=True)
        self.order_hi = family.order_at(hi, above=False)

    def _perm(self) -> list[int]:
        return _relative(self.order_lo, self.order_hi)

    def crossings_inside(self) -> int:
        return count_inversions(self._perm())

    def _values(self, pos: Sequence[tuple[int, int]]) -> np.ndarray:
        pairs = [(int(self.order_hi[i]), int(self.order_hi[j])) for i, j in pos]
        return _crossing_values(self.family, pairs, self.lo, self.hi)

    def random_crossing(self, rng: random.Random) -> float | None:
        pos = _random_inverted_pair(self._perm(), rng)
        return None if pos is None else float(self._values([pos])[0])

    def all_crossings(self) -> np.ndarray:
        return self._values(_inverted_pairs(self._perm()))

    def lower_to(self, y: float, order: np.ndarray) -> None:
        self.hi, self.order_hi = y, order

    def raise_to(self, y: float, order: np.ndarray) -> None:
        self.lo, self.order_lo = y, order


def kth_highest_vertex(family: CurveFamily, k: int, seed: int = 0, limit: int | None = None) -> float:
    """Ordinate of the ``k``-th highest crossing of the extended family (1-based)."""
    _require_extended(family)
    bottom, top = family.y_range()
    order_top = family.order_at(top)
    total = count_vertices_above(family, bottom)
    if not 1 <= k <= total:
        raise ValueError(f"rank {k} outside 1..{total}")
    rng = random.Random(seed)
    limit = limit if limit is not None else max(64, 4 * len(family))
    band = _Band(family, bottom, top)
    above_hi = 0
    while band.crossings_inside() > limit:
        v = band.random_crossing(rng)
        if v is None or not band.lo < v < band.hi:
            break
        order = family.order_at(v)
        above = count_inversions(_relative(order_top, order))
        if above >= k:
            band.raise_to(v, order)
        else:
            band.lower_to(v, order)
            above_hi = above
    values = np.sort(band.all_crossings())[::-1]
    return float(values[k - above_hi - 1])


# ---------------------------------------------------------------- optimization


def compute_lambda_c(
    inst: Instance, seed: int = 0, backend: str | None = None, limit: int | None = None
) -> tuple[float, FeasibilityWitness]:
    """Least ``lam`` for which all sensors can reach distinct vertices of one placement.

    ``seed`` drives the random choice of pivot crossings; the result does
    not depend on it.
    """
    memo: dict[float, FeasibilityWitness] = {}

    def decide(lam: float) -> bool:
        w = memo.get(lam)
        if w is None:
            w = memo[lam] = feasible(inst, lam, backend)
        return w.feasible

    base = trivial_lower_bound(inst)
    if decide(base):
        return base, memo[base]
    lo, hi = search_sorted_arrays(SortedDistanceArrays(inst), decide, lower=base)
    edges = [lo, *farthest_distances_inside(inst, (lo, hi)), hi]
    a, b = 0, len(edges) - 1
    while b - a > 1:
        mid = (a + b) // 2
        if decide(edges[mid]):
            b = mid
        else:
            a = mid
    lo, hi = edges[a], edges[b]
    family = extend_pseudolines(build_curve_family(inst, (lo, hi)))
    rng = random.Random(seed)
    limit = limit if limit is not None else max(64, 4 * len(family))
    values = np.empty(0)
    if len(family) >= 2:
        band = _Band(family, lo, hi)
        while band.crossings_inside() > limit:
            v = band.random_crossing(rng)
            if v is None or not band.lo < v < band.hi:
                break
            if decide(v):
                band.lower_to(v, family.order_at(v))
            else:
                band.raise_to(v, family.order_at(v))
        lo, hi = band.lo, band.hi
        values = band.all_crossings()
    cands = sorted({float(v) for v in values if lo < v < hi})
    cands.append(hi)
    a, b = 0, len(cands) - 1
    while a < b:
        mid = (a + b) // 2
        if decide(cands[mid]):
            b = mid
        else:
            a = mid + 1
    lam = cands[a]
    decide(lam)
    return lam, memo[lam]
