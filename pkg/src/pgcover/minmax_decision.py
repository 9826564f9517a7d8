"""Decide whether every sensor can reach a distinct polygon vertex within distance ``lam``.

The polygon is swept clockwise through one vertex pitch.  At sweep time
``tau`` vertex ``j`` sits at angle ``-j*pitch - tau``.  Each sensor sees a
contiguous run of vertices (its coverage arc), so the sensor/vertex graph is
circular-convex; during the sweep each run gains one vertex at its
counter-clockwise end and loses one at its clockwise end.  A perfect matching
exists at some moment iff the answer is yes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from pgcover.geom import (
    ANGLE_EPS,
    Instance,
    Placement,
    coverage_half_width,
    placement_cost,
)
from pgcover.matching_dynamic import DynamicCircularMatching
from pgcover.matching_static import CircularConvexGraph, CircularVertex

Interval = tuple[int, int] | None


@dataclass(frozen=True)
class RotationEvent:
    time: float
    kind: Literal["add", "remove"]
    sensor: int
    interval: Interval


@dataclass(frozen=True)
class EventSequence:
    n: int
    lam: float
    initial: tuple[Interval, ...]
    events: tuple[RotationEvent, ...]


@dataclass(frozen=True)
class FeasibilityWitness:
    """Outcome of a decision query.

    When feasible, ``assignment[i]`` is the vertex of ``placement`` that
    sensor ``i`` moves to and ``max_move`` the realized largest distance.
    ``moment`` is the sweep time at which the matching was found.
    """

    feasible: bool
    lam: float
    placement: Placement | None = None
    assignment: tuple[int, ...] | None = None
    max_move: float | None = None
    moment: float | None = None


@dataclass
class _Run:
    """Vertices ``first .. last`` (unreduced integers) covered by one sensor."""

    first: int
    last: int
    add_time: float | None = None
    remove_time: float | None = None


def _as_interval(first: int, last: int, n: int) -> Interval:
    count = last - first + 1
    if count <= 0:
        return None
    if count >= n:
        return (0, n - 1)
    return (first % n, last % n)


def _runs(inst: Instance, lam: float) -> list[_Run | None]:
    """Covered vertex runs at sweep time 0 plus the times they change.

    ``None`` marks a sensor that cannot reach the boundary within ``lam``.
    """
    n = inst.n
    pitch = inst.pitch
    runs: list[_Run | None] = []
    for s in inst.sensors:
        half = coverage_half_width(s.radius, lam)
        if half is None:
            runs.append(None)
            continue
        if half >= math.pi:
            runs.append(_Run(0, n - 1))
            continue
        # vertex j is covered iff u <= j <= u + w (in pitch units)
        u = -(s.angle + half) / pitch
        w = 2.0 * half / pitch
        first = math.ceil(u - ANGLE_EPS)
        last = math.floor(u + w + ANGLE_EPS)
        add = min(max(u - first + 1.0, 0.0), 1.0) * pitch
        remove = min(max(u + w - last, 0.0), 1.0) * pitch
        runs.append(_Run(first, last, add, remove))
    return runs


def build_initial_graph(inst: Instance, lam: float) -> CircularConvexGraph:
    """Sensor/vertex graph of the placement with offset 0.

    Sensors that cover no vertex are left out of the graph.
    """
    if lam < 0.0:
        raise ValueError("lam must be non-negative")
    verts = []
    for i, run in enumerate(_runs(inst, lam)):
        if run is None:
            continue
        iv = _as_interval(run.first, run.last, inst.n)
        if iv is not None:
            verts.append(CircularVertex(i, iv[0], iv[1]))
    return CircularConvexGraph(inst.n, tuple(verts))


def rotation_events(inst: Instance, lam: float) -> EventSequence:
    """Coverage changes over one clockwise pitch, in processing order.

    Additions are ordered before removals that happen at the same moment (up
    to a relative tolerance), so edges that coexist only at a single instant
    are seen together.
    """
    if lam < 0.0:
        raise ValueError("lam must be non-negative")
    n = inst.n
    runs = _runs(inst, lam)
    slack = ANGLE_EPS * inst.pitch
    order = []
    initial = []
    for i, run in enumerate(runs):
        if run is None:
            initial.append(None)
            continue
        initial.append(_as_interval(run.first, run.last, n))
        if run.add_time is not None:
            order.append((run.add_time, 0, i))
            order.append((run.remove_time + slack, 1, i))
    order.sort()
    events = []
    current = {i: [r.first, r.last] for i, r in enumerate(runs) if r is not None}
    for _, kind, i in order:
        run = current[i]
        if kind == 0:
            run[0] -= 1
            events.append(RotationEvent(runs[i].add_time, "add", i, _as_interval(run[0], run[1], n)))
        else:
            run[1] -= 1
            events.append(RotationEvent(runs[i].remove_time, "remove", i, _as_interval(run[0], run[1], n)))
    return EventSequence(n, lam, tuple(initial), tuple(events))


def _regular_on_boundary(inst: Instance) -> FeasibilityWitness:
    """Zero-distance case: the sensors must already be the polygon's vertices."""
    n = inst.n
    pitch = inst.pitch
    if any(abs(1.0 - s.radius) > 1e-12 for s in inst.sensors):
        return FeasibilityWitness(False, 0.0)
    placement = Placement.canonical(n, inst.sensors[0].angle)
    assignment = []
    for s in inst.sensors:
        k = (placement.offset - s.angle) / pitch
        j = round(k)
        if abs(k - j) > ANGLE_EPS:
            return FeasibilityWitness(False, 0.0)
        assignment.append(j % n)
    if len(set(assignment)) != n:
        return FeasibilityWitness(False, 0.0)
    worst, _ = placement_cost(inst, placement, assignment)
    return FeasibilityWitness(True, 0.0, placement, tuple(assignment), worst, 0.0)


def _witness(
    inst: Instance, lam: float, dyn: DynamicCircularMatching, owner: dict[int, int], moment: float
) -> FeasibilityWitness:
    pairs = dyn.matching().pairs
    placement = Placement.canonical(inst.n, -moment)
    assignment = [0] * inst.n
    for vid, j in pairs.items():
        assignment[owner[vid]] = placement.relabel_from(-moment, j)
    worst, _ = placement_cost(inst, placement, assignment)
    return FeasibilityWitness(True, lam, placement, tuple(assignment), worst, moment)


def feasible(inst: Instance, lam: float, backend: str | None = None) -> FeasibilityWitness:
    """Is there a placement where all sensors reach distinct vertices within ``lam``?

    Reports the earliest moment of the clockwise sweep at which a perfect
    matching exists, with that matching.
    """
    if lam < 0.0 or math.isnan(lam):
        raise ValueError("lam must be non-negative")
    if lam == 0.0:
        return _regular_on_boundary(inst)
    if any(coverage_half_width(s.radius, lam) is None for s in inst.sensors):
        # some sensor cannot reach the circle at all
        return FeasibilityWitness(False, lam)
    seq = rotation_events(inst, lam)
    n = inst.n
    dyn = DynamicCircularMatching(n, backend)
    live: list[int] = []
    owner: dict[int, int] = {}
    for i, iv in enumerate(seq.initial):
        vid = i
        live.append(vid)
        owner[vid] = i
        dyn.insert(vid, *(iv if iv is not None else (None, None)))
    if dyn.size == n:
        return _witness(inst, lam, dyn, owner, 0.0)
    next_id = n
    for ev in seq.events:
        old = live[ev.sensor]
        dyn.delete(old)
        del owner[old]
        vid = next_id
        next_id += 1
        live[ev.sensor] = vid
        owner[vid] = ev.sensor
        iv = ev.interval
        dyn.insert(vid, *(iv if iv is not None else (None, None)))
        if dyn.size == n:
            return _witness(inst, lam, dyn, owner, ev.time)
    return FeasibilityWitness(False, lam)
