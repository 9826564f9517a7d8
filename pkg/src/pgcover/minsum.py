"""Min-sum movement onto a regular polygon.

For sensors already on the circle, some optimal solution leaves one sensor
in place, so trying every sensor as a fixed vertex and solving a min-cost
matching of points on a circle for each is exact.  Interior sensors are
handled approximately: project them radially, solve the boundary problem
for the projections, and send every sensor to the vertex its projection got.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from pgcover.geom import TWO_PI, Instance, Placement, Sensor, placement_cost, wrap_angle
from pgcover.kernels import noncrossing_matching

COINCIDENT_EPS = 1e-12
BOUNDARY_EPS = 1e-9


@dataclass(frozen=True)
class CirclePointSet:
    """Points on the unit circle given by their angles, kept in input order."""

    angles: tuple[float, ...]

    @classmethod
    def of(cls, angles: Sequence[float]) -> "CirclePointSet":
        return cls(tuple(wrap_angle(float(a)) for a in angles))

    def __len__(self) -> int:
        return len(self.angles)

    def sorted_order(self) -> list[int]:
        """Indices sorted by angle; equal angles keep input order."""
        return sorted(range(len(self.angles)), key=lambda i: self.angles[i])


@dataclass(frozen=True)
class WeightedMatchingResult:
    """``assignment[i]`` is the blue point matched to red point ``i``."""

    assignment: tuple[int, ...]
    total_cost: float


class MinSumSolution(NamedTuple):
    cost: float
    placement: Placement
    assignment: tuple[int, ...]


def arc_chord(a: float, b: float) -> float:
    """Straight-line distance between the circle points at angles ``a`` and ``b``."""
    return 2.0 * abs(math.sin(0.5 * (a - b)))


def _snap(a: float) -> float:
    return 0.0 if a >= TWO_PI - COINCIDENT_EPS else a


def min_weight_circle_matching(red: CirclePointSet, blue: CirclePointSet) -> WeightedMatchingResult:
    """Cheapest perfect red-blue matching under chord length; the result never crosses itself.

    Points at the same spot are paired off first at zero cost.  The rest
    are cut open at the first remaining red point and solved by the
    non-crossing interval program in :mod:`pgcover.kernels`.
    """
    n = len(red)
    if n != len(blue):
        raise ValueError("red and blue sets must have the same size")
    if n == 0:
        raise ValueError("point sets must be nonempty")
    items = [(_snap(a), 0, i) for i, a in enumerate(red.angles)]
    items += [(_snap(a), 1, i) for i, a in enumerate(blue.angles)]
    items.sort()
    assignment = [-1] * n

    rest: list[tuple[float, int, int]] = []
    p = 0
    while p < len(items):
        q = p
        while q + 1 < len(items) and items[q + 1][0] - items[p][0] <= COINCIDENT_EPS:
            q += 1
        group = items[p : q + 1]
        reds = [it for it in group if it[1] == 0]
        blues = [it for it in group if it[1] == 1]
        for r, b in zip(reds, blues):
            assignment[r[2]] = b[2]
        k = min(len(reds), len(blues))
        rest.extend(reds[k:] or blues[k:])
        p = q + 1
    rest.sort()

    if rest:
        start = next(i for i, it in enumerate(rest) if it[1] == 0)
        ring = rest[start:] + rest[:start]
        base = ring[0][0]
        angles = [(it[0] - base) % TWO_PI for it in ring]
        angles[0] = 0.0
        partner = noncrossing_matching(angles, [it[1] for it in ring])
        for i, j in enumerate(partner):
            if ring[i][1] == 0:
                assignment[ring[i][2]] = ring[j][2]

    total = sum(arc_chord(red.angles[i], blue.angles[j]) for i, j in enumerate(assignment))
    return WeightedMatchingResult(tuple(assignment), total)


def _solve_anchored(inst: Instance, angles: Sequence[float]) -> tuple[int, Placement, tuple[int, ...]]:
    """Best anchor for boundary points ``angles``; ties go to the lower index."""
    n = inst.n
    red = CirclePointSet.of(angles)
    best: tuple[float, int, Placement, tuple[int, ...]] | None = None
    for i, a in enumerate(angles):
        placement = Placement.canonical(n, a)
        blue = CirclePointSet.of([placement.vertex_angle(j) for j in range(n)])
        res = min_weight_circle_matching(red, blue)
        if best is None or res.total_cost < best[0] - 1e-12:
            best = (res.total_cost, i, placement, res.assignment)
    assert best is not None
    return best[1], best[2], best[3]


def minsum_boundary(inst: Instance, require_boundary: bool = True) -> MinSumSolution:
    """Exact least total movement when every sensor lies on the circle.

    With ``require_boundary=False`` interior sensors are projected radially
    first and the reported cost is that of the projected points.
    """
    if require_boundary:
        off = [i for i, s in enumerate(inst.sensors) if abs(s.radius - 1.0) > BOUNDARY_EPS]
        if off:
            raise ValueError(f"sensors {off[:5]} are not on the boundary")
    angles = [s.angle for s in inst.sensors]
    _, placement, assignment = _solve_anchored(inst, angles)
    projected = Instance(tuple(Sensor(1.0, a) for a in angles), inst.center, inst.scale)
    _, cost = placement_cost(projected, placement, assignment)
    return MinSumSolution(cost, placement, assignment)


def minsum_approx(inst: Instance) -> MinSumSolution:
    """Radial projection followed by the exact boundary solver; total within 3x of optimal."""
    sol = minsum_boundary(inst, require_boundary=False)
    _, total = placement_cost(inst, sol.placement, sol.assignment)
    return MinSumSolution(total, sol.placement, sol.assignment)


def minsum_lower_bound(inst: Instance) -> float:
    """Sum over sensors of the distance to the circle."""
    return math.fsum(1.0 - s.radius for s in inst.sensors)
