"""Geometry on the unit disk: sensors, regular polygon placements, arcs.

All angles are radians.  Vertex ``j`` of a placement with offset ``t`` sits at
angle ``t - 2*pi*j/n``; increasing ``j`` walks the circle clockwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

TWO_PI = 2.0 * math.pi
ANGLE_EPS = 1e-9
DIST_EPS = 1e-12
CENTER_EPS = 1e-12


def wrap_angle(a: float) -> float:
    """Reduce an angle to ``[0, 2*pi)``."""
    a = math.fmod(a, TWO_PI)
    if a < 0.0:
        a += TWO_PI
    if a >= TWO_PI:
        a -= TWO_PI
    return a


def signed_angle(a: float) -> float:
    """Reduce an angle to ``(-pi, pi]``."""
    a = wrap_angle(a)
    if a > math.pi:
        a -= TWO_PI
    return a


@dataclass(frozen=True)
class Sensor:
    """A point of the closed unit disk in polar form."""

    radius: float
    angle: float

    @classmethod
    def from_xy(cls, x: float, y: float) -> "Sensor":
        r = math.hypot(x, y)
        if r > 1.0 + 1e-12:
            raise ValueError(f"sensor ({x}, {y}) lies outside the unit disk")
        r = min(r, 1.0)
        a = wrap_angle(math.atan2(y, x)) if r > 0.0 else 0.0
        return cls(r, a)

    @property
    def xy(self) -> tuple[float, float]:
        return self.radius * math.cos(self.angle), self.radius * math.sin(self.angle)


@dataclass(frozen=True)
class Instance:
    """Sensors normalized to the unit disk plus the affine map back to input units."""

    sensors: tuple[Sensor, ...]
    center: tuple[float, float] = (0.0, 0.0)
    scale: float = 1.0

    def __post_init__(self) -> None:
        if len(self.sensors) == 0:
            raise ValueError("an instance needs at least one sensor")
        if not self.scale > 0.0:
            raise ValueError("disk radius must be positive")

    @property
    def n(self) -> int:
        return len(self.sensors)

    @property
    def pitch(self) -> float:
        return TWO_PI / self.n

    @classmethod
    def from_points(
        cls,
        points: Iterable[Sequence[float]],
        center: Sequence[float] = (0.0, 0.0),
        radius: float = 1.0,
    ) -> "Instance":
        cx, cy = float(center[0]), float(center[1])
        radius = float(radius)
        if not radius > 0.0:
            raise ValueError("disk radius must be positive")
        sensors = tuple(
            Sensor.from_xy((float(p[0]) - cx) / radius, (float(p[1]) - cy) / radius)
            for p in points
        )
        return cls(sensors, (cx, cy), radius)

    @classmethod
    def from_polar(cls, pairs: Iterable[Sequence[float]]) -> "Instance":
        sensors = []
        for r, a in pairs:
            if not 0.0 <= r <= 1.0:
                raise ValueError(f"radius {r} outside [0, 1]")
            sensors.append(Sensor(float(r), wrap_angle(float(a))))
        return cls(tuple(sensors))

    def to_original(self, x: float, y: float) -> tuple[float, float]:
        return self.center[0] + self.scale * x, self.center[1] + self.scale * y


@dataclass(frozen=True)
class Placement:
    """A regular n-gon inscribed in the unit circle, identified by its offset."""

    n: int
    offset: float

    @classmethod
    def canonical(cls, n: int, offset: float) -> "Placement":
        """Fold an arbitrary offset into ``[0, 2*pi/n)`` (vertex labels rotate)."""
        pitch = TWO_PI / n
        t = math.fmod(offset, pitch)
        if t < 0.0:
            t += pitch
        if t >= pitch - 1e-15:
            t = 0.0
        return cls(n, t + 0.0)

    def vertex_angle(self, j: int) -> float:
        return wrap_angle(self.offset - TWO_PI * j / self.n)

    def vertex_xy(self, j: int) -> tuple[float, float]:
        a = self.vertex_angle(j)
        return math.cos(a), math.sin(a)

    def relabel_from(self, offset: float, j: int) -> int:
        """Index in this placement of vertex ``j`` of the placement with ``offset``."""
        pitch = TWO_PI / self.n
        shift = round((self.offset - offset) / pitch)
        return (j + shift) % self.n


class BoundaryExtremes(NamedTuple):
    """Closest and farthest boundary points of a sensor and their distances."""

    nearest_angle: float
    nearest_dist: float
    farthest_angle: float
    farthest_dist: float


def boundary_extremes(sensor: Sensor) -> BoundaryExtremes:
    r, a = sensor.radius, sensor.angle
    if r <= CENTER_EPS:
        # every boundary point is equally near; report angle 0 for determinism
        return BoundaryExtremes(0.0, 1.0, math.pi, 1.0)
    return BoundaryExtremes(a, 1.0 - r, wrap_angle(a + math.pi), 1.0 + r)


def chord_distance(radius: float, delta: float) -> float:
    """Distance from a point at polar ``(radius, 0)`` to the boundary point at angle ``delta``."""
    sq = 1.0 + radius * radius - 2.0 * radius * math.cos(delta)
    return math.sqrt(sq) if sq > 0.0 else 0.0


def point_boundary_distance(sensor: Sensor, angle: float) -> float:
    return chord_distance(sensor.radius, angle - sensor.angle)


def sensor_vertex_distance(sensor: Sensor, placement: Placement, j: int) -> float:
    return point_boundary_distance(sensor, placement.vertex_angle(j))


class CoverageArc(NamedTuple):
    """Closed arc ``[center - half_width, center + half_width]``; full when ``half_width >= pi``."""

    center: float
    half_width: float

    @property
    def full(self) -> bool:
        return self.half_width >= math.pi

    def contains(self, angle: float, eps: float = ANGLE_EPS) -> bool:
        return self.full or abs(signed_angle(angle - self.center)) <= self.half_width + eps


def coverage_half_width(radius: float, lam: float) -> float | None:
    """Half-angle of the boundary arc within distance ``lam``; ``None`` when empty.

    Returns ``math.pi`` for the whole circle.
    """
    if radius <= CENTER_EPS:
        return math.pi if lam >= 1.0 - DIST_EPS else None
    if lam < 1.0 - radius - DIST_EPS:
        return None
    if lam >= 1.0 + radius:
        return math.pi
    c = (1.0 + radius * radius - lam * lam) / (2.0 * radius)
    if c >= 1.0:
        return 0.0
    if c <= -1.0:
        return math.pi
    return math.acos(c)


def coverage_arc(sensor: Sensor, lam: float) -> CoverageArc | None:
    """Boundary points within distance ``lam`` of ``sensor`` (closed), or ``None``."""
    if lam < 0.0:
        raise ValueError("distance threshold must be non-negative")
    half = coverage_half_width(sensor.radius, lam)
    if half is None:
        return None
    return CoverageArc(sensor.angle, half)


def placement_cost(
    instance: Instance, placement: Placement, assignment: Sequence[int]
) -> tuple[float, float]:
    """Return ``(max_move, total_move)`` of moving sensor ``i`` to vertex ``assignment[i]``."""
    if sorted(assignment) != list(range(instance.n)):
        raise ValueError("assignment is not a permutation of the vertices")
    worst = 0.0
    total = 0.0
    for s, j in zip(instance.sensors, assignment):
        d = sensor_vertex_distance(s, placement, j)
        worst = max(worst, d)
        total += d
    return worst, total
