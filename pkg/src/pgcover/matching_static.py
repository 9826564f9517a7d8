"""Maximum matchings in convex and circular-convex bipartite graphs.

The right side ``V2`` is the index range ``0 .. n2-1``.  Each left vertex is
described by an interval of right-side indices.  For circular graphs an
interval with ``begin > end`` wraps past ``n2 - 1`` back to ``0``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple


class ConvexVertex(NamedTuple):
    """Left vertex with edges to ``[begin, min(end, n2-1)]``.

    ``end`` may exceed ``n2 - 1``; the excess only matters for ordering.
    ``tie`` breaks equal ends (lower first).
    """

    id: int
    begin: int
    end: int
    tie: int = 0


class CircularVertex(NamedTuple):
    id: int
    begin: int
    end: int

    @property
    def wraps(self) -> bool:
        return self.begin > self.end


@dataclass(frozen=True)
class ConvexGraph:
    n2: int
    vertices: tuple[ConvexVertex, ...]

    def __post_init__(self) -> None:
        _check_ids(v.id for v in self.vertices)
        for v in self.vertices:
            if v.begin < 0:
                raise ValueError(f"vertex {v.id}: negative begin")

    @classmethod
    def of(cls, n2: int, intervals: Iterable[tuple[int, int]]) -> "ConvexGraph":
        return cls(n2, tuple(ConvexVertex(i, b, e) for i, (b, e) in enumerate(intervals)))

    def neighbors(self, v: ConvexVertex) -> range:
        return range(v.begin, min(v.end, self.n2 - 1) + 1)


@dataclass(frozen=True)
class CircularConvexGraph:
    n2: int
    vertices: tuple[CircularVertex, ...]

    def __post_init__(self) -> None:
        _check_ids(v.id for v in self.vertices)
        for v in self.vertices:
            if not (0 <= v.begin < self.n2 and 0 <= v.end < self.n2):
                raise ValueError(f"vertex {v.id}: interval outside [0, {self.n2})")

    @classmethod
    def of(cls, n2: int, intervals: Iterable[tuple[int, int]]) -> "CircularConvexGraph":
        return cls(n2, tuple(CircularVertex(i, b, e) for i, (b, e) in enumerate(intervals)))

    def neighbors(self, v: CircularVertex) -> list[int]:
        if v.begin <= v.end:
            return list(range(v.begin, v.end + 1))
        return list(range(v.begin, self.n2)) + list(range(0, v.end + 1))


@dataclass(frozen=True)
class Matching:
    """Partial injective map from left ids to right indices."""

    pairs: Mapping[int, int] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.pairs)

    def __contains__(self, vid: int) -> bool:
        return vid in self.pairs


def _check_ids(ids: Iterable[int]) -> None:
    seen: set[int] = set()
    for i in ids:
        if i in seen:
            raise ValueError(f"duplicate vertex id {i}")
        seen.add(i)


def max_matching_convex(g: ConvexGraph) -> Matching:
    """Greedy sweep over right positions, always serving the live vertex with the smallest end.

    Runs in ``O(n log n)``.  Ties on ``end`` go to the smaller ``tie`` value,
    then to the smaller id, so the result is deterministic.
    """
    last = g.n2 - 1
    order = sorted(
        (v for v in g.vertices if v.begin <= min(v.end, last)),
        key=lambda v: v.begin,
    )
    pairs: dict[int, int] = {}
    heap: list[tuple[int, int, int]] = []
    k = 0
    for pos in range(g.n2):
        while k < len(order) and order[k].begin == pos:
            v = order[k]
            heapq.heappush(heap, (v.end, v.tie, v.id))
            k += 1
        while heap and min(heap[0][0], last) < pos:
            heapq.heappop(heap)
        if heap:
            _, _, vid = heapq.heappop(heap)
            pairs[vid] = pos
        elif k == len(order):
            break
    return Matching(pairs)


def lb_reduce_first(g: CircularConvexGraph) -> ConvexGraph:
    """Cut the circle at position 0, stretching wrapping intervals past ``n2 - 1``.

    A wrapping vertex keeps its begin and gets end ``n2 - 1 + end``; its real
    edges are clipped to ``[begin, n2 - 1]``.  Equal stored ends are broken in
    favour of non-wrapping vertices, which keeps the reduction exact.
    """
    out = []
    for v in g.vertices:
        if v.wraps:
            out.append(ConvexVertex(v.id, v.begin, g.n2 - 1 + v.end, 1))
        else:
            out.append(ConvexVertex(v.id, v.begin, v.end, 0))
    return ConvexGraph(g.n2, tuple(out))


def lb_reduce_second(g: CircularConvexGraph, first: Matching) -> ConvexGraph:
    """Keep matched wrapping vertices on their upper part and move unmatched ones to the lower part."""
    out = []
    for v in g.vertices:
        if not v.wraps:
            out.append(ConvexVertex(v.id, v.begin, v.end))
        elif v.id in first.pairs:
            out.append(ConvexVertex(v.id, v.begin, g.n2 - 1))
        else:
            out.append(ConvexVertex(v.id, 0, v.end))
    return ConvexGraph(g.n2, tuple(out))


def max_matching_circular(g: CircularConvexGraph) -> Matching:
    """Maximum matching of a circular-convex graph via two convex matchings."""
    first = max_matching_convex(lb_reduce_first(g))
    return max_matching_convex(lb_reduce_second(g, first))
