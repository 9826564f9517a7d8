"""Maximum matchings under insertion and deletion of left vertices.

:class:`DynamicConvexMatching` keeps the greedy (least end first) matched set
of a convex bipartite graph.  :class:`DynamicCircularMatching` stacks two of
them to follow the circular-to-convex reduction of
:mod:`pgcover.matching_static` under updates.
"""

from __future__ import annotations

from types import ModuleType
from typing import NamedTuple

from pgcover import kernels
from pgcover.matching_static import (
    CircularConvexGraph,
    CircularVertex,
    ConvexGraph,
    ConvexVertex,
    Matching,
    max_matching_circular,
    max_matching_convex,
)


class UpdateOutcome(NamedTuple):
    """Result of one update.

    ``matched`` tells whether the updated vertex is matched after an insert,
    or was matched before a delete.  ``replacement`` is the vertex that lost
    its match because of an insert; ``supplement`` the one that gained a match
    because of a delete.
    """

    new_size: int
    matched: bool
    replacement: int | None = None
    supplement: int | None = None


class DynamicConvexMatching:
    """Greedy maximum matching of a convex graph with right side ``0 .. n2-1``.

    ``end`` may exceed ``n2 - 1``: edges are clipped, but the full value
    orders vertices sharing the clipped end.  ``tie`` (0 or 1) breaks
    remaining ties.
    """

    def __init__(self, n2: int, backend: str | ModuleType | None = None) -> None:
        if n2 < 1:
            raise ValueError("n2 must be positive")
        if backend is None:
            core_cls = kernels.ConvexCore
        elif isinstance(backend, str):
            core_cls = kernels.get_backend(backend).ConvexCore
        else:
            core_cls = backend.ConvexCore
        self.n2 = n2
        self._core = core_cls(n2)
        self._slot: dict[int, int] = {}
        self._id_of: dict[int, int] = {}
        self._interval: dict[int, tuple[int, int, int]] = {}

    @property
    def size(self) -> int:
        return len(self._core)

    def __len__(self) -> int:
        return len(self._interval)

    def __contains__(self, vid: int) -> bool:
        return vid in self._interval

    def is_matched(self, vid: int) -> bool:
        slot = self._slot.get(vid)
        return slot is not None and self._core.is_matched(slot)

    def insert(self, vid: int, begin: int, end: int, tie: int = 0) -> UpdateOutcome:
        if vid in self._interval:
            raise KeyError(f"vertex {vid} is already present")
        if tie not in (0, 1):
            raise ValueError("tie must be 0 or 1")
        if begin < 0:
            raise ValueError("begin must be non-negative")
        self._interval[vid] = (begin, end, tie)
        clipped = min(end, self.n2 - 1)
        if begin > clipped:
            return UpdateOutcome(self.size, False)
        slot, flipped = self._core.insert(begin, clipped, 2 * (end - clipped) + tie)
        self._slot[vid] = slot
        self._id_of[slot] = vid
        replacement = None
        for s in flipped:
            if s != slot:
                replacement = self._id_of[s]
        return UpdateOutcome(self.size, self._core.is_matched(slot), replacement, None)

    def delete(self, vid: int) -> UpdateOutcome:
        if vid not in self._interval:
            raise KeyError(f"vertex {vid} is not present")
        del self._interval[vid]
        slot = self._slot.pop(vid, None)
        if slot is None:
            return UpdateOutcome(self.size, False)
        was_matched = self._core.is_matched(slot)
        flipped = self._core.delete(slot)
        del self._id_of[slot]
        supplement = None
        for s in flipped:
            if s != slot:
                supplement = self._id_of[s]
        return UpdateOutcome(self.size, was_matched, None, supplement)

    def graph(self) -> ConvexGraph:
        return ConvexGraph(
            self.n2,
            tuple(ConvexVertex(v, b, e, t) for v, (b, e, t) in self._interval.items()),
        )

    def matching(self) -> Matching:
        """Pair up the maintained matched set (an ``O(n log n)`` extraction)."""
        chosen = tuple(
            ConvexVertex(v, b, e, t)
            for v, (b, e, t) in self._interval.items()
            if self.is_matched(v)
        )
        return max_matching_convex(ConvexGraph(self.n2, chosen))


class DynamicCircularMatching:
    """Maximum matching of a circular-convex graph under left-vertex updates.

    Two convex structures are kept: the first sees wrapping intervals
    stretched past the cut, the second sees each wrapping interval cut to
    its upper part when the first structure matches it and to its lower part
    otherwise.  Every update touches each structure a constant number of
    times.
    """

    def __init__(self, n2: int, backend: str | ModuleType | None = None) -> None:
        self.n2 = n2
        self.stretched = DynamicConvexMatching(n2, backend)
        self.split = DynamicConvexMatching(n2, backend)
        self._registry: dict[int, tuple[int, int] | None] = {}

    @property
    def size(self) -> int:
        return self.split.size

    def __len__(self) -> int:
        return len(self._registry)

    def __contains__(self, vid: int) -> bool:
        return vid in self._registry

    def _wraps(self, vid: int) -> bool:
        iv = self._registry[vid]
        return iv is not None and iv[0] > iv[1]

    def _move_to_lower(self, vid: int) -> None:
        b, e = self._registry[vid]
        self.split.delete(vid)
        self.split.insert(vid, 0, e)

    def _move_to_upper(self, vid: int) -> None:
        b, e = self._registry[vid]
        self.split.delete(vid)
        self.split.insert(vid, b, self.n2 - 1)

    def insert(self, vid: int, begin: int | None, end: int | None) -> int:
        """Add a vertex with the clockwise interval ``begin .. end``; ``None`` means no edges."""
        if vid in self._registry:
            raise KeyError(f"vertex {vid} is already present")
        if begin is None or end is None:
            self._registry[vid] = None
            return self.size
        if not (0 <= begin < self.n2 and 0 <= end < self.n2):
            raise ValueError(f"interval [{begin}, {end}] outside [0, {self.n2})")
        self._registry[vid] = (begin, end)
        n = self.n2
        if begin <= end:
            out = self.stretched.insert(vid, begin, end, 0)
            if out.replacement is not None and self._wraps(out.replacement):
                self._move_to_lower(out.replacement)
            self.split.insert(vid, begin, end)
        else:
            out = self.stretched.insert(vid, begin, n - 1 + end, 1)
            if out.replacement is not None and self._wraps(out.replacement):
                self._move_to_lower(out.replacement)
            if out.matched:
                self.split.insert(vid, begin, n - 1)
            else:
                self.split.insert(vid, 0, end)
        return self.size

    def delete(self, vid: int) -> int:
        if vid not in self._registry:
            raise KeyError(f"vertex {vid} is not present")
        if self._registry[vid] is None:
            del self._registry[vid]
            return self.size
        out = self.stretched.delete(vid)
        if out.supplement is not None and self._wraps(out.supplement):
            self._move_to_upper(out.supplement)
        self.split.delete(vid)
        del self._registry[vid]
        return self.size

    def graph(self) -> CircularConvexGraph:
        return CircularConvexGraph(
            self.n2,
            tuple(CircularVertex(v, iv[0], iv[1]) for v, iv in self._registry.items() if iv is not None),
        )

    def matching(self) -> Matching:
        return max_matching_circular(self.graph())
