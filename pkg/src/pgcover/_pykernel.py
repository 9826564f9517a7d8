"""Pure-Python kernels.  ``_ckernel`` provides the same API compiled.

``ConvexCore`` maintains the greedy maximum matching of a convex bipartite
graph whose left side changes one vertex at a time.  The greedy matching
serves right positions left to right, each time picking the live left vertex
of least key ``(end, tie, slot)``.  Its matched set is the least-key basis of
the transversal matroid, which is what the structure tracks.

Layout: a segment tree over right positions; every left vertex lives in the
leaf of its ``begin``.  A node reports which of its vertices are matched
inside its range (``M``) and which are still alive past its right end and
unmatched (``T``).  An internal node feeds the left child's ``T`` vertices
into the right child's range (as if released at its first position)
together with the right child's ``M`` and ``T``, and recomputes the greedy
outcome incrementally with three one-dimensional structures:

* small vertices (end inside the range) form a deadline basis kept by
  per-end slack counts;
* accepted small vertices occupy slots; the free slots are tracked by a
  prefix-walk over release counts;
* large vertices (end past the range) form a release basis on the free
  slots, kept by per-begin slack counts.

Each update changes at most two memberships per level, so an update costs
``O(log^2 n)``.
"""

from __future__ import annotations

import math

from sortedcontainers import SortedList

END_SHIFT = 42
TIE_SHIFT = 21
SLOT_MASK = (1 << TIE_SHIFT) - 1
TIE_LIMIT = 1 << (END_SHIFT - TIE_SHIFT)

# per-level membership codes and the output class each maps to
NONE, PASS, SMALL, REJECTED, LARGE_IN, LARGE_OUT = range(6)
OUT_NONE, OUT_M, OUT_T = 0, 1, 2
OUT_OF = (OUT_NONE, OUT_M, OUT_M, OUT_NONE, OUT_M, OUT_T)

_INF = float("inf")


class _MinAddTree:
    """Range add, range min, first/last index with value <= threshold."""

    __slots__ = ("n", "mn", "lz")

    def __init__(self, values: list[int]) -> None:
        self.n = len(values)
        size = 4 * self.n
        self.mn = [0] * size
        self.lz = [0] * size
        self._build(1, 0, self.n - 1, values)

    def _build(self, v: int, lo: int, hi: int, values: list[int]) -> None:
        if lo == hi:
            self.mn[v] = values[lo]
            return
        mid = (lo + hi) >> 1
        self._build(2 * v, lo, mid, values)
        self._build(2 * v + 1, mid + 1, hi, values)
        self.mn[v] = min(self.mn[2 * v], self.mn[2 * v + 1])

    def add(self, l: int, r: int, d: int) -> None:
        if l <= r:
            self._add(1, 0, self.n - 1, l, r, d)

    def _add(self, v: int, lo: int, hi: int, l: int, r: int, d: int) -> None:
        if l <= lo and hi <= r:
            self.mn[v] += d
            self.lz[v] += d
            return
        mid = (lo + hi) >> 1
        if l <= mid:
            self._add(2 * v, lo, mid, l, r, d)
        if r > mid:
            self._add(2 * v + 1, mid + 1, hi, l, r, d)
        self.mn[v] = min(self.mn[2 * v], self.mn[2 * v + 1]) + self.lz[v]

    def min(self, l: int, r: int) -> float:
        if l > r:
            return _INF
        return self._min(1, 0, self.n - 1, l, r)

    def _min(self, v: int, lo: int, hi: int, l: int, r: int) -> float:
        if l <= lo and hi <= r:
            return self.mn[v]
        mid = (lo + hi) >> 1
        best = _INF
        if l <= mid:
            best = self._min(2 * v, lo, mid, l, r)
        if r > mid:
            best = min(best, self._min(2 * v + 1, mid + 1, hi, l, r))
        return best + self.lz[v]

    def first_le(self, l: int, r: int, thr: int) -> int:
        if l > r:
            return -1
        return self._first(1, 0, self.n - 1, l, r, thr)

    def _first(self, v: int, lo: int, hi: int, l: int, r: int, thr: int) -> int:
        # thr is relative to the accumulated lazy of ancestors
        if hi < l or lo > r or self.mn[v] > thr:
            return -1
        if lo == hi:
            return lo
        thr -= self.lz[v]
        mid = (lo + hi) >> 1
        res = self._first(2 * v, lo, mid, l, r, thr)
        if res < 0:
            res = self._first(2 * v + 1, mid + 1, hi, l, r, thr)
        return res

    def last_le(self, l: int, r: int, thr: int) -> int:
        if l > r:
            return -1
        return self._last(1, 0, self.n - 1, l, r, thr)

    def _last(self, v: int, lo: int, hi: int, l: int, r: int, thr: int) -> int:
        if hi < l or lo > r or self.mn[v] > thr:
            return -1
        if lo == hi:
            return lo
        thr -= self.lz[v]
        mid = (lo + hi) >> 1
        res = self._last(2 * v + 1, mid + 1, hi, l, r, thr)
        if res < 0:
            res = self._last(2 * v, lo, mid, l, r, thr)
        return res


class _ExtremeTree:
    """Point assign, range extreme (min or max) over keys; ``None`` when empty."""

    __slots__ = ("size", "t", "pick", "empty")

    def __init__(self, n: int, largest: bool) -> None:
        size = 1
        while size < n:
            size *= 2
        self.size = size
        self.empty = -1 if largest else _INF
        self.pick = max if largest else min
        self.t = [self.empty] * (2 * size)

    def assign(self, i: int, value) -> None:
        i += self.size
        t = self.t
        t[i] = self.empty if value is None else value
        pick = self.pick
        i >>= 1
        while i:
            t[i] = pick(t[2 * i], t[2 * i + 1])
            i >>= 1

    def query(self, l: int, r: int):
        t, pick = self.t, self.pick
        res = self.empty
        l += self.size
        r += self.size + 1
        while l < r:
            if l & 1:
                res = pick(res, t[l])
                l += 1
            if r & 1:
                r -= 1
                res = pick(res, t[r])
            l >>= 1
            r >>= 1
        return None if res == self.empty else res


class _Node:
    __slots__ = (
        "lo", "hi", "mid", "depth", "leaf_keys",
        "first", "size", "slack_end", "walk", "slack_begin",
        "small_in", "small_out", "large_in", "large_out", "large_in_max", "large_out_min",
    )

    def __init__(self, lo: int, hi: int, depth: int) -> None:
        self.lo, self.hi, self.depth = lo, hi, depth
        self.mid = (lo + hi) >> 1
        self.leaf_keys = SortedList() if lo == hi else None
        self.first = self.mid + 1
        self.size = hi - self.mid
        self.slack_end = None  # built on first use

    def materialize(self) -> None:
        m = self.size
        self.slack_end = _MinAddTree([q + 1 for q in range(m)])
        self.walk = _MinAddTree([-(q + 1) for q in range(m)])
        self.slack_begin = _MinAddTree([m - q for q in range(m)])
        self.small_in = SortedList()
        self.small_out = SortedList()
        self.large_in = SortedList()  # (local begin, key)
        self.large_out = SortedList()
        self.large_in_max = _ExtremeTree(m, largest=True)
        self.large_out_min = _ExtremeTree(m, largest=False)


class ConvexCore:
    """Dynamic greedy matching over right positions ``0 .. n2-1``.

    Vertices are addressed by the slot returned from :meth:`insert`.  An
    update returns the list of slots whose matched status flipped.
    """

    def __init__(self, n2: int) -> None:
        if n2 < 1:
            raise ValueError("need at least one right position")
        if n2 >= 1 << TIE_SHIFT:
            raise ValueError("too many right positions")
        self.n2 = n2
        self.nodes: dict[int, _Node] = {}
        self.depth = 0
        self._build(1, 0, n2 - 1, 0)
        self.begin: list[int] = []
        self.end: list[int] = []
        self.key: list[int] = []
        self.state: list[bytearray | None] = []
        self.free: list[int] = []
        self.matched_count = 0
        self._touched: dict[int, int] = {}

    def _build(self, v: int, lo: int, hi: int, depth: int) -> None:
        self.nodes[v] = _Node(lo, hi, depth)
        self.depth = max(self.depth, depth)
        if lo < hi:
            mid = (lo + hi) >> 1
            self._build(2 * v, lo, mid, depth + 1)
            self._build(2 * v + 1, mid + 1, hi, depth + 1)

    # ------------------------------------------------------------ public API

    def __len__(self) -> int:
        return self.matched_count

    def is_matched(self, slot: int) -> bool:
        st = self.state[slot]
        return st is not None and OUT_OF[st[0]] == OUT_M

    def insert(self, begin: int, end: int, tie: int = 0) -> tuple[int, list[int]]:
        """Add a vertex with edges ``[begin, end]``; return ``(slot, flipped slots)``."""
        if not (0 <= begin <= end < self.n2):
            raise ValueError(f"interval [{begin}, {end}] not inside [0, {self.n2})")
        if not 0 <= tie < TIE_LIMIT:
            raise ValueError("tie value out of range")
        if self.free:
            slot = self.free.pop()
        else:
            slot = len(self.begin)
            if slot > SLOT_MASK:
                raise OverflowError("too many live vertices")
            self.begin.append(0)
            self.end.append(0)
            self.key.append(0)
            self.state.append(None)
        self.begin[slot] = begin
        self.end[slot] = end
        self.key[slot] = (end << END_SHIFT) | (tie << TIE_SHIFT) | slot
        self.state[slot] = bytearray(self.depth + 1)
        return slot, self._update(slot, True)

    def delete(self, slot: int) -> list[int]:
        if slot >= len(self.state) or self.state[slot] is None:
            raise KeyError(f"slot {slot} is not live")
        flipped = self._update(slot, False)
        self.state[slot] = None
        self.free.append(slot)
        return flipped

    # ------------------------------------------------------------ propagation

    def _update(self, x: int, inserting: bool) -> list[int]:
        b = self.begin[x]
        path = []
        v = 1
        node = self.nodes[1]
        while node.lo < node.hi:
            path.append(v)
            v = 2 * v if b <= node.mid else 2 * v + 1
            node = self.nodes[v]
        diff = self._leaf(node, x, inserting)
        child = v
        for v in reversed(path):
            diff = self._combine(self.nodes[v], child == 2 * v, diff)
            child = v
        flipped = []
        for y, old, new in diff:
            if old == OUT_M:
                self.matched_count -= 1
                flipped.append(y)
            elif new == OUT_M:
                self.matched_count += 1
                flipped.append(y)
        return flipped

    def _leaf(self, node: _Node, x: int, inserting: bool) -> list[tuple[int, int, int]]:
        keys = node.leaf_keys
        d = node.depth
        diff = []
        p = node.lo
        if inserting:
            kx = self.key[x]
            if not keys or kx < keys[0]:
                if keys:
                    y = keys[0] & SLOT_MASK
                    new = OUT_T if self.end[y] > p else OUT_NONE
                    self.state[y][d] = LARGE_OUT if new == OUT_T else NONE
                    diff.append((y, OUT_M, new))
                self.state[x][d] = PASS
                diff.append((x, OUT_NONE, OUT_M))
            elif self.end[x] > p:
                self.state[x][d] = LARGE_OUT
                diff.append((x, OUT_NONE, OUT_T))
            keys.add(kx)
        else:
            kx = self.key[x]
            was_first = keys[0] == kx
            keys.remove(kx)
            old = OUT_OF[self.state[x][d]]
            self.state[x][d] = NONE
            if old != OUT_NONE:
                diff.append((x, old, OUT_NONE))
            if was_first and keys:
                y = keys[0] & SLOT_MASK
                old_y = OUT_OF[self.state[y][d]]
                self.state[y][d] = PASS
                diff.append((y, old_y, OUT_M))
        return diff

    def _combine(self, node: _Node, from_left: bool, diff) -> list[tuple[int, int, int]]:
        if node.slack_end is None:
            node.materialize()
        self._touched = touched = {}
        d = node.depth
        state = self.state
        # exits before entries keeps every intermediate set consistent
        for x, old, new in diff:
            if from_left:
                if old == OUT_M:
                    self._set(node, x, NONE)
                elif old == OUT_T:
                    self._remove(node, x)
            elif new == OUT_NONE:
                self._remove(node, x)
        for x, old, new in diff:
            if from_left:
                if new == OUT_M:
                    self._set(node, x, PASS)
                elif new == OUT_T:
                    self._add(node, x)
            elif old == OUT_NONE:
                self._add(node, x)
        return [
            (x, old, OUT_OF[state[x][d]])
            for x, old in touched.items()
            if OUT_OF[state[x][d]] != old
        ]

    def _set(self, node: _Node, x: int, code: int) -> None:
        st = self.state[x]
        if x not in self._touched:
            self._touched[x] = OUT_OF[st[node.depth]]
        st[node.depth] = code

    def _release(self, node: _Node, x: int) -> int:
        """Local release position of ``x`` inside the node's right range."""
        b = self.begin[x]
        return b - node.first if b > node.mid else 0

    def _add(self, node: _Node, x: int) -> None:
        if self.end[x] > node.hi:
            self._large_add(node, x)
        else:
            self._small_add(node, x)

    def _remove(self, node: _Node, x: int) -> None:
        if self.end[x] > node.hi:
            self._large_remove(node, x)
        else:
            self._small_remove(node, x)

    # ------------------------------------------------ small vertices (deadlines)

    def _end_bound(self, node: _Node, local_end: int) -> int:
        """Key bound separating ends ``<= first + local_end`` from larger ones."""
        return (node.first + local_end + 1) << END_SHIFT

    def _small_add(self, node: _Node, x: int) -> None:
        te = self.end[x] - node.first
        tight = node.slack_end.first_le(te, node.size - 1, 0)
        if tight < 0:
            self._accept(node, x)
            return
        i = node.small_in.bisect_left(self._end_bound(node, tight)) - 1
        w = node.small_in[i] & SLOT_MASK
        if self.key[x] > self.key[w]:
            node.small_out.add(self.key[x])
            self._set(node, x, REJECTED)
        else:
            self._unaccept(node, w)
            node.small_out.add(self.key[w])
            self._set(node, w, REJECTED)
            self._accept(node, x)

    def _small_remove(self, node: _Node, x: int) -> None:
        if self.state[x][node.depth] == REJECTED:
            node.small_out.remove(self.key[x])
            self._set(node, x, NONE)
            return
        self._unaccept(node, x)
        self._set(node, x, NONE)
        z = node.slack_end.last_le(0, node.size - 1, 0)
        i = node.small_out.bisect_left(self._end_bound(node, z))
        if i < len(node.small_out):
            w = node.small_out.pop(i) & SLOT_MASK
            self._accept(node, w)

    def _accept(self, node: _Node, x: int) -> None:
        node.slack_end.add(self.end[x] - node.first, node.size - 1, -1)
        node.small_in.add(self.key[x])
        self._set(node, x, SMALL)
        self._occupy(node, self._release(node, x))

    def _unaccept(self, node: _Node, x: int) -> None:
        node.slack_end.add(self.end[x] - node.first, node.size - 1, 1)
        node.small_in.remove(self.key[x])
        self._vacate(node, self._release(node, x))

    # ----------------------------------------------- slot walk for small vertices

    def _idle_slot_from(self, node: _Node, p: int) -> int:
        floor = min(0, node.walk.min(0, p - 1))
        return node.walk.first_le(p, node.size - 1, floor - 1)

    def _occupy(self, node: _Node, p: int) -> None:
        f = self._idle_slot_from(node, p)
        node.walk.add(p, node.size - 1, 1)
        self._slot_lost(node, f)

    def _vacate(self, node: _Node, p: int) -> None:
        node.walk.add(p, node.size - 1, -1)
        f = self._idle_slot_from(node, p)
        node.slack_begin.add(0, f, 1)
        self._refill_large(node)

    # ----------------------------------------------- large vertices (releases)

    def _large_put(self, node: _Node, x: int, inside: bool) -> None:
        q = self._release(node, x)
        k = self.key[x]
        if inside:
            s = node.large_in
            s.add((q, k))
            node.large_in_max.assign(q, s[s.bisect_left((q + 1, -1)) - 1][1])
            node.slack_begin.add(0, q, -1)
            self._set(node, x, LARGE_IN)
        else:
            node.large_out.add((q, k))
            node.large_out_min.assign(q, node.large_out[node.large_out.bisect_left((q, -1))][1])
            self._set(node, x, LARGE_OUT)

    def _large_take(self, node: _Node, x: int) -> int:
        """Remove ``x`` from its large set and return its old code."""
        q = self._release(node, x)
        k = self.key[x]
        code = self.state[x][node.depth]
        if code == LARGE_IN:
            s = node.large_in
            s.remove((q, k))
            i = s.bisect_left((q + 1, -1)) - 1
            node.large_in_max.assign(q, s[i][1] if i >= 0 and s[i][0] == q else None)
            node.slack_begin.add(0, q, 1)
        else:
            s = node.large_out
            s.remove((q, k))
            i = s.bisect_left((q, -1))
            node.large_out_min.assign(q, s[i][1] if i < len(s) and s[i][0] == q else None)
        return code

    def _large_add(self, node: _Node, x: int) -> None:
        s = self._release(node, x)
        z = node.slack_begin.last_le(0, s, 0)
        if z < 0:
            self._large_put(node, x, True)
            return
        ky = node.large_in_max.query(z, node.size - 1)
        if ky is None or self.key[x] > ky:
            self._large_put(node, x, False)
        else:
            y = ky & SLOT_MASK
            self._large_take(node, y)
            self._large_put(node, y, False)
            self._large_put(node, x, True)

    def _large_remove(self, node: _Node, x: int) -> None:
        code = self._large_take(node, x)
        self._set(node, x, NONE)
        if code == LARGE_IN:
            self._refill_large(node)

    def _slot_lost(self, node: _Node, f: int) -> None:
        node.slack_begin.add(0, f, -1)
        a = node.slack_begin.last_le(0, f, -1)
        if a >= 0:
            y = node.large_in_max.query(a, node.size - 1) & SLOT_MASK
            self._large_take(node, y)
            self._large_put(node, y, False)

    def _refill_large(self, node: _Node) -> None:
        a = node.slack_begin.first_le(0, node.size - 1, 0)
        limit = node.size - 1 if a < 0 else a - 1
        if limit < 0:
            return
        k = node.large_out_min.query(0, limit)
        if k is not None:
            w = k & SLOT_MASK
            self._large_take(node, w)
            self._large_put(node, w, True)


def count_inversions(seq) -> int:
    """Number of pairs ``i < j`` with ``seq[i] > seq[j]`` for a permutation of ``0..n-1``."""
    n = len(seq)
    bit = [0] * (n + 1)
    total = 0
    for i, x in enumerate(seq):
        if not 0 <= x < n:
            raise ValueError("sequence is not a permutation of 0..n-1")
        j = x + 1
        seen = 0
        while j > 0:
            seen += bit[j]
            j -= j & -j
        total += i - seen
        j = x + 1
        while j <= n:
            bit[j] += 1
            j += j & -j
    return total


def noncrossing_matching(angles, colors) -> list[int]:
    """Cheapest non-crossing perfect matching of two-colored points on the unit circle.

    ``angles`` must be nondecreasing and span less than a full turn;
    ``colors`` holds 0/1 per point and every pair joins different colors.
    Chord lengths are the costs.  Returns the partner index of every point.

    Interval dynamic program over the linear order: ``best[i][j]`` is the
    cheapest matching of the half-open run ``i..j``, found by choosing the
    partner ``k`` of ``i``; both sides of that chord must be color-balanced.
    """
    m = len(angles)
    if m % 2 or len(colors) != m:
        raise ValueError("need an even number of colored points")
    height = [0] * (m + 1)
    for p, c in enumerate(colors):
        height[p + 1] = height[p] + (1 if c == 0 else -1)
    if height[m] != 0:
        raise ValueError("colors are not balanced")
    partners_of = [
        [k for k in range(i + 1, m, 2) if colors[k] != colors[i] and height[k + 1] == height[i]]
        for i in range(m)
    ]
    ends_of = [[j for j in range(i + 2, m + 1, 2) if height[j] == height[i]] for i in range(m + 1)]
    best: list[dict[int, float]] = [{i: 0.0} for i in range(m + 1)]
    choice: list[dict[int, int]] = [{} for _ in range(m + 1)]
    for i in range(m - 1, -1, -1):
        row, pick, ai = best[i], choice[i], angles[i]
        inner = best[i + 1]
        for j in ends_of[i]:
            top = math.inf
            arg = -1
            for k in partners_of[i]:
                if k >= j:
                    break
                v = 2.0 * math.sin(0.5 * (angles[k] - ai)) + inner[k] + best[k + 1][j]
                if v < top:
                    top, arg = v, k
            row[j] = top
            pick[j] = arg
    partner = [-1] * m
    stack = [(0, m)]
    while stack:
        i, j = stack.pop()
        if i >= j:
            continue
        k = choice[i][j]
        partner[i], partner[k] = k, i
        stack.append((i + 1, k))
        stack.append((k + 1, j))
    return partner
