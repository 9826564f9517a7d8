# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels; see ``_pykernel`` for the algorithm description."""

from libc.math cimport sin, INFINITY
from libc.stdint cimport int64_t, uint8_t
from libcpp.set cimport set as cset
from libcpp.utility cimport pair
from libcpp.vector cimport vector
from cython.operator cimport dereference as deref, preincrement as inc, predecrement as dec

ctypedef int64_t key_t
ctypedef pair[int, key_t] qkey_t

cdef enum:
    NONE = 0
    PASS = 1
    SMALL = 2
    REJECTED = 3
    LARGE_IN = 4
    LARGE_OUT = 5

cdef enum:
    OUT_NONE = 0
    OUT_M = 1
    OUT_T = 2

cdef int END_SHIFT = 42
cdef int TIE_SHIFT = 21
cdef key_t SLOT_MASK = (<key_t>1 << 21) - 1
cdef key_t TIE_LIMIT = <key_t>1 << 21
cdef key_t EMPTY_MAX = -1
cdef key_t EMPTY_MIN = 0x7FFFFFFFFFFFFFFF
cdef int BIG = 1 << 30


cdef inline int out_of(uint8_t c) noexcept nogil:
    if c == PASS or c == SMALL or c == LARGE_IN:
        return OUT_M
    if c == LARGE_OUT:
        return OUT_T
    return OUT_NONE


# ---------------------------------------------------------------- min/add tree

cdef void mt_build(int* mn, int v, int lo, int hi, int kind, int m) noexcept nogil:
    cdef int mid
    if lo == hi:
        if kind == 0:
            mn[v] = lo + 1
        elif kind == 1:
            mn[v] = -(lo + 1)
        else:
            mn[v] = m - lo
        return
    mid = (lo + hi) >> 1
    mt_build(mn, 2 * v, lo, mid, kind, m)
    mt_build(mn, 2 * v + 1, mid + 1, hi, kind, m)
    mn[v] = mn[2 * v] if mn[2 * v] < mn[2 * v + 1] else mn[2 * v + 1]


cdef void mt_add(int* mn, int* lz, int v, int lo, int hi, int l, int r, int d) noexcept nogil:
    cdef int mid
    if l <= lo and hi <= r:
        mn[v] += d
        lz[v] += d
        return
    mid = (lo + hi) >> 1
    if l <= mid:
        mt_add(mn, lz, 2 * v, lo, mid, l, r, d)
    if r > mid:
        mt_add(mn, lz, 2 * v + 1, mid + 1, hi, l, r, d)
    mn[v] = (mn[2 * v] if mn[2 * v] < mn[2 * v + 1] else mn[2 * v + 1]) + lz[v]


cdef int mt_min(int* mn, int* lz, int v, int lo, int hi, int l, int r) noexcept nogil:
    cdef int mid, best, other
    if l <= lo and hi <= r:
        return mn[v]
    mid = (lo + hi) >> 1
    best = BIG
    if l <= mid:
        best = mt_min(mn, lz, 2 * v, lo, mid, l, r)
    if r > mid:
        other = mt_min(mn, lz, 2 * v + 1, mid + 1, hi, l, r)
        if other < best:
            best = other
    return best + lz[v]


cdef int mt_first(int* mn, int* lz, int v, int lo, int hi, int l, int r, int thr) noexcept nogil:
    cdef int mid, res
    if hi < l or lo > r or mn[v] > thr:
        return -1
    if lo == hi:
        return lo
    thr -= lz[v]
    mid = (lo + hi) >> 1
    res = mt_first(mn, lz, 2 * v, lo, mid, l, r, thr)
    if res < 0:
        res = mt_first(mn, lz, 2 * v + 1, mid + 1, hi, l, r, thr)
    return res


cdef int mt_last(int* mn, int* lz, int v, int lo, int hi, int l, int r, int thr) noexcept nogil:
    cdef int mid, res
    if hi < l or lo > r or mn[v] > thr:
        return -1
    if lo == hi:
        return lo
    thr -= lz[v]
    mid = (lo + hi) >> 1
    res = mt_last(mn, lz, 2 * v + 1, mid + 1, hi, l, r, thr)
    if res < 0:
        res = mt_last(mn, lz, 2 * v, lo, mid, l, r, thr)
    return res


# ---------------------------------------------------------------- extreme tree

cdef void et_assign(key_t* t, int size, int i, key_t value, bint largest) noexcept nogil:
    cdef key_t a, b
    i += size
    t[i] = value
    i >>= 1
    while i:
        a = t[2 * i]
        b = t[2 * i + 1]
        if largest:
            t[i] = a if a > b else b
        else:
            t[i] = a if a < b else b
        i >>= 1


cdef key_t et_query(key_t* t, int size, int l, int r, bint largest) noexcept nogil:
    cdef key_t res = EMPTY_MAX if largest else EMPTY_MIN
    l += size
    r += size + 1
    while l < r:
        if l & 1:
            if (largest and t[l] > res) or (not largest and t[l] < res):
                res = t[l]
            l += 1
        if r & 1:
            r -= 1
            if (largest and t[r] > res) or (not largest and t[r] < res):
                res = t[r]
        l >>= 1
        r >>= 1
    return res


cdef class ConvexCore:
    """Dynamic greedy matching over right positions ``0 .. n2-1`` (compiled)."""

    cdef readonly int n2
    cdef int depth_max
    cdef int nnodes
    # per node
    cdef vector[int] lo, hi, mid, depth, left, right, msize, ext_size
    cdef vector[int] off_min
    cdef vector[int] off_ext
    cdef vector[bint] ready
    cdef vector[int] mn_pool, lz_pool
    cdef vector[key_t] ext_pool
    cdef vector[cset[key_t]] leaf_keys, small_in, small_out
    cdef vector[cset[qkey_t]] large_in, large_out
    # per element
    cdef vector[int] ebegin, eend
    cdef vector[key_t] ekey
    cdef vector[uint8_t] estate
    cdef vector[bint] elive
    cdef vector[int] free_slots
    cdef int matched_count
    # scratch
    cdef vector[int] t_slot, t_old
    cdef vector[int] d_slot, d_old, d_new
    cdef vector[int] path

    def __cinit__(self, int n2):
        if n2 < 1:
            raise ValueError("need at least one right position")
        if n2 >= (1 << 21):
            raise ValueError("too many right positions")
        self.n2 = n2
        self.depth_max = 0
        self.nnodes = 0
        self.matched_count = 0
        cdef int total_min = 0, total_ext = 0
        self._build(0, n2 - 1, 0)
        cdef int v, m, size
        for v in range(self.nnodes):
            self.off_min.push_back(total_min)
            self.off_ext.push_back(total_ext)
            self.ext_size.push_back(0)
            if self.lo[v] < self.hi[v]:
                m = self.msize[v]
                size = 1
                while size < m:
                    size *= 2
                self.ext_size[v] = size
                total_min += 12 * m
                total_ext += 4 * size
        self.mn_pool.resize(total_min, 0)
        self.lz_pool.resize(total_min, 0)
        self.ext_pool.resize(total_ext, 0)
        self.ready.resize(self.nnodes, False)
        self.leaf_keys.resize(self.nnodes)
        self.small_in.resize(self.nnodes)
        self.small_out.resize(self.nnodes)
        self.large_in.resize(self.nnodes)
        self.large_out.resize(self.nnodes)

    cdef int _build(self, int lo, int hi, int depth):
        cdef int v = self.nnodes
        self.nnodes += 1
        self.lo.push_back(lo)
        self.hi.push_back(hi)
        self.mid.push_back((lo + hi) >> 1)
        self.depth.push_back(depth)
        self.left.push_back(-1)
        self.right.push_back(-1)
        self.msize.push_back(hi - ((lo + hi) >> 1))
        if depth > self.depth_max:
            self.depth_max = depth
        cdef int a, b
        if lo < hi:
            a = self._build(lo, (lo + hi) >> 1, depth + 1)
            b = self._build(((lo + hi) >> 1) + 1, hi, depth + 1)
            self.left[v] = a
            self.right[v] = b
        return v

    cdef void _materialize(self, int v) noexcept:
        cdef int m = self.msize[v]
        cdef int o = self.off_min[v]
        cdef int size = self.ext_size[v]
        cdef int e = self.off_ext[v]
        cdef int i
        mt_build(&self.mn_pool[o], 1, 0, m - 1, 0, m)
        mt_build(&self.mn_pool[o + 4 * m], 1, 0, m - 1, 1, m)
        mt_build(&self.mn_pool[o + 8 * m], 1, 0, m - 1, 2, m)
        for i in range(2 * size):
            self.ext_pool[e + i] = EMPTY_MAX
            self.ext_pool[e + 2 * size + i] = EMPTY_MIN
        self.ready[v] = True

    # tree accessors: which = 0 slack over ends, 1 slot walk, 2 slack over begins
    cdef inline void t_add(self, int v, int which, int l, int r, int d) noexcept:
        cdef int m = self.msize[v]
        cdef int o = self.off_min[v] + 4 * m * which
        if l <= r:
            mt_add(&self.mn_pool[o], &self.lz_pool[o], 1, 0, m - 1, l, r, d)

    cdef inline int t_min(self, int v, int which, int l, int r) noexcept:
        cdef int m = self.msize[v]
        cdef int o = self.off_min[v] + 4 * m * which
        if l > r:
            return BIG
        return mt_min(&self.mn_pool[o], &self.lz_pool[o], 1, 0, m - 1, l, r)

    cdef inline int t_first(self, int v, int which, int l, int r, int thr) noexcept:
        cdef int m = self.msize[v]
        cdef int o = self.off_min[v] + 4 * m * which
        if l > r:
            return -1
        return mt_first(&self.mn_pool[o], &self.lz_pool[o], 1, 0, m - 1, l, r, thr)

    cdef inline int t_last(self, int v, int which, int l, int r, int thr) noexcept:
        cdef int m = self.msize[v]
        cdef int o = self.off_min[v] + 4 * m * which
        if l > r:
            return -1
        return mt_last(&self.mn_pool[o], &self.lz_pool[o], 1, 0, m - 1, l, r, thr)

    # ------------------------------------------------------------ public API

    def __len__(self):
        return self.matched_count

    def is_matched(self, int slot):
        if slot < 0 or slot >= <int>self.elive.size() or not self.elive[slot]:
            return False
        return out_of(self.estate[slot * (self.depth_max + 1)]) == OUT_M

    def insert(self, int begin, int end, int tie=0):
        if not (0 <= begin <= end < self.n2):
            raise ValueError(f"interval [{begin}, {end}] not inside [0, {self.n2})")
        if not (0 <= tie < TIE_LIMIT):
            raise ValueError("tie value out of range")
        cdef int slot, i
        cdef int width = self.depth_max + 1
        if not self.free_slots.empty():
            slot = self.free_slots.back()
            self.free_slots.pop_back()
        else:
            slot = <int>self.ebegin.size()
            if slot > SLOT_MASK:
                raise OverflowError("too many live vertices")
            self.ebegin.push_back(0)
            self.eend.push_back(0)
            self.ekey.push_back(0)
            self.elive.push_back(False)
            for i in range(width):
                self.estate.push_back(NONE)
        self.ebegin[slot] = begin
        self.eend[slot] = end
        self.ekey[slot] = (<key_t>end << END_SHIFT) | (<key_t>tie << TIE_SHIFT) | slot
        self.elive[slot] = True
        for i in range(width):
            self.estate[slot * width + i] = NONE
        self._update(slot, True)
        return slot, self._flipped()

    def delete(self, int slot):
        if slot < 0 or slot >= <int>self.elive.size() or not self.elive[slot]:
            raise KeyError(f"slot {slot} is not live")
        self._update(slot, False)
        self.elive[slot] = False
        self.free_slots.push_back(slot)
        return self._flipped()

    cdef list _flipped(self):
        cdef list out = []
        cdef size_t i
        for i in range(self.d_slot.size()):
            if self.d_old[i] == OUT_M:
                self.matched_count -= 1
                out.append(self.d_slot[i])
            elif self.d_new[i] == OUT_M:
                self.matched_count += 1
                out.append(self.d_slot[i])
        return out

    # ------------------------------------------------------------ propagation

    cdef inline uint8_t st(self, int x, int v) noexcept:
        return self.estate[x * (self.depth_max + 1) + self.depth[v]]

    cdef void _update(self, int x, bint inserting) noexcept:
        cdef int b = self.ebegin[x]
        cdef int v = 0
        cdef int k, child
        self.path.clear()
        while self.lo[v] < self.hi[v]:
            self.path.push_back(v)
            v = self.left[v] if b <= self.mid[v] else self.right[v]
        self._leaf(v, x, inserting)
        child = v
        for k in range(<int>self.path.size() - 1, -1, -1):
            v = self.path[k]
            self._combine(v, child == self.left[v])
            child = v

    cdef void _diff(self, int x, int old, int new) noexcept:
        self.d_slot.push_back(x)
        self.d_old.push_back(old)
        self.d_new.push_back(new)

    cdef void _leaf(self, int v, int x, bint inserting) noexcept:
        cdef cset[key_t]* keys = &self.leaf_keys[v]
        cdef int width = self.depth_max + 1
        cdef int dv = self.depth[v]
        cdef int p = self.lo[v]
        cdef key_t kx = self.ekey[x]
        cdef int y, old, new
        cdef bint was_first
        self.d_slot.clear()
        self.d_old.clear()
        self.d_new.clear()
        if inserting:
            if keys.empty() or kx < deref(keys.begin()):
                if not keys.empty():
                    y = <int>(deref(keys.begin()) & SLOT_MASK)
                    new = OUT_T if self.eend[y] > p else OUT_NONE
                    self.estate[y * width + dv] = LARGE_OUT if new == OUT_T else NONE
                    self._diff(y, OUT_M, new)
                self.estate[x * width + dv] = PASS
                self._diff(x, OUT_NONE, OUT_M)
            elif self.eend[x] > p:
                self.estate[x * width + dv] = LARGE_OUT
                self._diff(x, OUT_NONE, OUT_T)
            keys.insert(kx)
        else:
            was_first = deref(keys.begin()) == kx
            keys.erase(kx)
            old = out_of(self.estate[x * width + dv])
            self.estate[x * width + dv] = NONE
            if old != OUT_NONE:
                self._diff(x, old, OUT_NONE)
            if was_first and not keys.empty():
                y = <int>(deref(keys.begin()) & SLOT_MASK)
                old = out_of(self.estate[y * width + dv])
                self.estate[y * width + dv] = PASS
                self._diff(y, old, OUT_M)

    cdef void _combine(self, int v, bint from_left) noexcept:
        cdef vector[int] slots = self.d_slot
        cdef vector[int] olds = self.d_old
        cdef vector[int] news = self.d_new
        cdef size_t i
        cdef int x, o, n
        cdef int width = self.depth_max + 1
        cdef int dv = self.depth[v]
        if not self.ready[v]:
            self._materialize(v)
        self.t_slot.clear()
        self.t_old.clear()
        for i in range(slots.size()):
            x = slots[i]
            o = olds[i]
            n = news[i]
            if from_left:
                if o == OUT_M:
                    self._set(v, x, NONE)
                elif o == OUT_T:
                    self._remove(v, x)
            elif n == OUT_NONE:
                self._remove(v, x)
        for i in range(slots.size()):
            x = slots[i]
            o = olds[i]
            n = news[i]
            if from_left:
                if n == OUT_M:
                    self._set(v, x, PASS)
                elif n == OUT_T:
                    self._add(v, x)
            elif o == OUT_NONE:
                self._add(v, x)
        self.d_slot.clear()
        self.d_old.clear()
        self.d_new.clear()
        for i in range(self.t_slot.size()):
            x = self.t_slot[i]
            n = out_of(self.estate[x * width + dv])
            if n != self.t_old[i]:
                self._diff(x, self.t_old[i], n)

    cdef void _set(self, int v, int x, uint8_t code) noexcept:
        cdef size_t i
        cdef int idx = x * (self.depth_max + 1) + self.depth[v]
        cdef bint seen = False
        for i in range(self.t_slot.size()):
            if self.t_slot[i] == x:
                seen = True
                break
        if not seen:
            self.t_slot.push_back(x)
            self.t_old.push_back(out_of(self.estate[idx]))
        self.estate[idx] = code

    cdef inline int _release(self, int v, int x) noexcept:
        cdef int b = self.ebegin[x]
        return b - self.mid[v] - 1 if b > self.mid[v] else 0

    cdef void _add(self, int v, int x) noexcept:
        if self.eend[x] > self.hi[v]:
            self._large_add(v, x)
        else:
            self._small_add(v, x)

    cdef void _remove(self, int v, int x) noexcept:
        if self.eend[x] > self.hi[v]:
            self._large_remove(v, x)
        else:
            self._small_remove(v, x)

    # ------------------------------------------------ small vertices (deadlines)

    cdef inline key_t _end_bound(self, int v, int local_end) noexcept:
        return <key_t>(self.mid[v] + 1 + local_end + 1) << END_SHIFT

    cdef void _small_add(self, int v, int x) noexcept:
        cdef int m = self.msize[v]
        cdef int te = self.eend[x] - self.mid[v] - 1
        cdef int tight = self.t_first(v, 0, te, m - 1, 0)
        cdef cset[key_t].iterator it
        cdef int w
        if tight < 0:
            self._accept(v, x)
            return
        it = self.small_in[v].lower_bound(self._end_bound(v, tight))
        dec(it)
        w = <int>(deref(it) & SLOT_MASK)
        if self.ekey[x] > self.ekey[w]:
            self.small_out[v].insert(self.ekey[x])
            self._set(v, x, REJECTED)
        else:
            self._unaccept(v, w)
            self.small_out[v].insert(self.ekey[w])
            self._set(v, w, REJECTED)
            self._accept(v, x)

    cdef void _small_remove(self, int v, int x) noexcept:
        cdef int m = self.msize[v]
        cdef int z, w
        cdef cset[key_t].iterator it
        if self.st(x, v) == REJECTED:
            self.small_out[v].erase(self.ekey[x])
            self._set(v, x, NONE)
            return
        self._unaccept(v, x)
        self._set(v, x, NONE)
        z = self.t_last(v, 0, 0, m - 1, 0)
        it = self.small_out[v].lower_bound(self._end_bound(v, z))
        if it != self.small_out[v].end():
            w = <int>(deref(it) & SLOT_MASK)
            self.small_out[v].erase(it)
            self._accept(v, w)

    cdef void _accept(self, int v, int x) noexcept:
        self.t_add(v, 0, self.eend[x] - self.mid[v] - 1, self.msize[v] - 1, -1)
        self.small_in[v].insert(self.ekey[x])
        self._set(v, x, SMALL)
        self._occupy(v, self._release(v, x))

    cdef void _unaccept(self, int v, int x) noexcept:
        self.t_add(v, 0, self.eend[x] - self.mid[v] - 1, self.msize[v] - 1, 1)
        self.small_in[v].erase(self.ekey[x])
        self._vacate(v, self._release(v, x))

    # ----------------------------------------------- slot walk for small vertices

    cdef int _idle_slot_from(self, int v, int p) noexcept:
        cdef int floor = self.t_min(v, 1, 0, p - 1)
        if floor > 0:
            floor = 0
        return self.t_first(v, 1, p, self.msize[v] - 1, floor - 1)

    cdef void _occupy(self, int v, int p) noexcept:
        cdef int f = self._idle_slot_from(v, p)
        self.t_add(v, 1, p, self.msize[v] - 1, 1)
        self._slot_lost(v, f)

    cdef void _vacate(self, int v, int p) noexcept:
        self.t_add(v, 1, p, self.msize[v] - 1, -1)
        cdef int f = self._idle_slot_from(v, p)
        self.t_add(v, 2, 0, f, 1)
        self._refill_large(v)

    # ----------------------------------------------- large vertices (releases)

    cdef void _large_put(self, int v, int x, bint inside) noexcept:
        cdef int q = self._release(v, x)
        cdef key_t k = self.ekey[x]
        cdef int size = self.ext_size[v]
        cdef int e = self.off_ext[v]
        cdef cset[qkey_t].iterator it
        if inside:
            self.large_in[v].insert(qkey_t(q, k))
            it = self.large_in[v].lower_bound(qkey_t(q + 1, -1))
            dec(it)
            et_assign(&self.ext_pool[e], size, q, deref(it).second, True)
            self.t_add(v, 2, 0, q, -1)
            self._set(v, x, LARGE_IN)
        else:
            self.large_out[v].insert(qkey_t(q, k))
            it = self.large_out[v].lower_bound(qkey_t(q, -1))
            et_assign(&self.ext_pool[e + 2 * size], size, q, deref(it).second, False)
            self._set(v, x, LARGE_OUT)

    cdef uint8_t _large_take(self, int v, int x) noexcept:
        cdef int q = self._release(v, x)
        cdef key_t k = self.ekey[x]
        cdef uint8_t code = self.st(x, v)
        cdef int size = self.ext_size[v]
        cdef int e = self.off_ext[v]
        cdef cset[qkey_t].iterator it
        cdef key_t val
        if code == LARGE_IN:
            self.large_in[v].erase(qkey_t(q, k))
            it = self.large_in[v].lower_bound(qkey_t(q + 1, -1))
            val = EMPTY_MAX
            if it != self.large_in[v].begin():
                dec(it)
                if deref(it).first == q:
                    val = deref(it).second
            et_assign(&self.ext_pool[e], size, q, val, True)
            self.t_add(v, 2, 0, q, 1)
        else:
            self.large_out[v].erase(qkey_t(q, k))
            it = self.large_out[v].lower_bound(qkey_t(q, -1))
            val = EMPTY_MIN
            if it != self.large_out[v].end() and deref(it).first == q:
                val = deref(it).second
            et_assign(&self.ext_pool[e + 2 * size], size, q, val, False)
        return code

    cdef void _large_add(self, int v, int x) noexcept:
        cdef int s = self._release(v, x)
        cdef int z = self.t_last(v, 2, 0, s, 0)
        cdef key_t ky
        cdef int y
        if z < 0:
            self._large_put(v, x, True)
            return
        ky = et_query(&self.ext_pool[self.off_ext[v]], self.ext_size[v], z, self.msize[v] - 1, True)
        if ky == EMPTY_MAX or self.ekey[x] > ky:
            self._large_put(v, x, False)
        else:
            y = <int>(ky & SLOT_MASK)
            self._large_take(v, y)
            self._large_put(v, y, False)
            self._large_put(v, x, True)

    cdef void _large_remove(self, int v, int x) noexcept:
        cdef uint8_t code = self._large_take(v, x)
        self._set(v, x, NONE)
        if code == LARGE_IN:
            self._refill_large(v)

    cdef void _slot_lost(self, int v, int f) noexcept:
        cdef int a
        cdef int y
        self.t_add(v, 2, 0, f, -1)
        a = self.t_last(v, 2, 0, f, -1)
        if a >= 0:
            y = <int>(et_query(&self.ext_pool[self.off_ext[v]], self.ext_size[v], a, self.msize[v] - 1, True) & SLOT_MASK)
            self._large_take(v, y)
            self._large_put(v, y, False)

    cdef void _refill_large(self, int v) noexcept:
        cdef int m = self.msize[v]
        cdef int a = self.t_first(v, 2, 0, m - 1, 0)
        cdef int limit = m - 1 if a < 0 else a - 1
        cdef key_t k
        cdef int w
        if limit < 0:
            return
        k = et_query(&self.ext_pool[self.off_ext[v] + 2 * self.ext_size[v]], self.ext_size[v], 0, limit, False)
        if k != EMPTY_MIN:
            w = <int>(k & SLOT_MASK)
            self._large_take(v, w)
            self._large_put(v, w, True)


def count_inversions(seq):
    """Number of pairs ``i < j`` with ``seq[i] > seq[j]`` for a permutation of ``0..n-1``."""
    cdef Py_ssize_t n = len(seq)
    cdef vector[int64_t] bit
    cdef vector[int] vals
    cdef Py_ssize_t i
    cdef int j, x
    cdef int64_t total = 0, seen
    bit.resize(n + 1, 0)
    vals.resize(n)
    for i in range(n):
        x = seq[i]
        if x < 0 or x >= n:
            raise ValueError("sequence is not a permutation of 0..n-1")
        vals[i] = x
    for i in range(n):
        x = vals[i] + 1
        # count already-seen values <= x
        seen = 0
        j = x
        while j > 0:
            seen += bit[j]
            j -= j & (-j)
        total += i - seen
        j = x
        while j <= n:
            bit[j] += 1
            j += j & (-j)
    return total


def noncrossing_matching(angles, colors):
    """Cheapest non-crossing perfect matching of two-colored points on the unit circle."""
    cdef Py_ssize_t m = len(angles)
    if m % 2 or len(colors) != m:
        raise ValueError("need an even number of colored points")
    cdef vector[double] a
    cdef vector[int] col, height
    cdef Py_ssize_t p, i, j, k, w = m + 1
    a.resize(m)
    col.resize(m)
    height.resize(m + 1, 0)
    for p in range(m):
        a[p] = angles[p]
        if colors[p] == 0:
            col[p] = 0
            height[p + 1] = height[p] + 1
        else:
            col[p] = 1
            height[p + 1] = height[p] - 1
    if height[m] != 0:
        raise ValueError("colors are not balanced")
    cdef vector[double] best
    cdef vector[int] choice
    best.resize(w * w, 0.0)
    choice.resize(w * w, -1)
    cdef double top, v
    cdef int arg
    with nogil:
        for i in range(m - 1, -1, -1):
            for j in range(i + 2, m + 1, 2):
                if height[j] != height[i]:
                    continue
                top = INFINITY
                arg = -1
                for k in range(i + 1, j, 2):
                    if col[k] == col[i] or height[k + 1] != height[i]:
                        continue
                    v = 2.0 * sin(0.5 * (a[k] - a[i])) + best[(i + 1) * w + k] + best[(k + 1) * w + j]
                    if v < top:
                        top = v
                        arg = <int>k
                best[i * w + j] = top
                choice[i * w + j] = arg
    partner = [-1] * m
    stack = [(0, m)]
    while stack:
        i, j = stack.pop()
        if i >= j:
            continue
        k = choice[i * w + j]
        partner[i] = k
        partner[k] = i
        stack.append((i + 1, k))
        stack.append((k + 1, j))
    return partner
