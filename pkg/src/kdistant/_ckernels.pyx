# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels; see ``_pykernels`` for the algorithms."""
from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free
from libc.string cimport memset

from kdistant import _pykernels

BACKEND = "cython"

# dense DP tables above this many cells defer to the sparse Python kernel
cdef size_t MAX_CELLS = 1 << 23

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline bint _push(uint64_t* table, int stride, unsigned long long mask, int old,
                       int fresh, unsigned long long overflow, int budget,
                       uint64_t c) nogil:
    """Add ``c`` to the successor state; returns False on 64-bit overflow."""
    mask = (mask << 1) | fresh
    if mask & overflow:
        mask ^= overflow
        old += 1
    if __builtin_popcountll(mask) + old > budget:
        return True
    cdef uint64_t* cell = &table[mask * stride + old]
    if cell[0] > <uint64_t>0xFFFFFFFFFFFFFFFF - c:
        return False
    cell[0] += c
    return True


def profile_count(int n, int k, bint matchings):
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if matchings and n % 2:
        return 0
    if n == 0:
        return 1
    cdef int width = min(max(k - 1, 0), n - 1)
    cdef int stride = n // 2 + 2
    cdef size_t cells = (<size_t>1 << width) * stride
    if cells > MAX_CELLS:
        return _pykernels.profile_count(n, k, matchings)
    cdef uint64_t* cur = <uint64_t*>calloc(cells, sizeof(uint64_t))
    cdef uint64_t* nxt = <uint64_t*>calloc(cells, sizeof(uint64_t))
    cdef uint64_t* tmp
    if cur == NULL or nxt == NULL:
        free(cur)
        free(nxt)
        raise MemoryError()
    cdef unsigned long long overflow = 1ULL << width
    cdef unsigned long long nmask = 1ULL << width
    cdef unsigned long long mask, bits, low
    cdef int i, old, budget
    cdef uint64_t c
    cdef bint ok = True
    cdef bint allow_transient = (not matchings) and k >= 1
    cur[0] = 1
    with nogil:
        for i in range(1, n + 1):
            budget = n - i
            memset(nxt, 0, cells * sizeof(uint64_t))
            for mask in range(nmask):
                if __builtin_popcountll(mask) > budget + 1:
                    continue
                for old in range(stride):
                    c = cur[mask * stride + old]
                    if c == 0:
                        continue
                    ok = ok and _push(nxt, stride, mask, old, 1, overflow, budget, c)
                    if not matchings:
                        ok = ok and _push(nxt, stride, mask, old, 0, overflow, budget, c)
                    bits = mask
                    while bits:
                        low = bits & (~bits + 1)
                        ok = ok and _push(nxt, stride, mask ^ low, old, 0, overflow, budget, c)
                        if allow_transient:
                            ok = ok and _push(nxt, stride, mask ^ low, old, 1, overflow, budget, c)
                        bits ^= low
                    if old:
                        ok = ok and _push(nxt, stride, mask, old - 1, 0, overflow, budget, c)
                        if allow_transient:
                            ok = ok and _push(nxt, stride, mask, old - 1, 1, overflow, budget, c)
            tmp = cur
            cur = nxt
            nxt = tmp
            if not ok:
                break
    result = cur[0]
    free(cur)
    free(nxt)
    if not ok:
        return _pykernels.profile_count(n, k, matchings)
    return int(result)


cdef struct Enum:
    int n
    bint matchings
    int nblocks
    int* sizes
    int* last      # last vertex placed in each block
    int* word
    int* arc_i     # opener of the arc closed at vertex v (0 if none)
    int* best      # best crossing distance over the prefix ending at each vertex
    long long* hist  # indexed by best + 1


cdef void _place(Enum* e, int pos, int b) nogil:
    """Put vertex ``pos`` (1-based) in block ``b`` and update the running best."""
    cdef int prev_best = e.best[pos - 1]
    cdef int i2, v, i1
    e.word[pos] = b
    e.arc_i[pos] = 0
    if b == e.nblocks:
        e.nblocks += 1
        e.sizes[b] = 1
    else:
        e.sizes[b] += 1
        i2 = e.last[b]
        e.arc_i[pos] = i2
        # earlier arcs (i1, v) with i1 < i2 <= v cross the new arc (i2, pos)
        for v in range(i2, pos):
            i1 = e.arc_i[v]
            if i1 != 0 and i1 < i2 and v - i2 > prev_best:
                prev_best = v - i2
    e.last[b] = pos
    e.best[pos] = prev_best


cdef void _unplace(Enum* e, int pos, int b, int prev_last) nogil:
    if e.sizes[b] == 1:
        e.nblocks -= 1
    else:
        e.sizes[b] -= 1
    e.last[b] = prev_last


cdef void _rec(Enum* e, int pos, int open_blocks) nogil:
    cdef int b, prev_last, remaining
    if pos > e.n:
        if not e.matchings or open_blocks == 0:
            e.hist[e.best[e.n] + 1] += 1
        return
    remaining = e.n - pos + 1
    for b in range(e.nblocks + 1):
        if e.matchings:
            if b == e.nblocks:
                if open_blocks + 1 > remaining - 1:
                    continue
            elif e.sizes[b] != 1:
                continue
        prev_last = e.last[b] if b < e.nblocks else 0
        _place(e, pos, b)
        if b == e.nblocks - 1 and e.sizes[b] == 1:
            _rec(e, pos + 1, open_blocks + 1)
        else:
            _rec(e, pos + 1, open_blocks - 1)
        _unplace(e, pos, b, prev_last)


def crossing_distance_histogram(int n, bint matchings, prefix=()):
    if n < 0:
        raise ValueError("n must be nonnegative")
    if matchings and n % 2:
        return {}
    cdef Enum e
    cdef int m = n + 2
    cdef int pos, b, open_blocks = 0
    e.n = n
    e.matchings = matchings
    e.nblocks = 0
    e.sizes = <int*>calloc(m, sizeof(int))
    e.last = <int*>calloc(m, sizeof(int))
    e.word = <int*>calloc(m, sizeof(int))
    e.arc_i = <int*>calloc(m, sizeof(int))
    e.best = <int*>calloc(m, sizeof(int))
    e.hist = <long long*>calloc(m + 1, sizeof(long long))
    try:
        if (e.sizes == NULL or e.last == NULL or e.word == NULL or e.arc_i == NULL
                or e.best == NULL or e.hist == NULL):
            raise MemoryError()
        e.best[0] = -1
        pos = 1
        for b in prefix:
            if pos > n or b < 0 or b > e.nblocks:
                raise ValueError(f"invalid restricted-growth prefix {tuple(prefix)!r}")
            if matchings and b < e.nblocks and e.sizes[b] != 1:
                raise ValueError(f"prefix {tuple(prefix)!r} is not a matching prefix")
            _place(&e, pos, b)
            pos += 1
        if matchings:
            for b in range(e.nblocks):
                if e.sizes[b] == 1:
                    open_blocks += 1
            if open_blocks > n - pos + 1:
                return {}
        with nogil:
            _rec(&e, pos, open_blocks)
        return {d - 1: int(e.hist[d]) for d in range(m + 1) if e.hist[d]}
    finally:
        free(e.sizes)
        free(e.last)
        free(e.word)
        free(e.arc_i)
        free(e.best)
        free(e.hist)
