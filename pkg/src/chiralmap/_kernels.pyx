# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Cayley-graph kernels.

Permutations of degree <= 16 are packed four bits per point into a uint64
and stored in an open-addressing hash table.  Larger degrees are handed to
the pure-Python kernels.
"""

from libc.stdint cimport uint64_t, uint8_t, int64_t
from libc.stdlib cimport malloc, calloc, free

from math import factorial

from . import _kernels_py

cdef enum:
    MAXDEG = 16


cdef inline uint64_t _pack(const int *p, int k) nogil:
    cdef uint64_t key = 0
    cdef int i
    for i in range(k):
        key |= (<uint64_t>p[i]) << (4 * i)
    return key


cdef inline void _unpack(uint64_t key, int *p, int k) nogil:
    cdef int i
    for i in range(k):
        p[i] = <int>((key >> (4 * i)) & 15)


cdef inline uint64_t _mix(uint64_t x) nogil:
    x ^= x >> 33
    x *= 0xff51afd7ed558ccdULL
    x ^= x >> 33
    x *= 0xc4ceb9fe1a85ec53ULL
    x ^= x >> 33
    return x


cdef struct Table:
    uint64_t *keys
    uint64_t *vals
    uint8_t *used
    uint64_t mask


cdef int _table_init(Table *t, int64_t bound, bint with_vals):
    cdef uint64_t cap = 16
    while cap < <uint64_t>(2 * bound + 2):
        cap <<= 1
    t.mask = cap - 1
    t.keys = <uint64_t *> malloc(cap * sizeof(uint64_t))
    t.used = <uint8_t *> calloc(cap, sizeof(uint8_t))
    t.vals = NULL
    if with_vals:
        t.vals = <uint64_t *> malloc(cap * sizeof(uint64_t))
    if t.keys == NULL or t.used == NULL or (with_vals and t.vals == NULL):
        return -1
    return 0


cdef void _table_free(Table *t):
    free(t.keys)
    free(t.used)
    if t.vals != NULL:
        free(t.vals)


cdef inline uint64_t _slot(Table *t, uint64_t key) nogil:
    # index of key, or of the empty slot where it belongs
    cdef uint64_t h = _mix(key) & t.mask
    while t.used[h] and t.keys[h] != key:
        h = (h + 1) & t.mask
    return h


cdef int _load(list gens, int k, int *out) except -1:
    cdef int j, i
    for j in range(len(gens)):
        g = gens[j]
        for i in range(k):
            out[j * k + i] = <int> g[i]
    return 0


def cayley_enumerate(gens, int degree, long long bound):
    """Number of elements of ``<gens>``, or -1 once more than ``bound`` are found."""
    if degree > MAXDEG or degree < 1:
        return _kernels_py.cayley_enumerate(gens, degree, bound)
    # no subgroup of S_k is larger than k!
    bound = min(bound, factorial(degree))
    gens = [tuple(g) for g in gens]
    cdef int k = degree
    cdef int ng = len(gens)
    cdef int *gv = <int *> malloc((ng * k + 1) * sizeof(int))
    cdef uint64_t *queue = <uint64_t *> malloc((bound + 1) * sizeof(uint64_t))
    cdef Table tab
    if gv == NULL or queue == NULL or _table_init(&tab, bound, False) != 0:
        free(gv)
        free(queue)
        raise MemoryError()
    _load(gens, k, gv)
    cdef int cur[MAXDEG]
    cdef int nxt[MAXDEG]
    cdef int i, j
    cdef int64_t head = 0, tail = 0, count = 0
    cdef uint64_t key, h
    cdef int64_t result = 0
    for i in range(k):
        cur[i] = i
    key = _pack(cur, k)
    h = _slot(&tab, key)
    tab.used[h] = 1
    tab.keys[h] = key
    queue[tail] = key
    tail += 1
    count = 1
    with nogil:
        while head < tail:
            _unpack(queue[head], cur, k)
            head += 1
            for j in range(ng):
                for i in range(k):
                    nxt[i] = gv[j * k + cur[i]]
                key = _pack(nxt, k)
                h = _slot(&tab, key)
                if not tab.used[h]:
                    if count >= bound:
                        result = -1
                        break
                    tab.used[h] = 1
                    tab.keys[h] = key
                    queue[tail] = key
                    tail += 1
                    count += 1
            if result == -1:
                break
        if result == 0:
            result = count
    _table_free(&tab)
    free(gv)
    free(queue)
    return result


def extend_homomorphism(gens, images, int degree, long long bound):
    """Check whether ``gens[j] -> images[j]`` extends to a homomorphism.

    Returns ``(status, count)`` with status 1 consistent, 0 inconsistent,
    -1 when the group has more than ``bound`` elements.
    """
    if degree > MAXDEG or degree < 1:
        return _kernels_py.extend_homomorphism(gens, images, degree, bound)
    # no subgroup of S_k is larger than k!
    bound = min(bound, factorial(degree))
    gens = [tuple(g) for g in gens]
    images = [tuple(g) for g in images]
    cdef int k = degree
    cdef int ng = len(gens)
    cdef int *gv = <int *> malloc((ng * k + 1) * sizeof(int))
    cdef int *iv = <int *> malloc((ng * k + 1) * sizeof(int))
    cdef uint64_t *queue = <uint64_t *> malloc((bound + 1) * sizeof(uint64_t))
    cdef Table tab
    if gv == NULL or iv == NULL or queue == NULL or _table_init(&tab, bound, True) != 0:
        free(gv)
        free(iv)
        free(queue)
        raise MemoryError()
    _load(gens, k, gv)
    _load(images, k, iv)
    cdef int cur[MAXDEG]
    cdef int fcur[MAXDEG]
    cdef int nxt[MAXDEG]
    cdef int fnxt[MAXDEG]
    cdef int i, j
    cdef int64_t head = 0, tail = 0, count = 0
    cdef uint64_t key, fkey, h, hcur
    cdef int status = 1
    for i in range(k):
        cur[i] = i
    key = _pack(cur, k)
    h = _slot(&tab, key)
    tab.used[h] = 1
    tab.keys[h] = key
    tab.vals[h] = key
    queue[tail] = key
    tail += 1
    count = 1
    with nogil:
        while head < tail and status == 1:
            key = queue[head]
            head += 1
            hcur = _slot(&tab, key)
            _unpack(key, cur, k)
            _unpack(tab.vals[hcur], fcur, k)
            for j in range(ng):
                for i in range(k):
                    nxt[i] = gv[j * k + cur[i]]
                    fnxt[i] = iv[j * k + fcur[i]]
                key = _pack(nxt, k)
                fkey = _pack(fnxt, k)
                h = _slot(&tab, key)
                if tab.used[h]:
                    if tab.vals[h] != fkey:
                        status = 0
                        break
                else:
                    if count >= bound:
                        status = -1
                        break
                    tab.used[h] = 1
                    tab.keys[h] = key
                    tab.vals[h] = fkey
                    queue[tail] = key
                    tail += 1
                    count += 1
    _table_free(&tab)
    free(gv)
    free(iv)
    free(queue)
    return status, count
