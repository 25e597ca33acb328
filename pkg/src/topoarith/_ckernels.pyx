# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bulk order kernels; same API as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport qsort

cnp.import_array()

IMPLEMENTATION = "cython"

cdef enum:
    FD = 0
    VARIANT = 1
    SIGNED = 2

cdef extern from *:
    """
    static inline int tk_clz64(unsigned long long x) { return __builtin_clzll(x); }
    static inline int tk_ctz64(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int tk_clz64(unsigned long long x) nogil
    int tk_ctz64(unsigned long long x) nogil


cdef inline int bitlen(uint64_t n) noexcept nogil:
    if n == 0:
        return 0
    return 64 - tk_clz64(n)


cdef inline int fd_c(uint64_t n, uint64_t m) noexcept nogil:
    cdef uint64_t x
    cdef int ln, lm, p, short
    if n == m:
        return 0
    x = n ^ m
    ln = bitlen(n)
    lm = bitlen(m)
    short = ln if ln < lm else lm
    p = tk_ctz64(x)
    if p < short:
        return 1 if (n >> p) & 1 else -1
    if ln > lm:
        return 1 if (n >> lm) & 1 else -1
    return -1 if (m >> ln) & 1 else 1


cdef inline int variant_c(uint64_t n, uint64_t m) noexcept nogil:
    cdef uint64_t x
    if n == m:
        return 0
    x = n ^ m
    return 1 if (n >> tk_ctz64(x)) & 1 else -1


cdef inline int signed_c(int64_t a, int64_t b) noexcept nogil:
    cdef int sa = (a > 0) - (a < 0)
    cdef int sb = (b > 0) - (b < 0)
    if sa != sb:
        return 1 if sa > sb else -1
    if sa > 0:
        return fd_c(<uint64_t>a, <uint64_t>b)
    if sa < 0:
        return fd_c(<uint64_t>(-b), <uint64_t>(-a))
    return 0


cdef inline int cmp_c(int kind, int64_t a, int64_t b) noexcept nogil:
    if kind == FD:
        return fd_c(<uint64_t>a, <uint64_t>b)
    if kind == VARIANT:
        return variant_c(<uint64_t>a, <uint64_t>b)
    return signed_c(a, b)


cdef inline int64_t candidate_c(int kind, int64_t i) noexcept nogil:
    if kind != SIGNED:
        return i
    if i % 2:
        return (i + 1) // 2
    return -(i // 2)


def candidate(int kind, long long i):
    return candidate_c(kind, i)


def cmp_pairs(int kind, a, b):
    a_arr, b_arr = np.broadcast_arrays(np.asarray(a, np.int64), np.asarray(b, np.int64))
    a_flat = np.ascontiguousarray(a_arr).ravel()
    b_flat = np.ascontiguousarray(b_arr).ravel()
    cdef const int64_t[:] av = a_flat
    cdef const int64_t[:] bv = b_flat
    out = np.empty(a_flat.shape[0], dtype=np.int8)
    cdef cnp.int8_t[:] ov = out
    cdef Py_ssize_t i, n = a_flat.shape[0]
    with nogil:
        for i in range(n):
            ov[i] = cmp_c(kind, av[i], bv[i])
    return out.reshape(a_arr.shape)


def cmp_many(int kind, values, long long b):
    arr = np.ascontiguousarray(values, dtype=np.int64)
    flat = arr.ravel()
    cdef const int64_t[:] v = flat
    out = np.empty(flat.shape[0], dtype=np.int8)
    cdef cnp.int8_t[:] ov = out
    cdef Py_ssize_t i, n = flat.shape[0]
    with nogil:
        for i in range(n):
            ov[i] = cmp_c(kind, v[i], b)
    return out.reshape(arr.shape)


def scan_between(int kind, long long lo, long long hi, bint has_lo, bint has_hi,
                 long long start, long long stop):
    cdef long long i, found = -1
    cdef int64_t c
    with nogil:
        for i in range(start, stop):
            c = candidate_c(kind, i)
            if has_lo and cmp_c(kind, c, lo) <= 0:
                continue
            if has_hi and cmp_c(kind, c, hi) >= 0:
                continue
            found = i
            break
    return found


def oracle_disagreements(int kind, values, keys):
    va = np.ascontiguousarray(values, dtype=np.int64)
    ka = np.ascontiguousarray(keys, dtype=np.int64)
    cdef const int64_t[:] v = va
    cdef const int64_t[:] k = ka
    cdef Py_ssize_t n = va.shape[0], i, j
    cdef long long count = 0
    cdef Py_ssize_t fi = -1, fj = -1
    cdef int got, want
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                got = cmp_c(kind, v[j], v[i])
                want = (k[j] > k[i]) - (k[j] < k[i])
                if got != want:
                    if count == 0:
                        fi = i
                        fj = j
                    count += 1
    return count, fi, fj


def antisymmetry_failures(int kind, values):
    va = np.ascontiguousarray(values, dtype=np.int64)
    cdef const int64_t[:] v = va
    cdef Py_ssize_t n = va.shape[0], i, j
    cdef long long count = 0
    cdef Py_ssize_t fi = -1, fj = -1
    cdef int f, b
    with nogil:
        for i in range(n):
            for j in range(n):
                f = cmp_c(kind, v[j], v[i])
                b = -cmp_c(kind, v[i], v[j])
                if f != b or ((f == 0) != (v[i] == v[j])):
                    if count == 0:
                        fi = j
                        fj = i
                    count += 1
    return count, fi, fj


def transitivity_failures(int kind, triples):
    ta = np.ascontiguousarray(np.asarray(triples, dtype=np.int64).reshape(-1, 3))
    cdef const int64_t[:, :] t = ta
    cdef Py_ssize_t n = ta.shape[0], r
    cdef long long count = 0
    cdef Py_ssize_t first = -1
    cdef int ab, bc, ac
    cdef bint bad
    with nogil:
        for r in range(n):
            ab = cmp_c(kind, t[r, 0], t[r, 1])
            bc = cmp_c(kind, t[r, 1], t[r, 2])
            ac = cmp_c(kind, t[r, 0], t[r, 2])
            bad = False
            if ab <= 0 and bc <= 0:
                if ac > 0 or (ab + bc < 0 and ac == 0):
                    bad = True
            if ab >= 0 and bc >= 0:
                if ac < 0 or (ab + bc > 0 and ac == 0):
                    bad = True
            if bad:
                if count == 0:
                    first = r
                count += 1
    return count, first


cdef int _sort_kind = 0


cdef int _qsort_cmp(const void* pa, const void* pb) noexcept nogil:
    return cmp_c(_sort_kind, (<const int64_t*>pa)[0], (<const int64_t*>pb)[0])


def sort_values(int kind, values):
    global _sort_kind
    out = np.array(values, dtype=np.int64, copy=True).ravel()
    cdef int64_t[:] ov = out
    if out.shape[0] < 2:
        return out
    # qsort is not reentrant through the module-level kind; callers hold the GIL
    _sort_kind = kind
    qsort(&ov[0], out.shape[0], sizeof(int64_t), _qsort_cmp)
    return out
