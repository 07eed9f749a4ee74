# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled cover kernels for instances with at most 64 distractors."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


MAX_BITS = 64


cdef uint64_t* _pack(masks, Py_ssize_t n) except NULL:
    cdef uint64_t* out = <uint64_t*> malloc((n if n > 0 else 1) * sizeof(uint64_t))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = <uint64_t> masks[i]
    return out


def min_cover(masks, target):
    cdef Py_ssize_t n = len(masks)
    cdef uint64_t t = <uint64_t> target
    cdef uint64_t union_ = 0, acc
    cdef Py_ssize_t k, i, j
    cdef uint64_t* m
    cdef Py_ssize_t* idx
    if t == 0:
        return ()
    m = _pack(masks, n)
    idx = <Py_ssize_t*> malloc((n if n > 0 else 1) * sizeof(Py_ssize_t))
    if idx == NULL:
        free(m)
        raise MemoryError()
    try:
        for i in range(n):
            union_ |= m[i]
        if union_ & t != t:
            return None
        for k in range(1, n + 1):
            for i in range(k):
                idx[i] = i
            while True:
                acc = 0
                for i in range(k):
                    acc |= m[idx[i]]
                if acc & t == t:
                    return tuple([idx[i] for i in range(k)])
                # advance to the next combination in lexicographic order
                i = k - 1
                while i >= 0 and idx[i] == n - k + i:
                    i -= 1
                if i < 0:
                    break
                idx[i] += 1
                for j in range(i + 1, k):
                    idx[j] = idx[j - 1] + 1
        return None
    finally:
        free(idx)
        free(m)


def greedy_cover(masks, target):
    cdef Py_ssize_t n = len(masks)
    cdef uint64_t remaining = <uint64_t> target
    cdef uint64_t* m = _pack(masks, n)
    cdef char* used = <char*> malloc((n if n > 0 else 1))
    cdef Py_ssize_t i, best
    cdef int c, best_count
    chosen = []
    if used == NULL:
        free(m)
        raise MemoryError()
    try:
        for i in range(n):
            used[i] = 0
        while remaining:
            best = -1
            best_count = 0
            for i in range(n):
                if used[i]:
                    continue
                c = _popcount(m[i] & remaining)
                if c > best_count:
                    best = i
                    best_count = c
            if best < 0:
                return None
            used[best] = 1
            chosen.append(best)
            remaining &= ~m[best]
        return tuple(chosen)
    finally:
        free(used)
        free(m)
