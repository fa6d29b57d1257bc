# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.  Same signatures and results as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t, uint8_t

cnp.import_array()

cdef enum:
    C_FOUND = 1
    C_NONE = 0
    C_BUDGET = -1

FOUND = C_FOUND
NONE = C_NONE
BUDGET = C_BUDGET


def chain_lengths(colors, gaps):
    cdef const uint8_t[::1] cols = np.ascontiguousarray(colors, dtype=np.uint8)
    cdef const int64_t[::1] gs = np.ascontiguousarray(gaps, dtype=np.int64)
    cdef Py_ssize_t n = cols.shape[0], ng = gs.shape[0]
    lengths_arr = np.zeros(n, dtype=np.int32)
    preds_arr = np.full(n, -1, dtype=np.int64)
    cdef int32_t[::1] lengths = lengths_arr
    cdef int64_t[::1] preds = preds_arr
    cdef Py_ssize_t i, g
    cdef int64_t j, bp
    cdef int32_t best
    cdef uint8_t c
    with nogil:
        for i in range(n):
            c = cols[i]
            best = 0
            bp = -1
            # largest gap first so ties keep the smallest predecessor
            for g in range(ng - 1, -1, -1):
                j = i - gs[g]
                if j < 0:
                    continue
                if cols[j] == c and lengths[j] > best:
                    best = lengths[j]
                    bp = j
            lengths[i] = best + 1
            preds[i] = bp
    return lengths_arr, preds_arr


def max_gap_count(colors, gaps, int64_t target):
    cdef const uint8_t[::1] cols = np.ascontiguousarray(colors, dtype=np.uint8)
    cdef const int64_t[::1] gs = np.ascontiguousarray(gaps, dtype=np.int64)
    cdef Py_ssize_t n = cols.shape[0], ng = gs.shape[0]
    m_arr = np.zeros(n, dtype=np.int32)
    cdef int32_t[::1] m = m_arr
    cdef Py_ssize_t i, g
    cdef int64_t j
    cdef int32_t v, w, best = 0
    cdef uint8_t c
    with nogil:
        for i in range(n):
            c = cols[i]
            v = 0
            for g in range(ng):
                j = i - gs[g]
                if j < 0:
                    break
                if cols[j] == c:
                    w = m[j] + (1 if gs[g] == target else 0)
                    if w > v:
                        v = w
            m[i] = v
            if v > best:
                best = v
    return int(best)


def search(gaps, int k, int r, Py_ssize_t n, prefix, long long budget):
    cdef const int64_t[::1] gs = np.ascontiguousarray(gaps, dtype=np.int64)
    cdef const uint8_t[::1] pre = np.ascontiguousarray(prefix, dtype=np.uint8)
    cdef Py_ssize_t ng = gs.shape[0]
    colors_arr = np.zeros(n, dtype=np.uint8)
    cdef uint8_t[::1] colors = colors_arr
    cdef int32_t[::1] lens = np.zeros(n, dtype=np.int32)
    cdef int32_t[::1] maxused = np.full(n + 1, -1, dtype=np.int32)
    cdef int32_t[::1] choice = np.zeros(n + 1, dtype=np.int32)
    cdef long long nodes = 0
    cdef Py_ssize_t start = min(pre.shape[0], n)
    cdef Py_ssize_t i, g
    cdef int64_t j
    cdef int32_t best, c
    cdef int status = C_NONE

    for i in range(start):
        c = pre[i]
        best = 0
        for g in range(ng):
            j = i - gs[g]
            if j < 0:
                break
            if colors[j] == c and lens[j] > best:
                best = lens[j]
        if best + 1 >= k:
            return NONE, None, nodes
        colors[i] = <uint8_t>c
        lens[i] = best + 1
        maxused[i + 1] = maxused[i] if maxused[i] >= c else c
    if start == n:
        return FOUND, colors_arr, nodes

    i = start
    with nogil:
        while True:
            if i == n:
                status = C_FOUND
                break
            c = choice[i]
            if c >= r or c > maxused[i] + 1:
                if i == start:
                    status = C_NONE
                    break
                i -= 1
                choice[i] += 1
                continue
            nodes += 1
            if nodes > budget:
                status = C_BUDGET
                break
            best = 0
            for g in range(ng):
                j = i - gs[g]
                if j < 0:
                    break
                if colors[j] == c and lens[j] > best:
                    best = lens[j]
            if best + 1 >= k:
                choice[i] = c + 1
                continue
            colors[i] = <uint8_t>c
            lens[i] = best + 1
            maxused[i + 1] = maxused[i] if maxused[i] >= c else c
            i += 1
            choice[i] = 0
    if status == C_FOUND:
        return FOUND, colors_arr, nodes
    return status, None, nodes
