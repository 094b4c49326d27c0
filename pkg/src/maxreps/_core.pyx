# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels: same contracts as maxreps._pure, C-speed inner loops."""

import numpy as np

from .errors import InputError

BACKEND_NAME = "compiled"


cdef inline void _prefix_max(long long[::1] best, long long[::1] pref, Py_ssize_t n):
    cdef Py_ssize_t i
    cdef long long m = 0
    for i in range(n + 1):
        if best[i] > m:
            m = best[i]
        pref[i] = m


def collect(sym):
    """Enumerate maximal repetitions; returns sorted (starts, ends, periods)."""
    cdef int[::1] w = np.ascontiguousarray(sym, dtype=np.int32)
    cdef Py_ssize_t n = w.shape[0]
    best_np = np.zeros(n + 1, dtype=np.int64)
    pref_np = np.zeros(n + 1, dtype=np.int64)
    cdef long long[::1] best = best_np
    cdef long long[::1] pref = pref_np
    cdef Py_ssize_t cap = 1024
    s_np = np.empty(cap, dtype=np.int64)
    e_np = np.empty(cap, dtype=np.int64)
    p_np = np.empty(cap, dtype=np.int64)
    cdef long long[::1] os = s_np
    cdef long long[::1] oe = e_np
    cdef long long[::1] op = p_np
    cdef Py_ssize_t cnt = 0
    cdef Py_ssize_t p, i, l, r
    cdef long long ce
    cdef bint dirty = 0, whole = 0
    for p in range(1, n):
        if dirty:
            _prefix_max(best, pref, n)
            dirty = 0
        i = 0
        while i < n - p:
            if w[i] == w[i + p]:
                l = i
                while i < n - p and w[i] == w[i + p]:
                    i += 1
                r = i - 1
                ce = r + p + 1
                if ce > pref[l]:
                    if cnt == cap:
                        cap *= 2
                        s_np = np.concatenate((s_np, np.empty(cap - cnt, dtype=np.int64)))
                        e_np = np.concatenate((e_np, np.empty(cap - cnt, dtype=np.int64)))
                        p_np = np.concatenate((p_np, np.empty(cap - cnt, dtype=np.int64)))
                        os = s_np
                        oe = e_np
                        op = p_np
                    os[cnt] = l
                    oe[cnt] = ce
                    op[cnt] = p
                    cnt += 1
                    if best[l] < ce:
                        best[l] = ce
                    dirty = 1
                    if l == 0 and ce == n:
                        whole = 1
            else:
                i += 1
        if whole:
            break
    starts = s_np[:cnt]
    ends = e_np[:cnt]
    periods = p_np[:cnt]
    order = np.lexsort((periods, ends, starts))
    return (np.ascontiguousarray(starts[order]),
            np.ascontiguousarray(ends[order]),
            np.ascontiguousarray(periods[order]))


def tally(sym, long long tnum=0, long long tden=1):
    """Per-period (count, excess, filtered count, filtered excess) aggregates."""
    cdef int[::1] w = np.ascontiguousarray(sym, dtype=np.int32)
    cdef Py_ssize_t n = w.shape[0]
    count_np = np.zeros(n, dtype=np.int64)
    excess_np = np.zeros(n, dtype=np.int64)
    count_f_np = np.zeros(n, dtype=np.int64)
    excess_f_np = np.zeros(n, dtype=np.int64)
    cdef long long[::1] count = count_np
    cdef long long[::1] excess = excess_np
    cdef long long[::1] count_f = count_f_np
    cdef long long[::1] excess_f = excess_f_np
    best_np = np.zeros(n + 1, dtype=np.int64)
    pref_np = np.zeros(n + 1, dtype=np.int64)
    cdef long long[::1] best = best_np
    cdef long long[::1] pref = pref_np
    cdef Py_ssize_t p, i, l, r
    cdef long long ce, b
    cdef bint dirty = 0, whole = 0
    for p in range(1, n):
        if dirty:
            _prefix_max(best, pref, n)
            dirty = 0
        i = 0
        while i < n - p:
            if w[i] == w[i + p]:
                l = i
                while i < n - p and w[i] == w[i + p]:
                    i += 1
                r = i - 1
                ce = r + p + 1
                if ce > pref[l]:
                    b = r - l + 1
                    count[p] += 1
                    excess[p] += b
                    if tnum == 0 or (b + p) * tden >= tnum * p:
                        count_f[p] += 1
                        excess_f[p] += b
                    if best[l] < ce:
                        best[l] = ce
                    dirty = 1
                    if l == 0 and ce == n:
                        whole = 1
            else:
                i += 1
        if whole:
            break
    return count_np, excess_np, count_f_np, excess_f_np


def oracle_collect(sym):
    """Literal-definition enumeration via a full minimal-period table."""
    cdef int[::1] w = np.ascontiguousarray(sym, dtype=np.int32)
    cdef Py_ssize_t n = w.shape[0]
    if n > 4096:
        raise InputError("oracle enumeration is limited to n <= 4096")
    if n == 0:
        z = np.zeros(0, dtype=np.int64)
        return z, z.copy(), z.copy()
    mp_np = np.zeros((n, n), dtype=np.int32)
    cdef int[:, ::1] mp = mp_np
    f_np = np.zeros(n + 1, dtype=np.int32)
    cdef int[::1] f = f_np
    cdef Py_ssize_t i, x, m, L, j
    cdef int k, c, p
    for i in range(n):
        m = n - i
        k = 0
        f[0] = 0
        f[1] = 0
        mp[i, 0] = 1
        for x in range(1, m):
            c = w[i + x]
            while k and c != w[i + k]:
                k = f[k]
            if c == w[i + k]:
                k += 1
            f[x + 1] = k
            mp[i, x] = <int> (x + 1 - k)
    cdef Py_ssize_t cap = 1024, cnt = 0
    s_np = np.empty(cap, dtype=np.int64)
    e_np = np.empty(cap, dtype=np.int64)
    p_np = np.empty(cap, dtype=np.int64)
    cdef long long[::1] os = s_np
    cdef long long[::1] oe = e_np
    cdef long long[::1] op = p_np
    for i in range(n):
        for L in range(2, n - i + 1):
            p = mp[i, L - 1]
            if p >= L:
                continue
            if i > 0 and mp[i - 1, L] <= p:
                continue
            j = i + L
            if j < n and mp[i, L] <= p:
                continue
            if cnt == cap:
                cap *= 2
                s_np = np.concatenate((s_np, np.empty(cap - cnt, dtype=np.int64)))
                e_np = np.concatenate((e_np, np.empty(cap - cnt, dtype=np.int64)))
                p_np = np.concatenate((p_np, np.empty(cap - cnt, dtype=np.int64)))
                os = s_np
                oe = e_np
                op = p_np
            os[cnt] = i
            oe[cnt] = j
            op[cnt] = p
            cnt += 1
    return (np.ascontiguousarray(s_np[:cnt]),
            np.ascontiguousarray(e_np[:cnt]),
            np.ascontiguousarray(p_np[:cnt]))
