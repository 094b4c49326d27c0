"""Pure-Python (numpy-vectorized) kernels.

Drop-in twins of the compiled functions in ``maxreps._core``; the active
implementation is chosen in ``maxreps._kernels``.

Detection works period by period.  For period p the boolean match sequence
m[i] = (w[i] == w[i+p]) is scanned; every maximal block of consecutive
matches [l, r] yields the candidate interval [l, r+p+1).  A candidate is a
maximal repetition with minimal period exactly p if and only if it is not
contained in a repetition found at a smaller period, so a running
"coverage" prefix-maximum over interval starts replaces any per-candidate
period recomputation.  Once a single repetition covers the whole word every
later candidate is contained in it and the period loop stops early.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "pure"

_WORD_DTYPE = np.int32


def _prepared(sym: np.ndarray) -> np.ndarray:
    # byte comparisons are noticeably faster for the common small alphabets
    if sym.size and sym.max(initial=0) < 256:
        return sym.astype(np.uint8)
    return sym


def _blocks(match: np.ndarray):
    """Starts and inclusive ends of maximal True blocks of a bool array."""
    idx = np.flatnonzero(match)
    if idx.size == 0:
        return idx, idx
    breaks = np.flatnonzero(np.diff(idx) > 1)
    starts = idx[np.concatenate(([0], breaks + 1))]
    ends = idx[np.concatenate((breaks, [idx.size - 1]))]
    return starts, ends


def collect(sym: np.ndarray):
    """Enumerate all maximal repetitions of exponent > 1.

    Returns (starts, ends, periods) int64 arrays sorted by (start, end,
    period); ends are exclusive.
    """
    n = int(sym.size)
    w = _prepared(sym)
    best = np.zeros(n + 1, dtype=np.int64)  # best[s] = max end over reps starting at s
    pref = best.copy()
    dirty = False
    out_s, out_e, out_p = [], [], []
    for p in range(1, n):
        match = w[: n - p] == w[p:]
        bs, be = _blocks(match)
        if bs.size == 0:
            continue
        if dirty:
            np.maximum.accumulate(best, out=pref)
            dirty = False
        ce = be + p + 1
        valid = ce > pref[bs]
        if not valid.any():
            continue
        vs = bs[valid]
        ve = ce[valid]
        out_s.append(vs)
        out_e.append(ve)
        out_p.append(np.full(vs.size, p, dtype=np.int64))
        best[vs] = np.maximum(best[vs], ve)  # block starts are unique per period
        dirty = True
        if vs[0] == 0 and ve[0] == n:
            break  # the whole word is one repetition; nothing else can survive
    if not out_s:
        z = np.zeros(0, dtype=np.int64)
        return z, z.copy(), z.copy()
    starts = np.concatenate(out_s).astype(np.int64)
    ends = np.concatenate(out_e).astype(np.int64)
    periods = np.concatenate(out_p)
    order = np.lexsort((periods, ends, starts))
    return starts[order], ends[order], periods[order]


def tally(sym: np.ndarray, tnum: int = 0, tden: int = 1):
    """Per-period aggregates of the maximal repetitions, without storing them.

    Returns four int64 arrays of length n indexed by period p:

    * count[p]: number of repetitions with minimal period p
    * excess[p]: sum of (length - p) over those repetitions
    * count_f[p], excess_f[p]: same, restricted to repetitions whose
      exponent satisfies length * tden >= tnum * p (i.e. e >= tnum/tden)

    With tnum=0 the filtered arrays equal the unfiltered ones.
    """
    n = int(sym.size)
    w = _prepared(sym)
    count = np.zeros(n, dtype=np.int64)
    excess = np.zeros(n, dtype=np.int64)
    count_f = np.zeros(n, dtype=np.int64)
    excess_f = np.zeros(n, dtype=np.int64)
    best = np.zeros(n + 1, dtype=np.int64)
    pref = best.copy()
    dirty = False
    for p in range(1, n):
        match = w[: n - p] == w[p:]
        bs, be = _blocks(match)
        if bs.size == 0:
            continue
        if dirty:
            np.maximum.accumulate(best, out=pref)
            dirty = False
        ce = be + p + 1
        valid = ce > pref[bs]
        if not valid.any():
            continue
        vs = bs[valid]
        ve = ce[valid]
        b = ve - vs - p  # block length = (length - p)
        count[p] += vs.size
        excess[p] += int(b.sum())
        if tnum:
            keep = (b + p) * tden >= tnum * p
            count_f[p] += int(np.count_nonzero(keep))
            excess_f[p] += int(b[keep].sum())
        best[vs] = np.maximum(best[vs], ve)
        dirty = True
        if vs[0] == 0 and ve[0] == n:
            break
    if not tnum:
        count_f[:] = count
        excess_f[:] = excess
    return count, excess, count_f, excess_f


def _suffix_min_periods(w: list, n: int) -> list:
    """mp[i][L-1] = minimal period of w[i:i+L], via per-suffix border arrays."""
    mp = []
    for i in range(n):
        m = n - i
        f = [0] * (m + 1)
        row = [1] * m
        k = 0
        for x in range(1, m):
            c = w[i + x]
            while k and c != w[i + k]:
                k = f[k]
            if c == w[i + k]:
                k += 1
            f[x + 1] = k
            row[x] = x + 1 - k
        mp.append(row)
    return mp


def oracle_collect(sym: np.ndarray):
    """Literal-definition enumeration: test every interval for maximality.

    Quadratic memory and time; the independent reference the fast detector
    is validated against.
    """
    n = int(sym.size)
    w = sym.tolist()
    mp = _suffix_min_periods(w, n)
    out = []
    for i in range(n):
        row = mp[i]
        left = mp[i - 1] if i > 0 else None
        for L in range(2, n - i + 1):
            p = row[L - 1]
            if p >= L:
                continue
            if left is not None and left[L] <= p:
                continue
            j = i + L
            if j < n and row[L] <= p:
                continue
            out.append((i, j, p))
    if not out:
        z = np.zeros(0, dtype=np.int64)
        return z, z.copy(), z.copy()
    arr = np.array(out, dtype=np.int64)
    return arr[:, 0].copy(), arr[:, 1].copy(), arr[:, 2].copy()
