"""Exact check that every contiguous range of a sequence has a color occurring exactly once.

For a start i and a color c with first two occurrences p1 < p2 at or after i, c is unique in
[i, j] exactly for j in [p1, p2 - 1]. All ranges starting at i are fine iff these windows
cover [i, n - 1].
"""

import numpy as np


def first_bad_range(colors):
    """(i, j) of some range without a unique color, or None; vectorized over start positions."""
    col = np.asarray(colors, dtype=np.int64)
    n = len(col)
    if n == 0:
        return None
    palette = np.unique(col)
    starts = np.empty((len(palette), n), dtype=np.int64)
    ends = np.empty((len(palette), n), dtype=np.int64)
    at = np.arange(n)
    for r, c in enumerate(palette):
        pos = np.concatenate([np.flatnonzero(col == c), [n, n]])
        k = np.searchsorted(pos, at)
        starts[r] = pos[k]
        ends[r] = pos[k + 1] - 1
    order = np.argsort(starts, axis=0, kind="stable")
    s = np.take_along_axis(starts, order, axis=0)
    e = np.take_along_axis(ends, order, axis=0)
    reach = np.arange(n, dtype=np.int64) - 1
    for r in range(len(palette)):
        gap = (s[r] > reach + 1) & (reach < n - 1)
        if gap.any():
            i = int(np.flatnonzero(gap)[0])
            return i, int(reach[i]) + 1
        reach = np.where(s[r] < n, np.maximum(reach, e[r]), reach)
    short = reach < n - 1
    if short.any():
        i = int(np.flatnonzero(short)[0])
        return i, int(reach[i]) + 1
    return None


def naive_first_bad_range(colors):
    n = len(colors)
    for i in range(n):
        for j in range(i, n):
            seg = colors[i : j + 1]
            if not any(seg.count(c) == 1 for c in set(seg)):
                return i, j
    return None
