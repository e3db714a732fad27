"""Exact k-CF chromatic numbers of tiny hypergraphs by backtracking, plus a naive enumerator to check it."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .errors import SearchCapExceeded
from .hypergraph import Hypergraph

DEFAULT_NODE_CAP = 50_000_000


@dataclass(frozen=True)
class ExceedsLimit:
    """No k-CF coloring exists with at most ``limit`` colors."""

    limit: int


def _edge_ok(edge, colors, k: int) -> bool:
    counts = Counter(colors[v] for v in edge)
    return any(1 <= c <= k for c in counts.values())


@dataclass
class SearchStats:
    nodes: int = 0


def k_cf_colorable(h: Hypergraph, k: int, c: int, node_cap: int = DEFAULT_NODE_CAP, stats: SearchStats | None = None) -> tuple[int, ...] | None:
    """A k-CF coloring with at most c colors, or None.

    Vertices go in decreasing degree order (ties by id); each hyperedge is checked as soon as its
    last vertex is colored; a vertex may only open the next unused color.
    """
    n = h.n
    if n == 0:
        return ()
    if c <= 0:
        return None
    deg = h.degrees()
    order = sorted(range(n), key=lambda v: (-deg[v], v))
    pos = {v: i for i, v in enumerate(order)}
    closing: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for e in h.edges:
        closing[max(pos[v] for v in e)].append(e)
    colors = [-1] * n
    st = stats if stats is not None else SearchStats()

    def go(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for col in range(min(c, used + 1)):
            st.nodes += 1
            if st.nodes > node_cap:
                raise SearchCapExceeded(f"search exceeded {node_cap} nodes")
            colors[v] = col
            if all(_edge_ok(e, colors, k) for e in closing[i]):
                if go(i + 1, max(used, col + 1)):
                    return True
        colors[v] = -1
        return False

    return tuple(colors) if go(0, 0) else None


def exact_k_cf_chromatic(h: Hypergraph, k: int = 1, limit: int | None = None, node_cap: int = DEFAULT_NODE_CAP) -> int | ExceedsLimit:
    """Smallest number of colors of a k-CF coloring of h, or ExceedsLimit when it is above ``limit``."""
    if k < 1:
        raise ValueError("k must be positive")
    if h.n == 0:
        return 0
    top = h.n if limit is None else min(limit, h.n)
    st = SearchStats()
    for c in range(1, top + 1):
        if k_cf_colorable(h, k, c, node_cap, st) is not None:
            return c
    return ExceedsLimit(top)


def naive_k_cf_chromatic(h: Hypergraph, k: int = 1, max_colors: int | None = None) -> int:
    """Exhaustive enumeration over all colorings; only for very small n."""
    if h.n == 0:
        return 0
    top = h.n if max_colors is None else max_colors
    for c in range(1, top + 1):
        for colors in itertools.product(range(c), repeat=h.n):
            if all(_edge_ok(e, colors, k) for e in h.edges):
                return c
    raise SearchCapExceeded(f"no coloring with at most {top} colors")
