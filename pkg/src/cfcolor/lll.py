"""(k+1)-weak colorings by constructive local-lemma resampling, and k-CF colorings of arbitrary hypergraphs."""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvariantBreach, ResampleBudgetExceeded
from .framework import k_cf_color_via_weak
from .hypergraph import Coloring, Hypergraph, induced_subhypergraph, max_degree

LLL_CONSTANT = 13


def lll_palette(delta: int, k: int, a: int = LLL_CONSTANT) -> int:
    """Smallest integer M with M >= a * delta^(1/k), computed without floating point; at least 1."""
    if delta <= 0:
        return 1
    target = a**k * delta
    m = max(int(a * delta ** (1.0 / k)) - 2, 1)
    while m**k < target:
        m += 1
    while m > 1 and (m - 1) ** k >= target:
        m -= 1
    return m


def reduce_edges(h: Hypergraph, k: int) -> list[tuple[int, ...]]:
    """Each hyperedge with more than k vertices cut to its first k+1 vertices; smaller ones dropped."""
    return [e[: k + 1] for e in h.edges if len(e) >= k + 1]


@dataclass
class LLLStats:
    resamples: int = 0
    budget: int = 0
    palette: int = 0


def lll_weak_coloring(h: Hypergraph, k: int, seed: int, stats: LLLStats | None = None) -> Coloring:
    """(k+1)-weak coloring with ceil(13 * Delta^(1/k)) colors.

    Starts from a uniform random coloring and resamples the lowest-indexed monochromatic
    reduced hyperedge until none is left, within a budget of 1000 * (n + m) resamples.
    """
    if k <= 1:
        raise ValueError("k must be greater than 1")
    n = h.n
    M = lll_palette(max_degree(h), k)
    rng = np.random.default_rng(seed)
    colors = rng.integers(0, M, n).tolist() if n else []
    edges = reduce_edges(h, k)
    incident: list[list[int]] = [[] for _ in range(n)]
    for idx, e in enumerate(edges):
        for v in e:
            incident[v].append(idx)

    def mono(idx: int) -> bool:
        e = edges[idx]
        c0 = colors[e[0]]
        return all(colors[v] == c0 for v in e)

    heap = [idx for idx in range(len(edges)) if mono(idx)]
    heapq.heapify(heap)
    budget = 1000 * (n + h.m)
    resamples = 0
    while heap:
        idx = heapq.heappop(heap)
        if not mono(idx):
            continue
        if resamples >= budget:
            raise ResampleBudgetExceeded(f"resample budget {budget} exhausted with hyperedge {edges[idx]} still monochromatic")
        resamples += 1
        fresh = rng.integers(0, M, len(edges[idx])).tolist()
        for v, c in zip(edges[idx], fresh):
            colors[v] = c
        for v in edges[idx]:
            for other in incident[v]:
                if mono(other):
                    heapq.heappush(heap, other)
    if stats is not None:
        stats.resamples += resamples
        stats.budget = max(stats.budget, budget)
        stats.palette = max(stats.palette, M)
    return Coloring(tuple(int(c) for c in colors), M)


def peel_threshold(n: int, m: int, k: int) -> int:
    """ceil(m^(k/(k+1)) / (log2 n)^(k/(k+1))), with log2 n floored at 1."""
    if m == 0:
        return 1
    e = k / (k + 1)
    return max(math.ceil(m**e / max(math.log2(max(n, 2)), 1.0) ** e), 1)


@dataclass
class GeneralStats:
    threshold: int = 0
    peeled: int = 0
    rounds: int = 0
    lll: LLLStats = field(default_factory=LLLStats)


def k_cf_color_general(h: Hypergraph, k: int, seed: int, stats: GeneralStats | None = None) -> Coloring:
    """k-CF coloring of any hypergraph: heavy vertices get private colors, the rest goes through LLL rounds."""
    if k <= 1:
        raise ValueError("k must be greater than 1")
    st = stats if stats is not None else GeneralStats()
    n, m = h.n, h.m
    if n == 0:
        return Coloring((), 0)
    thr = peel_threshold(n, m, k)
    st.threshold = thr
    alive_edge = [True] * m
    incident: list[list[int]] = [[] for _ in range(n)]
    for idx, e in enumerate(h.edges):
        for v in e:
            incident[v].append(idx)
    deg = [len(inc) for inc in incident]
    colors = [-1] * n
    peeled = 0
    while True:
        # heaviest remaining vertex, smallest id on ties
        top = max(range(n), key=lambda u: (deg[u], -u))
        if deg[top] <= thr:
            break
        colors[top] = peeled
        peeled += 1
        for idx in incident[top]:
            if alive_edge[idx]:
                alive_edge[idx] = False
                for u in h.edges[idx]:
                    deg[u] -= 1
    if peeled > m / thr + 1:
        raise InvariantBreach(f"peeled {peeled} vertices with threshold {thr} and {m} hyperedges")
    st.peeled = peeled
    rest = [v for v in range(n) if colors[v] == -1]
    residual = Hypergraph(n, tuple(e for idx, e in enumerate(h.edges) if alive_edge[idx]))
    sub, ids = induced_subhypergraph(residual, rest)
    rounds = [0]

    def colorer(part, local):
        rounds[0] += 1
        return lll_weak_coloring(part, k, seed + rounds[0] - 1, st.lll)

    col = k_cf_color_via_weak(sub, colorer, k=k)
    st.rounds = col.palette_size
    for v, c in zip(ids, col.colors):
        colors[v] = peeled + c
    return Coloring(tuple(colors), peeled + col.palette_size)
