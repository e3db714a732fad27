"""Extremal constructions and seeded random instances."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateCrossingError
from .geometry import (
    CornerLShape,
    Frame,
    GroundedLShape,
    Interval,
    Polyline,
    check_general_position,
    normalize,
    part_crossings,
)
from .hypergraph import Graph, Hypergraph, neighborhood_hypergraph


# ---------------------------------------------------------------- extremal families


def circle_lower_bound_size(t: int, k: int) -> int:
    d = k * (t - 1)
    return 2 ** (d + 1) + 2**d - 1


@dataclass(frozen=True)
class CircleLowerBound:
    items: tuple[Interval, ...]
    tree: tuple[int, ...]  # ids of the binary nesting tree, level by level
    chain: tuple[int, ...]  # ids of the nested chain, outermost first
    leaves: tuple[int, ...]  # minimal tree intervals, left to right


def circle_lower_bound_family(t: int, k: int) -> CircleLowerBound:
    """Binary nesting tree with k(t-1)+1 levels plus a nested chain whose i-th left endpoint sits in the i-th leaf."""
    if t < 1 or k < 1:
        raise ValueError("t and k must be positive")
    depth = k * (t - 1) + 1
    n_leaves = 2 ** (depth - 1)
    grid = 2 * depth + 3
    items: list[Interval] = []
    tree: list[int] = []
    leaves: list[int] = []
    for level in range(1, depth + 1):
        span = 2 ** (depth - level)
        for node in range(2 ** (level - 1)):
            p, q = node * span, (node + 1) * span - 1
            tree.append(len(items))
            if level == depth:
                leaves.append(len(items))
            items.append(Interval(p * grid + level, (q + 1) * grid - level))
    right_base = n_leaves * grid + 1
    chain = []
    for i in range(n_leaves):
        chain.append(len(items))
        items.append(Interval(i * grid + depth + 1, right_base + (n_leaves - i)))
    return CircleLowerBound(tuple(items), tuple(tree), tuple(chain), tuple(leaves))


def gen_circle_lower_bound(t: int, k: int) -> list[Interval]:
    return list(circle_lower_bound_family(t, k).items)


def gen_frames_clique_gadget(m: int) -> list[Frame]:
    """m pairwise crossing congruent frames shifted along a diagonal, plus a tiny frame at each pairwise crossing."""
    if m < 2:
        raise ValueError("m must be at least 2")
    pairs = list(itertools.combinations(range(m), 2))
    s = len(pairs) + 2
    side = 2 * s * (m + 1)
    a = [2 * s * i for i in range(m)]
    frames = [Frame(a[i], -a[i], a[i] + side, side - a[i]) for i in range(m)]
    for q, (i, j) in enumerate(pairs):
        cx, cy, r = a[j], -a[i], q + 1
        frames.append(Frame(cx - r, cy - r, cx + r, cy + r))
    return frames


def gbonc_graph(g: Graph, k: int) -> Graph:
    """``g`` plus one new vertex per (k+1)-subset of its vertices, adjacent to exactly that subset."""
    t = g.n
    if k < 1:
        raise ValueError("k must be positive")
    if t < k + 2:
        raise ValueError(f"need at least k + 2 = {k + 2} base vertices, got {t}")
    edges = list(g.edges())
    v = t
    for subset in itertools.combinations(range(t), k + 1):
        edges.extend((u, v) for u in subset)
        v += 1
    return Graph.from_edges(v, edges)


def gen_gbonc(g: Graph, k: int) -> Hypergraph:
    return neighborhood_hypergraph(gbonc_graph(g, k))


def complete_graph(t: int) -> Graph:
    return Graph.from_edges(t, itertools.combinations(range(t), 2))


@dataclass(frozen=True)
class FilamentInstance:
    hypergraph: Hypergraph
    nested: tuple[Interval, ...]  # I_1 inside I_2 inside ... inside I_t
    feet: dict  # (k+1)-subset -> disjoint interval inside I_1


def gen_interval_filaments(t: int, k: int) -> FilamentInstance:
    """Combinatorially gen_gbonc(K_t, k), with the nested and disjoint intervals of a filament drawing."""
    h = gen_gbonc(complete_graph(t), k)
    subsets = list(itertools.combinations(range(t), k + 1))
    p = len(subsets)
    feet = {s: Interval(3 * q + 1, 3 * q + 2) for q, s in enumerate(subsets)}
    nested = tuple(Interval(-i, 3 * p + 1 + i) for i in range(t))
    return FilamentInstance(h, nested, feet)


def fano_plane() -> Hypergraph:
    lines = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]
    return Hypergraph(7, tuple(lines))


def discrete_interval_hypergraph(n: int) -> Hypergraph:
    return Hypergraph(n, tuple(tuple(range(i, j + 1)) for i in range(n) for j in range(i, n)))


# ---------------------------------------------------------------- random families


def _loguniform(rng: np.random.Generator, lo: float, hi: float, size: int) -> np.ndarray:
    return np.exp(rng.uniform(math.log(lo), math.log(hi), size)).astype(np.int64)


def random_intervals(n: int, seed: int, spacing: int = 4, max_len: int = 600) -> list[Interval]:
    """Left endpoints uniform on a line of length spacing*n, lengths log-uniform in [2, max_len]."""
    rng = np.random.default_rng(seed)
    a = rng.integers(0, max(spacing * n, 1), n)
    ln = _loguniform(rng, 2, max_len, n)
    return normalize([Interval(int(x), int(x + w)) for x, w in zip(a, ln)])


def random_grounded_lshapes(n: int, seed: int, spacing: int = 4, max_width: int = 800) -> list[GroundedLShape]:
    rng = np.random.default_rng(seed)
    x = rng.integers(0, max(spacing * n, 1), n)
    w = _loguniform(rng, 2, max_width, n)
    d = rng.integers(1, max(n, 1) + 1, n)
    return normalize([GroundedLShape(int(a), int(b), int(c)) for a, b, c in zip(x, d, w)])


def _side(n: int, density: float) -> int:
    return max(int(math.sqrt(max(n, 1)) * density), 4)


def random_frames(n: int, seed: int, density: float = 16.0, max_size: int = 200) -> list[Frame]:
    rng = np.random.default_rng(seed)
    side = _side(n, density)
    x = rng.integers(0, side, n)
    y = rng.integers(0, side, n)
    w = _loguniform(rng, 2, max_size, n)
    h = _loguniform(rng, 2, max_size, n)
    return normalize([Frame(int(a), int(b), int(a + c), int(b + d)) for a, b, c, d in zip(x, y, w, h)])


def random_corner_lshapes(n: int, seed: int, density: float = 16.0, max_size: int = 200) -> list[CornerLShape]:
    rng = np.random.default_rng(seed)
    side = _side(n, density)
    x = rng.integers(0, side, n)
    y = rng.integers(0, side, n)
    h = _loguniform(rng, 2, max_size, n)
    w = _loguniform(rng, 2, max_size, n)
    return normalize([CornerLShape(int(a), int(b), int(c), int(d)) for a, b, c, d in zip(x, y, h, w)])


def _zigzag(rng: np.random.Generator, lo: int, hi: int, band_lo: int, band_hi: int, steps: int, horizontal: bool) -> Polyline:
    along = np.sort(rng.choice(np.arange(lo, hi + 1), size=steps + 1, replace=False))
    across = rng.integers(band_lo, band_hi, steps + 1)
    pts = [(int(s), int(c)) if horizontal else (int(c), int(s)) for s, c in zip(along, across)]
    return Polyline(tuple(pts))


@dataclass(frozen=True)
class StringInstance:
    strings: tuple[Polyline, ...]
    classes: tuple[int, ...]


def random_bipartite_strings(n: int, seed: int, band: int = 10, reach: int | None = None, steps: int = 3) -> StringInstance:
    """Zigzags confined to private horizontal bands (class 0) or vertical bands (class 1).

    Each string spans ``reach`` bands of the other class, by default 2*sqrt(n/2) + 2.

    Strings of one class never meet, so the class labels are a proper 2-coloring.
    Draws that touch non-transversally are redrawn.
    """
    rng = np.random.default_rng(seed)
    n0 = (n + 1) // 2
    slots_per_class = max(n0, n - n0, 1)
    if reach is None:
        reach = int(2 * math.sqrt(slots_per_class)) + 2
    width = slots_per_class * band
    span = min(reach, slots_per_class) * band
    order = rng.permutation(n)
    classes = [0 if order[r] < n0 else 1 for r in range(n)]
    slots = [int(order[r]) if classes[r] == 0 else int(order[r]) - n0 for r in range(n)]

    def draw(r: int) -> Polyline:
        start = int(rng.integers(0, max(width - span, 1)))
        lo = slots[r] * band + 1
        return _zigzag(rng, start, start + span, lo, lo + band - 2, steps, horizontal=(classes[r] == 0))

    strings = [draw(r) for r in range(n)]
    for _ in range(1000):
        try:
            part_crossings([[p] for p in strings], [[p] for p in strings], same_side=True)
            break
        except DegenerateCrossingError as exc:
            for r in exc.segments:
                strings[r] = draw(r)
    else:
        raise RuntimeError("could not draw strings in general position")
    return StringInstance(tuple(strings), tuple(classes))


def random_hypergraph(n: int, m: int, seed: int, max_size: int = 6, max_degree: int | None = None, min_size: int = 1) -> Hypergraph:
    """m hyperedges of random sizes; with ``max_degree`` no vertex joins more than that many hyperedges."""
    rng = np.random.default_rng(seed)
    deg = np.zeros(n, dtype=np.int64)
    edges = []
    for _ in range(m):
        cap = np.flatnonzero(deg < max_degree) if max_degree is not None else np.arange(n)
        if len(cap) < min_size:
            break
        size = int(rng.integers(min_size, min(max_size, len(cap)) + 1))
        e = np.sort(rng.choice(cap, size=size, replace=False))
        deg[e] += 1
        edges.append(tuple(int(v) for v in e))
    return Hypergraph(n, tuple(edges))


def in_general_position(items) -> bool:
    return check_general_position(items).ok
