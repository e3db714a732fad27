"""s-CF coloring of hypergraphs F x C of partitioned curves via intersection patterns.

Each curve is split into t slots. A pair of distinct curves (f, c) realizes the pattern (i, j)
when slot i of f crosses slot j of c. The auxiliary graph joins two F curves whose slot-i
parts are consecutive along slot j of some C curve.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import (
    DegenerateCrossingError,
    ImproperClassesError,
    PartitionConditionError,
    PatternHypothesisError,
)
from .framework import k_cf_color_via_weak
from .geometry import CornerLShape, CrossingTable, Frame, Polyline, crossing_table, polyline_crossings
from .hypergraph import Coloring, Graph, Hypergraph, degeneracy_color


@dataclass(frozen=True)
class PartitionedCurve:
    """A curve with an identity and t slots; curves with equal ``cid`` are the same curve."""

    cid: int
    parts: tuple[Polyline | None, ...]

    @property
    def t(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class PatternFamily:
    F: tuple[PartitionedCurve, ...]
    C: tuple[PartitionedCurve, ...]
    patterns: frozenset[tuple[int, int]]
    l: int
    s: int
    realized_l: int
    realized_s: int
    # one row per crossing of an F slot with a C slot, sorted by (c, slot_j, slot_i, position along c)
    rec_f: np.ndarray = field(repr=False, compare=False)
    rec_c: np.ndarray = field(repr=False, compare=False)
    rec_group: np.ndarray = field(repr=False, compare=False)
    rec_pattern: np.ndarray = field(repr=False, compare=False)
    pattern_list: tuple[tuple[int, int], ...] = field(repr=False, compare=False, default=())

    @property
    def m(self) -> int:
        return len(self.patterns)

    def hypergraph(self) -> Hypergraph:
        """Vertices are F positions; one hyperedge N_F(c) per C curve meeting some F curve."""
        nb: dict[int, set[int]] = defaultdict(set)
        for f, c in zip(self.rec_f.tolist(), self.rec_c.tolist()):
            nb[c].add(f)
        return Hypergraph(len(self.F), tuple(tuple(sorted(nb[c])) for c in sorted(nb)))


@dataclass
class PatternStats:
    rounds: int = 0
    aux_palettes: list[int] = field(default_factory=list)
    planarity_breaches: int = 0
    nmc_checks: int = 0
    nmc_failures: int = 0
    max_pattern_edges_ratio: float = 0.0


def _check_own_parts(curve: PartitionedCurve) -> None:
    parts = [(i, p) for i, p in enumerate(curve.parts) if p is not None]
    for x in range(len(parts)):
        for y in range(x + 1, len(parts)):
            (i, p), (j, q) = parts[x], parts[y]
            try:
                hit = polyline_crossings(p, q, allow_endpoint_contact=True)
            except DegenerateCrossingError as exc:
                raise PartitionConditionError(f"curve {curve.cid}: slots {i} and {j} overlap") from exc
            if hit:
                raise PartitionConditionError(f"curve {curve.cid}: slots {i} and {j} cross in their interiors")


def _union(F, C) -> list[PartitionedCurve]:
    seen: dict[int, PartitionedCurve] = {}
    for cur in list(F) + list(C):
        old = seen.get(cur.cid)
        if old is None:
            seen[cur.cid] = cur
        elif old.parts != cur.parts:
            raise PartitionConditionError(f"curve id {cur.cid} is used for two different curves")
    return [seen[k] for k in sorted(seen)]


def _crossings_by_cid(curves: Sequence[PartitionedCurve]) -> CrossingTable:
    t = max((c.t for c in curves), default=0)
    sides = [list(c.parts) + [None] * (t - c.t) for c in curves]
    cids = np.array([c.cid for c in curves], dtype=np.int64)
    tab = crossing_table(sides, sides, cids.tolist(), cids.tolist(), same_side=True)
    same = tab.slot_a == tab.slot_b
    if same.any():
        k = int(np.flatnonzero(same)[0])
        raise PartitionConditionError(
            f"slot {int(tab.slot_a[k])} of curves {int(cids[tab.a[k]])} and {int(cids[tab.b[k]])} intersect"
        )
    return replace(tab, a=cids[tab.a], b=cids[tab.b])


def _positions(cids: np.ndarray, members: Sequence[PartitionedCurve]) -> np.ndarray:
    """Position of each curve id in ``members``, or -1."""
    ids = np.array([c.cid for c in members], dtype=np.int64)
    if len(ids) == 0 or len(cids) == 0:
        return np.full(len(cids), -1, dtype=np.int64)
    order = np.argsort(ids, kind="stable")
    at = np.clip(np.searchsorted(ids[order], cids), 0, len(ids) - 1)
    return np.where(ids[order][at] == cids, order[at], -1)


def _exact_order(c, j, i, local, num, den, key) -> np.ndarray:
    """Sort rows by (c, j, i, position); floats decide unless two keys of one group nearly coincide."""
    order = np.lexsort((key, i, j, c))
    if len(order) < 2:
        return order
    same_group = (c[order][1:] == c[order][:-1]) & (j[order][1:] == j[order][:-1]) & (i[order][1:] == i[order][:-1])
    k = key[order]
    close = same_group & (np.abs(k[1:] - k[:-1]) <= 1e-9 * np.maximum(1.0, np.abs(k[1:])))
    if not close.any():
        return order
    order = order.copy()
    r = 0
    flags = close.tolist()
    while r < len(flags):
        if not flags[r]:
            r += 1
            continue
        lo = r
        while r < len(flags) and flags[r]:
            r += 1
        run = order[lo:r + 1]
        exact = sorted(run.tolist(), key=lambda q: int(local[q]) + Fraction(int(num[q]), int(den[q])))
        order[lo:r + 1] = exact
    return order


def family_from_crossings(
    F: Sequence[PartitionedCurve],
    C: Sequence[PartitionedCurve],
    tab: CrossingTable,
    l: int | None = None,
    s: int | None = None,
) -> PatternFamily:
    """Pattern family from a crossing table between distinct curves, keyed by curve id, in either orientation."""
    fa, fb = _positions(tab.a, F), _positions(tab.b, F)
    ca, cb = _positions(tab.a, C), _positions(tab.b, C)
    # orientation 1: a is the F curve and b the C curve; orientation 2 swaps them
    m1 = (fa >= 0) & (cb >= 0) & (tab.a != tab.b)
    m2 = (fb >= 0) & (ca >= 0) & (tab.a != tab.b)
    f = np.concatenate([fa[m1], fb[m2]])
    c = np.concatenate([cb[m1], ca[m2]])
    i = np.concatenate([tab.slot_a[m1], tab.slot_b[m2]]).astype(np.int64)
    j = np.concatenate([tab.slot_b[m1], tab.slot_a[m2]]).astype(np.int64)
    local = np.concatenate([tab.local_b[m1], tab.local_a[m2]])
    num = np.concatenate([tab.num_b[m1], tab.num_a[m2]])
    den = np.concatenate([tab.den[m1], tab.den[m2]])
    key = local.astype(np.float64) + num.astype(np.float64) / den.astype(np.float64) if len(f) else np.zeros(0)
    order = _exact_order(c, j, i, local, num, den, key)
    f, c, i, j = f[order], c[order], i[order], j[order]

    t = int(max(i.max(), j.max())) + 1 if len(f) else 1
    pat = i * t + j
    nC = max(len(C), 1)
    pair = np.unique((f * nC + c) * (t * t) + pat)
    pair_count = np.unique(pair // (t * t), return_counts=True)
    curve = np.unique(c * (t * t) + pat)
    curve_count = np.unique(curve // (t * t), return_counts=True)
    realized_l = int(pair_count[1].min()) if len(pair) else 0
    top = int(curve_count[1].max()) if len(curve) else 0
    realized_s = math.ceil(top / realized_l) if realized_l else 0
    l = realized_l if l is None else l
    s = realized_s if s is None else s
    if len(pair):
        low = pair_count[1] < l
        if low.any():
            q = int(pair_count[0][np.flatnonzero(low)[0]])
            raise PatternHypothesisError(
                f"curves {F[q // nC].cid} and {C[q % nC].cid} realize {int(pair_count[1][low][0])} < l = {l} patterns"
            )
        high = curve_count[1] > l * s
        if high.any():
            q = int(curve_count[0][np.flatnonzero(high)[0]])
            raise PatternHypothesisError(f"curve {C[q].cid} realizes {int(curve_count[1][high][0])} > l*s = {l * s} patterns")
    pattern_codes = np.unique(pat)
    pattern_list = tuple((int(p) // t, int(p) % t) for p in pattern_codes)
    rec_p = np.searchsorted(pattern_codes, pat)
    if len(f):
        change = np.concatenate([[0], ((c[1:] != c[:-1]) | (j[1:] != j[:-1]) | (i[1:] != i[:-1])).astype(np.int64)])
        rec_g = np.cumsum(change)
    else:
        rec_g = np.zeros(0, dtype=np.int64)
    return PatternFamily(
        tuple(F), tuple(C), frozenset(pattern_list), l, s, realized_l, realized_s,
        f.astype(np.int64), c.astype(np.int64), rec_g, rec_p.astype(np.int64), pattern_list,
    )


def compute_patterns(
    F: Sequence[PartitionedCurve],
    C: Sequence[PartitionedCurve],
    l: int | None = None,
    s: int | None = None,
) -> PatternFamily:
    """Validate the partition conditions and compute the exact pattern set of F x C.

    With ``l`` and ``s`` given, the hypotheses are checked against them; otherwise the realized values are used.
    """
    curves = _union(F, C)
    for cur in curves:
        _check_own_parts(cur)
    return family_from_crossings(F, C, _crossings_by_cid(curves), l, s)


def _planar_cap(v: int) -> int:
    return 3 * v - 6 if v >= 3 else v * (v - 1) // 2


def aux_edges(fam: PatternFamily, alive: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Edges (u, v, pattern, c) of G(K) for the alive mask K over F, one row per consecutive crossing pair."""
    keep = alive[fam.rec_f]
    f, g = fam.rec_f[keep], fam.rec_group[keep]
    p, c = fam.rec_pattern[keep], fam.rec_c[keep]
    if len(f) < 2:
        z = np.zeros(0, dtype=np.int64)
        return z, z, z, z
    adj = (g[:-1] == g[1:]) & (f[:-1] != f[1:])
    return f[:-1][adj], f[1:][adj], p[:-1][adj], c[:-1][adj]


def pattern_weak_coloring(fam: PatternFamily, K: Sequence[int], stats: PatternStats | None = None) -> Coloring:
    """Degeneracy coloring of G(K); positions follow the order of ``K``."""
    K = list(K)
    alive = np.zeros(len(fam.F), dtype=bool)
    alive[K] = True
    u, v, p, c = aux_edges(fam, alive)
    loc = np.full(len(fam.F), -1, dtype=np.int64)
    loc[K] = np.arange(len(K))
    lu, lv = loc[u], loc[v]
    code = np.unique(np.minimum(lu, lv) * max(len(K), 1) + np.maximum(lu, lv))
    g = Graph.from_edges(len(K), zip((code // max(len(K), 1)).tolist(), (code % max(len(K), 1)).tolist()))
    col = degeneracy_color(g)
    if stats is not None:
        stats.rounds += 1
        stats.aux_palettes.append(col.palette_size)
        _check_rounds(fam, alive, lu, lv, p, c, stats)
    return Coloring(col.colors, max(col.palette_size, 1))


def _check_rounds(fam, alive, lu, lv, p, c, stats: PatternStats) -> None:
    if len(lu):
        lo, hi = np.minimum(lu, lv), np.maximum(lu, lv)
        n = int(max(lo.max(), hi.max())) + 1
        for k in np.unique(p).tolist():
            sel = p == k
            e = np.unique(lo[sel] * n + hi[sel])
            verts = np.unique(np.concatenate([lo[sel], hi[sel]]))
            if len(e) > _planar_cap(len(verts)):
                stats.planarity_breaches += 1
            if len(verts) >= 3:
                stats.max_pattern_edges_ratio = max(stats.max_pattern_edges_ratio, len(e) / (3 * len(verts) - 6))
    # every C curve whose alive neighborhood has more than s members must contribute a G(K) edge
    keep = alive[fam.rec_f]
    pairs = np.unique(fam.rec_c[keep] * len(fam.F) + fam.rec_f[keep])
    size = np.bincount(pairs // len(fam.F), minlength=len(fam.C)) if len(pairs) else np.zeros(len(fam.C), dtype=np.int64)
    has_edge = np.bincount(c, minlength=len(fam.C)) > 0 if len(c) else np.zeros(len(fam.C), dtype=bool)
    big = size >= fam.s + 1
    stats.nmc_checks += int(big.sum())
    stats.nmc_failures += int((big & ~has_edge).sum())


def s_cf_color(fam: PatternFamily, stats: PatternStats | None = None) -> Coloring:
    """s-CF coloring of the hypergraph F x C through the weak-to-CF reduction with k = s."""
    if not fam.F:
        return Coloring((), 0)
    h = fam.hypergraph()
    k = max(fam.s, 1)

    def colorer(sub, ids):
        return pattern_weak_coloring(fam, ids, stats)

    return k_cf_color_via_weak(h, colorer, k=k)


# ---------------------------------------------------------------- instantiations


def lshape_curves(items: Sequence[CornerLShape]) -> list[PartitionedCurve]:
    """Slots (vertical, horizontal)."""
    out = []
    for v, s in enumerate(items):
        vert = Polyline(((s.x, s.y), (s.x, s.y + s.height)))
        horiz = Polyline(((s.x, s.y), (s.x + s.width, s.y)))
        out.append(PartitionedCurve(v, (vert, horiz)))
    return out


def frame_curves(items: Sequence[Frame]) -> list[PartitionedCurve]:
    """Slots (left, bottom, right, top)."""
    out = []
    for v, f in enumerate(items):
        left = Polyline(((f.x1, f.y1), (f.x1, f.y2)))
        bottom = Polyline(((f.x1, f.y1), (f.x2, f.y1)))
        right = Polyline(((f.x2, f.y1), (f.x2, f.y2)))
        top = Polyline(((f.x1, f.y2), (f.x2, f.y2)))
        out.append(PartitionedCurve(v, (left, bottom, right, top)))
    return out


def k_cf_color_lshapes(items: Sequence[CornerLShape], stats: PatternStats | None = None) -> Coloring:
    """2-CF coloring of the intersection graph of L-shapes."""
    if not items:
        return Coloring((), 0)
    # own parts of axis-parallel shapes meet only at their shared corner
    curves = lshape_curves(items)
    fam = family_from_crossings(curves, curves, _crossings_by_cid(curves), l=1, s=2)
    return s_cf_color(fam, stats)


def k_cf_color_frames(items: Sequence[Frame], stats: PatternStats | None = None) -> Coloring:
    """4-CF coloring of the intersection graph of frames."""
    if not items:
        return Coloring((), 0)
    curves = frame_curves(items)
    fam = family_from_crossings(curves, curves, _crossings_by_cid(curves), l=2, s=4)
    return s_cf_color(fam, stats)


def cf_color_bounded_chromatic(
    strings: Sequence[Polyline],
    classes: Sequence[int],
    stats: PatternStats | None = None,
) -> Coloring:
    """CF coloring of a string graph from a proper coloring ``classes`` of it; class i gets its own palette."""
    n = len(strings)
    if len(classes) != n:
        raise ValueError("one class per string")
    if n == 0:
        return Coloring((), 0)
    tab = crossing_table([[p] for p in strings], [[p] for p in strings], same_side=True)
    cls = np.asarray(classes)
    bad = cls[tab.a] == cls[tab.b]
    if bad.any():
        k = int(np.flatnonzero(bad)[0])
        a, b = int(tab.a[k]), int(tab.b[k])
        raise ImproperClassesError(f"strings {a} and {b} share class {classes[a]} but cross")
    labels = sorted(set(classes))
    slot = {c: k for k, c in enumerate(labels)}
    t = len(labels)
    curves = []
    for v, p in enumerate(strings):
        parts = [None] * t
        parts[slot[classes[v]]] = p
        curves.append(PartitionedCurve(v, tuple(parts)))
    slots = np.array([slot[c] for c in classes], dtype=np.int64)
    tab = replace(tab, slot_a=slots[tab.a], slot_b=slots[tab.b])
    out: list = [None] * n
    for c in labels:
        F = [cur for cur in curves if classes[cur.cid] == c]
        C = [cur for cur in curves if classes[cur.cid] != c]
        fam = family_from_crossings(F, C, tab, l=1, s=1)
        col = s_cf_color(fam, stats)
        for cur, color in zip(F, col.colors):
            out[cur.cid] = (c, color)
    return Coloring.from_labels(out)
