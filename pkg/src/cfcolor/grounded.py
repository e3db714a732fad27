"""CF coloring of grounded L-shape intersection graphs by recursive splitting along a vertical line.

Each split puts the shapes that cannot be handed to a side into a middle family A2, which is
colored from a depth-specific palette block; the two sides recurse and share the next block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Sequence

from .circle import _layer_neighbors, build_layer_aux_graph, check_aux_graph, distance_layers
from .errors import GeneralPositionError, InvariantBreach
from .framework import k_cf_color_via_weak
from .geometry import (
    GroundedLShape,
    Interval,
    grounded_intersection_graph,
    grounded_to_overlap,
    overlap_graph,
    to_grounded_lshapes,
)
from .hypergraph import Coloring, Graph, Hypergraph, degeneracy_color

SENTINEL = "-"


# ---------------------------------------------------------------- interval utilities


def discrete_interval_cf(n: int) -> Coloring:
    """CF coloring of n points on a line w.r.t. all contiguous ranges, with floor(log2 n) + 1 colors.

    The median of every segment takes floor(log2 of the segment size), which exceeds every color in both halves.
    """
    if n < 1:
        raise ValueError("n must be positive")
    colors = [0] * n
    stack = [(0, n)]
    while stack:
        lo, hi = stack.pop()
        size = hi - lo
        if size <= 0:
            continue
        mid = lo + size // 2
        colors[mid] = size.bit_length() - 1
        stack.append((lo, mid))
        stack.append((mid + 1, hi))
    return Coloring(tuple(colors), n.bit_length())


def dual_interval_proper3(items: Sequence) -> Coloring:
    """Color closed integer intervals so every covered point sees some color exactly once.

    Intervals may be ``Interval`` objects or ``(a, b)`` pairs with a <= b. A greedy minimal cover of
    each part of the union alternates colors 0 and 1; every other interval gets 2.
    """
    pairs = [(it.a, it.b) if isinstance(it, Interval) else (int(it[0]), int(it[1])) for it in items]
    for a, b in pairs:
        if a > b:
            raise ValueError(f"interval ({a}, {b}) is reversed")
    n = len(pairs)
    colors = [2] * n
    order = sorted(range(n), key=lambda v: (pairs[v][0], -pairs[v][1]))
    i = 0
    end = None
    parity = 0
    while i < n:
        first = order[i]
        if end is None or pairs[first][0] > end + 1:
            p = pairs[first][0]
            parity = 0
        else:
            p = end + 1
        best = None
        while i < n and pairs[order[i]][0] <= p:
            v = order[i]
            if best is None or pairs[v][1] > pairs[best][1]:
                best = v
            i += 1
        if pairs[best][1] < p:
            continue
        colors[best] = parity
        parity ^= 1
        end = pairs[best][1]
    return Coloring(tuple(colors), 3 if n else 0)


# ---------------------------------------------------------------- split


@dataclass(frozen=True)
class SplitClassification:
    line_x: Fraction
    FL: frozenset[int]
    FM: frozenset[int]
    FR: frozenset[int]
    FM1: frozenset[int]
    FM2: frozenset[int]
    VL: frozenset[int]
    VR: frozenset[int]
    VpL: frozenset[int]
    VpR: frozenset[int]
    I: frozenset[int]
    A1: frozenset[int]
    A2: frozenset[int]
    A3: frozenset[int]


def _split_line(items: Sequence[GroundedLShape], ids: Sequence[int]) -> Fraction:
    order = sorted(ids, key=lambda v: items[v].x)
    k = (len(order) + 1) // 2
    xk = items[order[k - 1]].x
    crit = [items[order[k]].x] + [items[v].right for v in ids if items[v].right > xk]
    nxt = min(c for c in crit if c > xk)
    return Fraction(xk + nxt, 2)


def split_and_classify(items: Sequence[GroundedLShape], ids: Sequence[int] | None = None, graph: Graph | None = None) -> SplitClassification:
    """Split the subfamily ``ids`` by a vertical line just right of its ceil(n/2)-th basepoint."""
    g = grounded_intersection_graph(items) if graph is None else graph
    ids = sorted(range(len(items)) if ids is None else ids)
    if len(ids) < 2:
        raise ValueError("need at least two shapes to split")
    pool = set(ids)

    def nb(v):
        return g.adj[v] & pool

    for v in ids:
        if not nb(v):
            raise ValueError(f"shape {v} is isolated in the subfamily")
    line = _split_line(items, ids)
    FL = frozenset(v for v in ids if items[v].right < line)
    FR = frozenset(v for v in ids if items[v].x > line)
    FM = frozenset(pool - FL - FR)
    FM2 = frozenset(v for v in FM if not (nb(v) & FM))
    FM1 = FM - FM2
    VL = frozenset(v for v in FM2 if nb(v) & FL)
    VR = frozenset(v for v in FM2 if nb(v) & FR)
    VpL = frozenset(u for v in VL for u in nb(v) & FL)
    VpR = frozenset(u for v in VR for u in nb(v) & FR)
    rest = (FL | FR) - VpL - VpR
    I = frozenset(v for v in rest if not (nb(v) & rest))
    A1 = FL - VpL - I
    A3 = FR - VpR - I
    A2 = I | FM | VpL | VpR
    return SplitClassification(line, FL, FM, FR, FM1, FM2, VL, VR, VpL, VpR, I, A1, A2, A3)


# ---------------------------------------------------------------- consecutive-crossing auxiliary graphs


@dataclass(frozen=True)
class AuxParts:
    ids: tuple[int, ...]
    g1: frozenset[tuple[int, int]]
    g2: frozenset[tuple[int, int]]
    g3: frozenset[tuple[int, int]]

    def union(self) -> Graph:
        adj: list[set[int]] = [set() for _ in self.ids]
        for u, v in self.g1 | self.g2 | self.g3:
            adj[u].add(v)
            adj[v].add(u)
        return Graph(len(self.ids), tuple(frozenset(a) for a in adj))


class ConsecutiveAux:
    """Edges between pool members consecutive along the vertical or horizontal part of some hyperedge shape.

    Left neighbors of a shape y cross its vertical part and are ordered by depth; right neighbors
    cross its horizontal part and are ordered by basepoint. A shape with exactly one of each adds their pair.
    """

    def __init__(self, items: Sequence[GroundedLShape], graph: Graph, pool, edge_shapes):
        pool = set(pool)
        self.left: dict[int, tuple[int, ...]] = {}
        self.right: dict[int, tuple[int, ...]] = {}
        for y in edge_shapes:
            xy = items[y].x
            nb = [u for u in graph.adj[y] if u in pool]
            self.left[y] = tuple(sorted((u for u in nb if items[u].x < xy), key=lambda u: items[u].depth))
            self.right[y] = tuple(sorted((u for u in nb if items[u].x > xy), key=lambda u: items[u].x))

    def build(self, K, shapes=None) -> AuxParts:
        ids = tuple(sorted(K))
        pos = {v: i for i, v in enumerate(ids)}
        g1, g2, g3 = set(), set(), set()
        for y in self.left if shapes is None else shapes:
            lft = [pos[u] for u in self.left[y] if u in pos]
            rgt = [pos[u] for u in self.right[y] if u in pos]
            for u, v in zip(lft, lft[1:]):
                g1.add((min(u, v), max(u, v)))
            for u, v in zip(rgt, rgt[1:]):
                g2.add((min(u, v), max(u, v)))
            if len(lft) == 1 and len(rgt) == 1:
                g3.add((min(lft[0], rgt[0]), max(lft[0], rgt[0])))
        return AuxParts(ids, frozenset(g1), frozenset(g2), frozenset(g3))


def _planar_cap(v: int) -> int:
    return 3 * v - 6 if v >= 3 else v * (v - 1) // 2


def _touched(edges) -> int:
    return len({u for e in edges for u in e})


@dataclass
class GroundedStats:
    splits: int = 0
    max_depth: int = 0
    a1a3_pairs: int = 0
    newly_isolated: int = 0
    repairs: int = 0
    repaired_rounds: int = 0
    planarity_breaches: int = 0
    g3_density_breaches: int = 0
    max_g3_ratio: float = 0.0
    contiguity_checks: int = 0
    f2_max_palette: int = 0
    f3_max_palette: int = 0
    f4_max_palette: int = 0
    f5_max_aux_palette: int = 0
    c1_palettes: list[int] = field(default_factory=list)
    c2_palettes: list[int] = field(default_factory=list)
    a2_palettes: list[int] = field(default_factory=list)


def _check_planar(parts: AuxParts, stats: GroundedStats, which=("g1", "g2")) -> None:
    for name in which:
        edges = getattr(parts, name)
        if len(edges) > _planar_cap(_touched(edges)):
            stats.planarity_breaches += 1


def _check_g3_density(parts: AuxParts, stats: GroundedStats) -> None:
    v = _touched(parts.g3)
    if v < 2:
        return
    ratio = len(parts.g3) / (v * (math.log2(v) + 1))
    stats.max_g3_ratio = max(stats.max_g3_ratio, ratio)
    if ratio > 8:
        stats.g3_density_breaches += 1


# ---------------------------------------------------------------- the six sub-colorings


def coloring_f1(items, graph, X, I, K=None, stats: GroundedStats | None = None, aux: ConsecutiveAux | None = None) -> dict[int, int]:
    """Proper coloring of K (default X) w.r.t. the hyperedges N_K(y), y in I."""
    st = stats if stats is not None else GroundedStats()
    aux = ConsecutiveAux(items, graph, X, I) if aux is None else aux
    parts = aux.build(X if K is None else K)
    _check_planar(parts, st)
    _check_g3_density(parts, st)
    colors = degeneracy_color(parts.union()).colors
    return dict(zip(parts.ids, colors))


def nesting_order(items: Sequence[GroundedLShape], FM2) -> list[int]:
    """Pairwise disjoint shapes crossing one vertical line, innermost first."""
    return sorted(FM2, key=lambda v: -items[v].x)


def _contiguous_ranges(graph: Graph, order: Sequence[int], shapes, what: str) -> dict[int, tuple[int, int]]:
    pos = {v: i for i, v in enumerate(order)}
    out = {}
    for u in shapes:
        idx = sorted(pos[w] for w in graph.adj[u] if w in pos)
        if not idx:
            continue
        if idx[-1] - idx[0] + 1 != len(idx):
            raise InvariantBreach(f"shape {u} meets a non-contiguous run of {what}: {idx}")
        out[u] = (idx[0], idx[-1])
    return out


class LayeredF2:
    """Proper coloring of F_M1 w.r.t. F_M1 through the interval overlap picture on the split line."""

    def __init__(self, items: Sequence[GroundedLShape], FM1, line, stats: GroundedStats | None = None):
        self.stats = stats if stats is not None else GroundedStats()
        self.ids = sorted(FM1)
        self.pos = {v: i for i, v in enumerate(self.ids)}
        iv = grounded_to_overlap([items[v] for v in self.ids], line)
        self.graph = overlap_graph(iv)
        self.images = to_grounded_lshapes(iv)
        self.parts = distance_layers(iv, self.graph)
        self.nbrs = {}
        for p, part in enumerate(self.parts):
            for i in range(1, len(part.layers)):
                self.nbrs[(p, i)] = _layer_neighbors(part.layers[i - 1], part.layers[i], self.graph, self.images)

    def color(self, K) -> dict[int, Hashable]:
        Kloc = {self.pos[v] for v in K if v in self.pos}
        lab: dict[int, Hashable] = {}
        for p, part in enumerate(self.parts):
            layers = part.layers
            s = len(layers) - 1
            for i in range(1, s + 1):
                prevK = [v for v in layers[i - 1] if v in Kloc]
                if not prevK:
                    continue
                aux = build_layer_aux_graph(prevK, layers[i], self.images, nbrs=self.nbrs[(p, i)])
                check_aux_graph(aux)
                for v, c in zip(aux.ids, degeneracy_color(aux.union()).colors):
                    lab[v] = ((i - 1) % 3, c)
            for v in layers[s]:
                if v in Kloc:
                    lab[v] = (s % 3, 0)
            root_nb = sorted(u for u in self.graph.adj[part.root] if u in Kloc)
            if len(root_nb) >= 2 and len({lab[u] for u in root_nb}) == 1:
                lab[root_nb[0]] = ("x",)
        used = len(set(lab.values()))
        self.stats.f2_max_palette = max(self.stats.f2_max_palette, used)
        return {self.ids[v]: c for v, c in lab.items()}


def coloring_f3(items, graph, VpR, VR, K=None, stats: GroundedStats | None = None) -> dict[int, int]:
    """Proper coloring of V'_R w.r.t. V_R: consecutive crossings along horizontal parts, degeneracy colored."""
    st = stats if stats is not None else GroundedStats()
    aux = ConsecutiveAux(items, graph, VpR, VR)
    parts = aux.build(VpR if K is None else K)
    _check_planar(parts, st)
    colors = degeneracy_color(parts.union()).colors
    used = max(colors, default=-1) + 1
    st.f3_max_palette = max(st.f3_max_palette, used)
    if used > 6:
        raise InvariantBreach(f"f3 used {used} colors on a planar auxiliary graph")
    return dict(zip(parts.ids, colors))


def coloring_f4(items, graph, VpL, VL, K=None, stats: GroundedStats | None = None, order=None) -> dict[int, int]:
    """Proper coloring of V'_L w.r.t. V_L: each V'_L shape meets a contiguous run of V_L in nesting order."""
    st = stats if stats is not None else GroundedStats()
    vl_order = nesting_order(items, VL) if order is None else [v for v in order if v in VL]
    members = sorted(VpL if K is None else K)
    ranges = _contiguous_ranges(graph, vl_order, members, "V_L")
    st.contiguity_checks += len(ranges)
    with_range = [u for u in members if u in ranges]
    col = dual_interval_proper3([ranges[u] for u in with_range])
    out = {u: c for u, c in zip(with_range, col.colors)}
    for u in members:
        out.setdefault(u, 0)
    st.f4_max_palette = max(st.f4_max_palette, len(set(out.values())))
    return out


def coloring_f5(items, graph, FM2, VpR, stats: GroundedStats | None = None) -> dict[int, int]:
    """CF coloring of F_M2 w.r.t. V'_R through the weak-to-CF reduction over consecutive crossings."""
    st = stats if stats is not None else GroundedStats()
    ids = sorted(FM2)
    pos = {v: i for i, v in enumerate(ids)}
    edges = []
    for y in sorted(VpR):
        e = sorted(pos[u] for u in graph.adj[y] if u in pos)
        if e:
            edges.append(tuple(e))
    h = Hypergraph(len(ids), tuple(edges))
    aux = ConsecutiveAux(items, graph, FM2, VpR)

    def colorer(sub, local):
        parts = aux.build([ids[i] for i in local])
        _check_planar(parts, st)
        colors = degeneracy_color(parts.union()).colors
        st.f5_max_aux_palette = max(st.f5_max_aux_palette, max(colors, default=-1) + 1)
        return Coloring(tuple(colors), max(max(colors, default=0) + 1, 1))

    col = k_cf_color_via_weak(h, colorer, k=1)
    return dict(zip(ids, col.colors))


def coloring_f6(items, graph, FM2, VpL, stats: GroundedStats | None = None) -> dict[int, int]:
    """CF coloring of F_M2 w.r.t. V'_L: every V'_L shape meets a contiguous run in nesting order."""
    st = stats if stats is not None else GroundedStats()
    order = nesting_order(items, FM2)
    if not order:
        return {}
    ranges = _contiguous_ranges(graph, order, sorted(VpL), "F_M2")
    st.contiguity_checks += len(ranges)
    col = discrete_interval_cf(len(order))
    return dict(zip(order, col.colors))


# ---------------------------------------------------------------- composition on A2


def _monochromatic(edge, lab) -> bool:
    if len(edge) < 2:
        return False
    c0 = lab[edge[0]]
    return all(lab[u] == c0 for u in edge)


def color_middle(items, graph, cls: SplitClassification, stats: GroundedStats | None = None) -> dict[int, Hashable]:
    """CF coloring of A2 (as labels) such that every A2 member sees a unique A2 label."""
    st = stats if stats is not None else GroundedStats()
    X = sorted(cls.VpL | cls.FM1 | cls.VpR)
    Y = sorted(cls.VL | cls.VR | cls.FM1 | cls.I)
    out: dict[int, Hashable] = {}

    if X:
        Xset = set(X)
        nbrX = {y: tuple(u for u in graph.adj[y] if u in Xset) for y in Y}
        pos = {v: i for i, v in enumerate(X)}
        h = Hypergraph(len(X), tuple(tuple(sorted(pos[u] for u in nbrX[y])) for y in Y if nbrX[y]))
        aux_f1 = ConsecutiveAux(items, graph, X, cls.I)
        aux_all = ConsecutiveAux(items, graph, X, Y)
        f2 = LayeredF2(items, cls.FM1, cls.line_x, st) if cls.FM1 else None
        vl_order = nesting_order(items, cls.VL)

        def colorer(sub, local):
            K = [X[i] for i in local]
            Kset = set(K)
            f1 = coloring_f1(items, graph, X, cls.I, K, st, aux_f1)
            f2c = f2.color(K) if f2 is not None else {}
            f3 = coloring_f3(items, graph, cls.VpR, cls.VR, [v for v in K if v in cls.VpR], st)
            f4 = coloring_f4(items, graph, cls.VpL, cls.VL, [v for v in K if v in cls.VpL], st, vl_order)
            lab = {v: (f1[v], f2c.get(v, SENTINEL), f3.get(v, SENTINEL), f4.get(v, SENTINEL)) for v in K}
            bad = []
            for y in Y:
                e = [u for u in nbrX[y] if u in Kset]
                if _monochromatic(e, lab):
                    bad.append(y)
            if bad:
                st.repairs += len(bad)
                st.repaired_rounds += 1
                parts = aux_all.build(K, bad)
                f7 = dict(zip(parts.ids, degeneracy_color(parts.union()).colors))
                lab = {v: lab[v] + (f7[v],) for v in K}
            col = Coloring.from_labels([lab[v] for v in K])
            return col

        c1 = k_cf_color_via_weak(h, colorer, k=1)
        st.c1_palettes.append(c1.palette_size)
        for v, c in zip(X, c1.colors):
            out[v] = ("c1", c)

    if cls.FM2:
        f5 = coloring_f5(items, graph, cls.FM2, cls.VpR, st)
        f6 = coloring_f6(items, graph, cls.FM2, cls.VpL, st)
        c2 = {v: (f5[v], f6[v]) for v in cls.FM2}
        st.c2_palettes.append(len(set(c2.values())))
        for v, c in c2.items():
            out[v] = ("c2", c)

    for v in cls.I:
        out[v] = ("I",)
    st.a2_palettes.append(len(set(out.values())))
    return out


def _require_general_position(items: Sequence[GroundedLShape]) -> None:
    xs: dict[int, int] = {}
    for v, s in enumerate(items):
        if s.x in xs:
            raise GeneralPositionError(f"shapes {xs[s.x]} and {v} share basepoint {s.x}", [(xs[s.x], v)])
        xs[s.x] = v
    depths: dict[int, int] = {}
    for v, s in enumerate(items):
        if s.depth in depths:
            raise GeneralPositionError(f"shapes {depths[s.depth]} and {v} share depth {s.depth}", [(depths[s.depth], v)])
        depths[s.depth] = v
        if s.right in xs:
            raise GeneralPositionError(f"shape {v} ends at the basepoint of shape {xs[s.right]}", [(v, xs[s.right])])


def cf_color_grounded(items: Sequence[GroundedLShape], stats: GroundedStats | None = None) -> Coloring:
    """CF coloring of the intersection graph of grounded L-shapes.

    Isolated shapes share color 0. Recursion depth d colors its middle family from block d.
    """
    n = len(items)
    if n == 0:
        return Coloring((), 0)
    _require_general_position(items)
    st = stats if stats is not None else GroundedStats()
    g = grounded_intersection_graph(items)
    iso = ("iso",)
    labels: list = [None] * n
    for v in range(n):
        if not g.adj[v]:
            labels[v] = iso
    stack = [(tuple(v for v in range(n) if g.adj[v]), 0)]
    while stack:
        ids, depth = stack.pop()
        pool = set(ids)
        live = []
        for v in ids:
            if g.adj[v] & pool:
                live.append(v)
            else:
                labels[v] = iso
                if depth > 0:
                    st.newly_isolated += 1
        if not live:
            continue
        st.splits += 1
        st.max_depth = max(st.max_depth, depth)
        cls = split_and_classify(items, live, g)
        st.a1a3_pairs += sum(len(g.adj[v] & cls.A3) for v in cls.A1)
        for v, lab in color_middle(items, g, cls, st).items():
            labels[v] = (depth,) + lab
        if cls.A1:
            stack.append((tuple(sorted(cls.A1)), depth + 1))
        if cls.A3:
            stack.append((tuple(sorted(cls.A3)), depth + 1))
    return Coloring.from_labels(labels, reserved=iso)
