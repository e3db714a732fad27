"""Integer-coordinate shapes, exact intersection predicates, intersection graphs and representation maps.

Scalar predicates are written for clarity and serve as the reference; the graph builders
enumerate candidate pairs by a bounding-box sweep and evaluate the same predicates with numpy.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .errors import DegenerateCrossingError, GeneralPositionError
from .hypergraph import Graph


@dataclass(frozen=True)
class Interval:
    a: int
    b: int

    def __post_init__(self):
        if not self.a < self.b:
            raise ValueError(f"interval needs a < b, got [{self.a}, {self.b}]")


@dataclass(frozen=True)
class GroundedLShape:
    """Vertical part from (x, 0) down to (x, -depth), horizontal part from there to (x + width, -depth)."""

    x: int
    depth: int
    width: int

    def __post_init__(self):
        if self.depth <= 0 or self.width <= 0:
            raise ValueError("grounded L-shape needs positive depth and width")

    @property
    def right(self) -> int:
        return self.x + self.width


@dataclass(frozen=True)
class CornerLShape:
    """Corner at (x, y); vertical part goes up by ``height``, horizontal part goes right by ``width``."""

    x: int
    y: int
    height: int
    width: int

    def __post_init__(self):
        if self.height <= 0 or self.width <= 0:
            raise ValueError("corner L-shape needs positive height and width")


@dataclass(frozen=True)
class Frame:
    """Boundary of the rectangle [x1, x2] x [y1, y2]."""

    x1: int
    y1: int
    x2: int
    y2: int

    def __post_init__(self):
        if not (self.x1 < self.x2 and self.y1 < self.y2):
            raise ValueError("frame needs x1 < x2 and y1 < y2")


@dataclass(frozen=True)
class Polyline:
    points: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pts = tuple((int(x), int(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 2:
            raise ValueError("polyline needs at least two points")
        for p, q in zip(pts, pts[1:]):
            if p == q:
                raise ValueError("polyline has a zero-length segment")

    def segments(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        return list(zip(self.points, self.points[1:]))

    def bbox(self) -> tuple[int, int, int, int]:
        xs = [p[0] for p in self.points]
        ys = [p[1] for p in self.points]
        return min(xs), min(ys), max(xs), max(ys)


Shape = Union[Interval, GroundedLShape, CornerLShape, Frame, Polyline]


# ---------------------------------------------------------------- scalar predicates


def intervals_overlap(i1: Interval, i2: Interval) -> bool:
    if len({i1.a, i1.b, i2.a, i2.b}) < 4:
        raise GeneralPositionError(f"intervals {i1} and {i2} share an endpoint")
    return i1.a < i2.a < i1.b < i2.b or i2.a < i1.a < i2.b < i1.b


def grounded_lshapes_intersect(l1: GroundedLShape, l2: GroundedLShape) -> bool:
    if l1.x == l2.x:
        raise GeneralPositionError(f"grounded L-shapes {l1} and {l2} share a basepoint")
    if l1.x > l2.x:
        l1, l2 = l2, l1
    if l2.x > l1.right or (l2.x == l1.right and l2.depth < l1.depth):
        return False
    if l2.x == l1.right or l2.depth == l1.depth:
        raise GeneralPositionError(f"grounded L-shapes {l1} and {l2} touch")
    return l2.depth > l1.depth


def frames_intersect(f1: Frame, f2: Frame) -> bool:
    meet = f1.x1 <= f2.x2 and f2.x1 <= f1.x2 and f1.y1 <= f2.y2 and f2.y1 <= f1.y2
    if not meet:
        return False
    if {f1.x1, f1.x2} & {f2.x1, f2.x2} or {f1.y1, f1.y2} & {f2.y1, f2.y2}:
        raise GeneralPositionError(f"frames {f1} and {f2} share a coordinate")
    inside12 = f1.x1 < f2.x1 and f2.x2 < f1.x2 and f1.y1 < f2.y1 and f2.y2 < f1.y2
    inside21 = f2.x1 < f1.x1 and f1.x2 < f2.x2 and f2.y1 < f1.y1 and f1.y2 < f2.y2
    return not (inside12 or inside21)


def _vertical_meets_horizontal(v: CornerLShape, h: CornerLShape) -> tuple[bool, bool]:
    """(closed contact, strict crossing) between the vertical part of v and the horizontal part of h."""
    closed = h.x <= v.x <= h.x + h.width and v.y <= h.y <= v.y + v.height
    strict = h.x < v.x < h.x + h.width and v.y < h.y < v.y + v.height
    return closed, strict


def corner_lshapes_intersect(l1: CornerLShape, l2: CornerLShape) -> bool:
    c1, s1 = _vertical_meets_horizontal(l1, l2)
    c2, s2 = _vertical_meets_horizontal(l2, l1)
    collinear_v = l1.x == l2.x and l1.y <= l2.y + l2.height and l2.y <= l1.y + l1.height
    collinear_h = l1.y == l2.y and l1.x <= l2.x + l2.width and l2.x <= l1.x + l1.width
    if (c1 and not s1) or (c2 and not s2) or collinear_v or collinear_h:
        raise GeneralPositionError(f"corner L-shapes {l1} and {l2} touch or overlap")
    return s1 or s2


# ---------------------------------------------------------------- candidate pairs


def bbox_candidate_pairs(xlo, xhi, ylo=None, yhi=None) -> tuple[np.ndarray, np.ndarray]:
    """Index pairs (i, j), i != j, each unordered pair once, whose closed boxes intersect."""
    xlo = np.asarray(xlo, dtype=np.int64)
    xhi = np.asarray(xhi, dtype=np.int64)
    n = len(xlo)
    if n < 2:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty
    order = np.argsort(xlo, kind="stable")
    sxlo = xlo[order]
    hi = np.searchsorted(sxlo, xhi[order], side="right")
    start = np.arange(1, n + 1)
    counts = np.maximum(hi - start, 0)
    total = int(counts.sum())
    p = np.repeat(np.arange(n), counts)
    offsets = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
    q = p + 1 + offsets
    i, j = order[p], order[q]
    if ylo is not None:
        ylo = np.asarray(ylo, dtype=np.int64)
        yhi = np.asarray(yhi, dtype=np.int64)
        keep = (ylo[i] <= yhi[j]) & (ylo[j] <= yhi[i])
        i, j = i[keep], j[keep]
    return i, j


def _graph_from_arrays(n: int, i: np.ndarray, j: np.ndarray) -> Graph:
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in zip(i.tolist(), j.tolist()):
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj))


def _first_pair(i, j, mask) -> tuple[int, int]:
    k = int(np.flatnonzero(mask)[0])
    return int(i[k]), int(j[k])


# ---------------------------------------------------------------- graph builders


def overlap_graph(items: Sequence[Interval]) -> Graph:
    n = len(items)
    a = np.array([it.a for it in items], dtype=np.int64)
    b = np.array([it.b for it in items], dtype=np.int64)
    seen: dict[int, int] = {}
    for idx, it in enumerate(items):
        for v in (it.a, it.b):
            if v in seen:
                raise GeneralPositionError(f"intervals {seen[v]} and {idx} share endpoint {v}", [(seen[v], idx)])
            seen[v] = idx
    i, j = bbox_candidate_pairs(a, b)
    edge = ((a[i] < a[j]) & (a[j] < b[i]) & (b[i] < b[j])) | ((a[j] < a[i]) & (a[i] < b[j]) & (b[j] < b[i]))
    return _graph_from_arrays(n, i[edge], j[edge])


def grounded_intersection_graph(items: Sequence[GroundedLShape]) -> Graph:
    n = len(items)
    x = np.array([it.x for it in items], dtype=np.int64)
    d = np.array([it.depth for it in items], dtype=np.int64)
    r = np.array([it.right for it in items], dtype=np.int64)
    i, j = bbox_candidate_pairs(x, r)
    swap = x[i] > x[j]
    i, j = np.where(swap, j, i), np.where(swap, i, j)
    same = x[i] == x[j]
    if same.any():
        raise GeneralPositionError("grounded L-shapes share a basepoint", [_first_pair(i, j, same)])
    touch = ((x[j] == r[i]) & (d[j] >= d[i])) | ((x[j] < r[i]) & (d[j] == d[i]))
    if touch.any():
        raise GeneralPositionError("grounded L-shapes touch", [_first_pair(i, j, touch)])
    edge = (x[j] < r[i]) & (d[j] > d[i])
    return _graph_from_arrays(n, i[edge], j[edge])


def frames_intersection_graph(items: Sequence[Frame]) -> Graph:
    n = len(items)
    x1 = np.array([f.x1 for f in items], dtype=np.int64)
    y1 = np.array([f.y1 for f in items], dtype=np.int64)
    x2 = np.array([f.x2 for f in items], dtype=np.int64)
    y2 = np.array([f.y2 for f in items], dtype=np.int64)
    i, j = bbox_candidate_pairs(x1, x2, y1, y2)
    shared = (
        (x1[i] == x1[j]) | (x1[i] == x2[j]) | (x2[i] == x1[j]) | (x2[i] == x2[j])
        | (y1[i] == y1[j]) | (y1[i] == y2[j]) | (y2[i] == y1[j]) | (y2[i] == y2[j])
    )
    if shared.any():
        raise GeneralPositionError("frames share a coordinate", [_first_pair(i, j, shared)])
    in_ij = (x1[i] < x1[j]) & (x2[j] < x2[i]) & (y1[i] < y1[j]) & (y2[j] < y2[i])
    in_ji = (x1[j] < x1[i]) & (x2[i] < x2[j]) & (y1[j] < y1[i]) & (y2[i] < y2[j])
    edge = ~(in_ij | in_ji)
    return _graph_from_arrays(n, i[edge], j[edge])


def corner_lshapes_graph(items: Sequence[CornerLShape]) -> Graph:
    n = len(items)
    x = np.array([s.x for s in items], dtype=np.int64)
    y = np.array([s.y for s in items], dtype=np.int64)
    xr = x + np.array([s.width for s in items], dtype=np.int64)
    yt = y + np.array([s.height for s in items], dtype=np.int64)
    i, j = bbox_candidate_pairs(x, xr, y, yt)

    def cross(v, h):
        closed = (x[h] <= x[v]) & (x[v] <= xr[h]) & (y[v] <= y[h]) & (y[h] <= yt[v])
        strict = (x[h] < x[v]) & (x[v] < xr[h]) & (y[v] < y[h]) & (y[h] < yt[v])
        return closed, strict

    c1, s1 = cross(i, j)
    c2, s2 = cross(j, i)
    # candidates already overlap as boxes, so equal abscissae of verticals means collinear contact
    bad = (c1 & ~s1) | (c2 & ~s2) | (x[i] == x[j]) | (y[i] == y[j])
    if bad.any():
        raise GeneralPositionError("corner L-shapes touch or overlap", [_first_pair(i, j, bad)])
    edge = s1 | s2
    return _graph_from_arrays(n, i[edge], j[edge])


def strings_intersection_graph(items: Sequence[Polyline]) -> Graph:
    crossings = part_crossings([[p] for p in items], [[p] for p in items], same_side=True)
    return Graph.from_edges(len(items), {(c.a, c.b) for c in crossings})


def intersection_graph(items: Sequence[Shape]) -> Graph:
    if not items:
        return Graph.empty(0)
    kind = type(items[0])
    if any(type(it) is not kind for it in items):
        raise TypeError("intersection_graph needs a homogeneous family")
    builders = {
        Interval: overlap_graph,
        GroundedLShape: grounded_intersection_graph,
        Frame: frames_intersection_graph,
        CornerLShape: corner_lshapes_graph,
        Polyline: strings_intersection_graph,
    }
    return builders[kind](items)


# ---------------------------------------------------------------- representation maps


def _require_distinct_endpoints(items: Sequence[Interval]) -> None:
    seen: dict[int, int] = {}
    for idx, it in enumerate(items):
        for v in (it.a, it.b):
            if v in seen:
                raise GeneralPositionError(f"intervals {seen[v]} and {idx} share endpoint {v}", [(seen[v], idx)])
            seen[v] = idx


def right_endpoint_ranks(items: Sequence[Interval]) -> list[int]:
    """1-based rank of each interval's right endpoint in ascending order."""
    order = sorted(range(len(items)), key=lambda v: items[v].b)
    rank = [0] * len(items)
    for r, v in enumerate(order, start=1):
        rank[v] = r
    return rank


def to_grounded_lshapes(items: Sequence[Interval]) -> list[GroundedLShape]:
    _require_distinct_endpoints(items)
    rank = right_endpoint_ranks(items)
    return [GroundedLShape(it.a, rank[v], it.b - it.a) for v, it in enumerate(items)]


def containment_heights(items: Sequence[Interval]) -> list[int]:
    """Length of the longest containment chain whose largest member is each interval."""
    n = len(items)
    a = np.array([it.a for it in items], dtype=np.int64)
    b = np.array([it.b for it in items], dtype=np.int64)
    h = np.zeros(n, dtype=np.int64)
    for v in sorted(range(n), key=lambda v: items[v].b - items[v].a):
        inner = (a > a[v]) & (b < b[v])
        h[v] = 1 + (int(h[inner].max()) if inner.any() else 0)
    return h.tolist()


def to_frames(items: Sequence[Interval], normalized: bool = True) -> list[Frame]:
    """Interval [a, b] becomes the frame [a, b] x [-h, h] with h its containment height.

    Equal heights give shared y-coordinates; ``normalized`` resolves them by :func:`normalize`.
    """
    _require_distinct_endpoints(items)
    h = containment_heights(items)
    raw = [Frame(it.a, -hv, it.b, hv) for it, hv in zip(items, h)]
    return normalize(raw) if normalized else raw


def grounded_to_overlap(items: Sequence[GroundedLShape], line_x) -> list[Interval]:
    """Shape crossing the line x = line_x maps to [-(line_x - x), depth].

    A fractional line scales both coordinates by its denominator so endpoints stay integral.
    """
    q = Fraction(line_x)
    den = q.denominator
    out = []
    for idx, s in enumerate(items):
        if not s.x < q < s.right:
            raise ValueError(f"shape {idx} does not cross the line x = {line_x}")
        left = -(q - s.x) * den
        out.append(Interval(int(left), s.depth * den))
    return out


# ---------------------------------------------------------------- polyline crossings


@dataclass(frozen=True)
class Crossing:
    seg1: int
    t1: Fraction
    seg2: int
    t2: Fraction
    point: tuple[Fraction, Fraction]

    @property
    def pos1(self) -> Fraction:
        return self.seg1 + self.t1

    @property
    def pos2(self) -> Fraction:
        return self.seg2 + self.t2


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def _segment_contact(p0, p1, q0, q1):
    """Classify two closed segments: None, ('cross', t, u) with 0<t,u<1, or ('degenerate', reason)."""
    rx, ry = p1[0] - p0[0], p1[1] - p0[1]
    sx, sy = q1[0] - q0[0], q1[1] - q0[1]
    qpx, qpy = q0[0] - p0[0], q0[1] - p0[1]
    den = _cross(rx, ry, sx, sy)
    if den == 0:
        if _cross(qpx, qpy, rx, ry) != 0:
            return None
        rr = rx * rx + ry * ry
        t0 = qpx * rx + qpy * ry
        t1 = t0 + sx * rx + sy * ry
        if max(min(t0, t1), 0) <= min(max(t0, t1), rr):
            return ("degenerate", "collinear overlap")
        return None
    tn = _cross(qpx, qpy, sx, sy)
    un = _cross(qpx, qpy, rx, ry)
    if den < 0:
        den, tn, un = -den, -tn, -un
    if 0 < tn < den and 0 < un < den:
        return ("cross", Fraction(tn, den), Fraction(un, den))
    if 0 <= tn <= den and 0 <= un <= den:
        return ("degenerate", "contact at a segment endpoint")
    return None


def polyline_crossings(p1: Polyline, p2: Polyline, allow_endpoint_contact: bool = False) -> list[Crossing]:
    """All transversal crossings of p1 and p2 with exact parameters, sorted along p1.

    Touching at a segment endpoint or overlapping collinearly raises DegenerateCrossingError;
    with ``allow_endpoint_contact`` endpoint touches are skipped instead.
    """
    out = []
    for a, (u0, u1) in enumerate(p1.segments()):
        for b, (v0, v1) in enumerate(p2.segments()):
            res = _segment_contact(u0, u1, v0, v1)
            if res is None:
                continue
            if res[0] == "degenerate":
                if allow_endpoint_contact and res[1] != "collinear overlap":
                    continue
                raise DegenerateCrossingError(f"segments {a} and {b}: {res[1]}", (a, b))
            t, s = res[1], res[2]
            pt = (u0[0] + t * (u1[0] - u0[0]), u0[1] + t * (u1[1] - u0[1]))
            out.append(Crossing(a, t, b, s, pt))
    out.sort(key=lambda c: c.pos1)
    return out


@dataclass(frozen=True)
class PartCrossing:
    """A crossing of part ``slot_a`` of curve ``a`` with part ``slot_b`` of curve ``b``."""

    a: int
    slot_a: int
    pos_a: Fraction
    b: int
    slot_b: int
    pos_b: Fraction


@dataclass
class _SegTable:
    owner: np.ndarray
    slot: np.ndarray
    local: np.ndarray
    x0: np.ndarray
    y0: np.ndarray
    x1: np.ndarray
    y1: np.ndarray
    start: np.ndarray
    count: np.ndarray
    bbox: np.ndarray = field(default=None)


def _seg_table(curves: Sequence[Sequence[Polyline | None]]) -> _SegTable:
    owner, slot, local, x0, y0, x1, y1 = [], [], [], [], [], [], []
    start, count, bbox = [], [], []
    for c, parts in enumerate(curves):
        start.append(len(owner))
        xs, ys = [], []
        for s, part in enumerate(parts):
            if part is None:
                continue
            for k, (p, q) in enumerate(part.segments()):
                owner.append(c)
                slot.append(s)
                local.append(k)
                x0.append(p[0])
                y0.append(p[1])
                x1.append(q[0])
                y1.append(q[1])
            xs.extend(pt[0] for pt in part.points)
            ys.extend(pt[1] for pt in part.points)
        count.append(len(owner) - start[-1])
        bbox.append((min(xs), min(ys), max(xs), max(ys)) if xs else (1, 1, 0, 0))
    big = max((abs(v) for v in x0 + y0 + x1 + y1), default=0) >= 2**30
    dt = object if big else np.int64

    def arr(v, t=np.int64):
        return np.array(v, dtype=t) if v else np.zeros(0, dtype=t)

    return _SegTable(
        arr(owner), arr(slot), arr(local), arr(x0, dt), arr(y0, dt), arr(x1, dt), arr(y1, dt),
        arr(start), arr(count), np.array(bbox, dtype=np.int64).reshape(-1, 4),
    )


@dataclass(frozen=True)
class CrossingTable:
    """Column form of part crossings; the position on curve a is local_a + num_a / den, likewise for b."""

    a: np.ndarray
    slot_a: np.ndarray
    local_a: np.ndarray
    num_a: np.ndarray
    b: np.ndarray
    slot_b: np.ndarray
    local_b: np.ndarray
    num_b: np.ndarray
    den: np.ndarray

    def __len__(self) -> int:
        return len(self.a)

    def rows(self) -> list[PartCrossing]:
        out = []
        cols = [c.tolist() for c in (self.a, self.slot_a, self.local_a, self.num_a, self.b, self.slot_b, self.local_b, self.num_b, self.den)]
        for a, sa, la, na, b, sb, lb, nb, d in zip(*cols):
            d = int(d)
            out.append(PartCrossing(a, sa, la + Fraction(int(na), d), b, sb, lb + Fraction(int(nb), d)))
        return out


def _empty_table() -> CrossingTable:
    z = np.zeros(0, dtype=np.int64)
    return CrossingTable(z, z, z, z, z, z, z, z, z)


def part_crossings(
    side_a: Sequence[Sequence[Polyline | None]],
    side_b: Sequence[Sequence[Polyline | None]],
    ids_a: Sequence[int] | None = None,
    ids_b: Sequence[int] | None = None,
    same_side: bool = False,
) -> list[PartCrossing]:
    """Crossings between parts of curves on side a and parts of curves on side b.

    Curve pairs with equal ids are skipped. With ``same_side`` both sides are the same list
    and each unordered pair of distinct curves is reported once with a < b.
    Any non-transversal contact raises DegenerateCrossingError.
    """
    return crossing_table(side_a, side_b, ids_a, ids_b, same_side).rows()


def crossing_table(
    side_a: Sequence[Sequence[Polyline | None]],
    side_b: Sequence[Sequence[Polyline | None]],
    ids_a: Sequence[int] | None = None,
    ids_b: Sequence[int] | None = None,
    same_side: bool = False,
) -> CrossingTable:
    """Same as ``part_crossings`` but returns columns instead of records."""
    ta = _seg_table(side_a)
    tb = ta if same_side else _seg_table(side_b)
    na, nb = len(side_a), len(side_b)
    if ids_a is None:
        ids_a = range(na)
    if ids_b is None:
        ids_b = range(nb)
    id_a = np.array(list(ids_a), dtype=np.int64)
    id_b = np.array(list(ids_b), dtype=np.int64)
    if same_side:
        i, j = bbox_candidate_pairs(ta.bbox[:, 0], ta.bbox[:, 2], ta.bbox[:, 1], ta.bbox[:, 3])
        ca, cb = np.minimum(i, j), np.maximum(i, j)
    else:
        box = np.concatenate([ta.bbox, tb.bbox]) if na + nb else np.zeros((0, 4), dtype=np.int64)
        i, j = bbox_candidate_pairs(box[:, 0], box[:, 2], box[:, 1], box[:, 3])
        cross_sides = (i < na) != (j < na)
        i, j = i[cross_sides], j[cross_sides]
        ca = np.where(i < na, i, j)
        cb = np.where(i < na, j, i) - na
    keep = (id_a[ca] != id_b[cb]) & (ta.count[ca] > 0) & (tb.count[cb] > 0)
    ca, cb = ca[keep], cb[keep]
    if len(ca) == 0:
        return _empty_table()
    na_seg, nb_seg = ta.count[ca], tb.count[cb]
    block = na_seg * nb_seg
    total = int(block.sum())
    pair = np.repeat(np.arange(len(ca)), block)
    local = np.arange(total) - np.repeat(np.cumsum(block) - block, block)
    sa = ta.start[ca][pair] + local // nb_seg[pair]
    sb = tb.start[cb][pair] + local % nb_seg[pair]
    # segment boxes must meet
    ax0, ay0, ax1, ay1 = ta.x0[sa], ta.y0[sa], ta.x1[sa], ta.y1[sa]
    bx0, by0, bx1, by1 = tb.x0[sb], tb.y0[sb], tb.x1[sb], tb.y1[sb]
    meet = (
        (np.minimum(ax0, ax1) <= np.maximum(bx0, bx1)) & (np.minimum(bx0, bx1) <= np.maximum(ax0, ax1))
        & (np.minimum(ay0, ay1) <= np.maximum(by0, by1)) & (np.minimum(by0, by1) <= np.maximum(ay0, ay1))
    )
    sa, sb = sa[meet], sb[meet]
    ax0, ay0, ax1, ay1 = ax0[meet], ay0[meet], ax1[meet], ay1[meet]
    bx0, by0, bx1, by1 = bx0[meet], by0[meet], bx1[meet], by1[meet]
    rx, ry = ax1 - ax0, ay1 - ay0
    sx, sy = bx1 - bx0, by1 - by0
    qx, qy = bx0 - ax0, by0 - ay0
    den = rx * sy - ry * sx
    tn = qx * sy - qy * sx
    un = qx * ry - qy * rx
    neg = den < 0
    den = np.where(neg, -den, den)
    tn = np.where(neg, -tn, tn)
    un = np.where(neg, -un, un)
    par = den == 0
    colin = par & ((qx * ry - qy * rx) == 0)
    if colin.any():
        rr = rx * rx + ry * ry
        t0 = qx * rx + qy * ry
        t1 = t0 + sx * rx + sy * ry
        lo = np.maximum(np.minimum(t0, t1), 0)
        hi = np.minimum(np.maximum(t0, t1), rr)
        bad = colin & (lo <= hi)
        if bad.any():
            k = int(np.flatnonzero(bad)[0])
            raise DegenerateCrossingError(
                f"curves {int(ta.owner[sa[k]])} and {int(tb.owner[sb[k]])} overlap collinearly",
                (int(ta.owner[sa[k]]), int(tb.owner[sb[k]])),
            )
    nz = ~par
    closed = nz & (tn >= 0) & (tn <= den) & (un >= 0) & (un <= den)
    strict = nz & (tn > 0) & (tn < den) & (un > 0) & (un < den)
    touch = closed & ~strict
    if touch.any():
        k = int(np.flatnonzero(touch)[0])
        raise DegenerateCrossingError(
            f"curves {int(ta.owner[sa[k]])} and {int(tb.owner[sb[k]])} touch at a segment endpoint",
            (int(ta.owner[sa[k]]), int(tb.owner[sb[k]])),
        )
    idx = np.flatnonzero(strict)
    a_seg, b_seg = sa[idx], sb[idx]
    return CrossingTable(
        ta.owner[a_seg], ta.slot[a_seg], ta.local[a_seg], tn[idx],
        tb.owner[b_seg], tb.slot[b_seg], tb.local[b_seg], un[idx], den[idx],
    )


# ---------------------------------------------------------------- general position


@dataclass(frozen=True)
class GeneralPositionReport:
    ok: bool
    violations: tuple[tuple[tuple[int, int], str], ...] = ()


def _axes(item: Shape) -> list[list[int]]:
    """Coordinates of one shape grouped by axis; ties matter only within an axis."""
    if isinstance(item, Interval):
        return [[item.a, item.b]]
    if isinstance(item, GroundedLShape):
        return [[item.x, item.right], [item.depth]]
    if isinstance(item, CornerLShape):
        return [[item.x, item.x + item.width], [item.y, item.y + item.height]]
    if isinstance(item, Frame):
        return [[item.x1, item.x2], [item.y1, item.y2]]
    raise TypeError(f"no coordinate axes for {type(item).__name__}")


def check_general_position(items: Sequence[Shape]) -> GeneralPositionReport:
    """Shapes: no coordinate shared by two shapes on the same axis.
    Polylines: every contact between two polylines is a transversal crossing at a point no third one passes.
    """
    violations: list[tuple[tuple[int, int], str]] = []
    if items and isinstance(items[0], Polyline):
        by_point: dict[tuple, set[int]] = defaultdict(set)
        for a in range(len(items)):
            for b in range(a + 1, len(items)):
                try:
                    for c in polyline_crossings(items[a], items[b]):
                        by_point[c.point].update((a, b))
                except DegenerateCrossingError as exc:
                    violations.append(((a, b), str(exc)))
        for pt, who in by_point.items():
            if len(who) >= 3:
                w = sorted(who)
                violations.append(((w[0], w[1]), f"three or more curves through {pt}"))
        return GeneralPositionReport(not violations, tuple(violations))
    owners: dict[tuple[int, int], list[int]] = defaultdict(list)
    for idx, it in enumerate(items):
        for axis, vals in enumerate(_axes(it)):
            for v in vals:
                owners[(axis, v)].append(idx)
    for (axis, v), who in sorted(owners.items()):
        for p in range(len(who)):
            for q in range(p + 1, len(who)):
                if who[p] != who[q]:
                    violations.append(((who[p], who[q]), f"shared {'xy'[axis]}-coordinate {v}"))
    return GeneralPositionReport(not violations, tuple(violations))


def _interval_offsets(items: Sequence[Interval]) -> dict[tuple[int, int], int]:
    """Rank of each endpoint inside its group of equal values.

    A right endpoint precedes a left endpoint; of two left endpoints the longer interval comes
    first and of two right endpoints the longer one comes last; equal lengths go by input order.
    Shared endpoints therefore never create an overlap, and containment is kept.
    """
    groups: dict[int, list[tuple]] = defaultdict(list)
    for idx, it in enumerate(items):
        ln = it.b - it.a
        groups[it.a].append(((1, -ln, idx), (idx, 0)))
        groups[it.b].append(((0, ln, -idx), (idx, 1)))
    out = {}
    for members in groups.values():
        members.sort()
        for r, (_, who) in enumerate(members):
            out[who] = r
    return out


def normalize(items: Sequence[Shape]) -> list[Shape]:
    """Scale coordinates by 2n and offset tied values by their rank within the tie.

    Intervals rank ties as in :func:`_interval_offsets`. For the other shapes the earlier shape's
    coordinate becomes the smaller. Polylines are only scaled.
    """
    n = len(items)
    if n == 0:
        return []
    scale = 2 * n
    if isinstance(items[0], Polyline):
        return [Polyline(tuple((x * scale, y * scale) for x, y in p.points)) for p in items]
    if isinstance(items[0], Interval):
        off = _interval_offsets(items)
        return [Interval(it.a * scale + off[(idx, 0)], it.b * scale + off[(idx, 1)]) for idx, it in enumerate(items)]
    count: dict[tuple[int, int], set[int]] = defaultdict(set)
    for idx, it in enumerate(items):
        for axis, vals in enumerate(_axes(it)):
            for v in vals:
                count[(axis, v)].add(idx)

    def f(axis, v, idx):
        return v * scale + (idx if len(count[(axis, v)]) > 1 else 0)

    out: list[Shape] = []
    for idx, it in enumerate(items):
        if isinstance(it, GroundedLShape):
            x = f(0, it.x, idx)
            out.append(GroundedLShape(x, f(1, it.depth, idx), f(0, it.right, idx) - x))
        elif isinstance(it, CornerLShape):
            x, y = f(0, it.x, idx), f(1, it.y, idx)
            out.append(CornerLShape(x, y, f(1, it.y + it.height, idx) - y, f(0, it.x + it.width, idx) - x))
        elif isinstance(it, Frame):
            out.append(Frame(f(0, it.x1, idx), f(1, it.y1, idx), f(0, it.x2, idx), f(1, it.y2, idx)))
        else:
            raise TypeError(f"cannot normalize {type(it).__name__}")
    return out
