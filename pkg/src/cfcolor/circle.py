"""CF coloring of interval overlap graphs (circle graphs) through BFS distance layers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvariantBreach
from .framework import k_cf_color_via_weak
from .geometry import GroundedLShape, Interval, overlap_graph, to_grounded_lshapes
from .hypergraph import Coloring, Graph, Hypergraph, degeneracy_color, degeneracy_ordering

AUX_DEGENERACY_CAP = 15
G3_DEGREE_CAP = 4


@dataclass(frozen=True)
class LayerPartition:
    root: int
    layers: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LayerAuxGraph:
    ids: tuple[int, ...]
    g1: frozenset[tuple[int, int]]
    g2: frozenset[tuple[int, int]]
    g3: frozenset[tuple[int, int]]

    @property
    def n(self) -> int:
        return len(self.ids)

    def union(self) -> Graph:
        """Union graph on local indices 0..n-1 (positions in ``ids``)."""
        adj: list[set[int]] = [set() for _ in self.ids]
        for u, v in self.g1 | self.g2 | self.g3:
            adj[u].add(v)
            adj[v].add(u)
        return Graph(len(self.ids), tuple(frozenset(a) for a in adj))


@dataclass
class CircleStats:
    aux_palettes: list[int] = field(default_factory=list)
    max_aux_degeneracy: int = 0
    max_g3_degree: int = 0
    planarity_checks: int = 0
    layer_palettes: list[int] = field(default_factory=list)
    components: int = 0
    x_recolored: int = 0


def distance_layers(items: Sequence[Interval], graph: Graph | None = None) -> list[LayerPartition]:
    """BFS layers of every component, rooted at its interval with the leftmost left endpoint."""
    g = overlap_graph(items) if graph is None else graph
    seen = [False] * len(items)
    out = []
    for root in sorted(range(len(items)), key=lambda v: items[v].a):
        if seen[root]:
            continue
        seen[root] = True
        layers = [[root]]
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                for u in g.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        nxt.append(u)
            if nxt:
                layers.append(nxt)
            frontier = nxt
        out.append(LayerPartition(root, tuple(tuple(sorted(layer)) for layer in layers)))
    return out


@dataclass(frozen=True)
class _LayerNeighbors:
    """Per member of S_i: neighbors in S_(i-1) ordered along its vertical part and along its horizontal part."""

    left: dict[int, tuple[int, ...]]
    right: dict[int, tuple[int, ...]]


def _layer_neighbors(prev: Sequence[int], cur: Sequence[int], graph: Graph, images: Sequence[GroundedLShape]) -> _LayerNeighbors:
    in_prev = set(prev)
    left, right = {}, {}
    for j in cur:
        sj = images[j]
        lft, rgt = [], []
        for w in graph.adj[j]:
            if w not in in_prev:
                continue
            sw = images[w]
            if sw.x < sj.x < sw.right and sj.depth > sw.depth:
                lft.append(w)
            elif sj.x < sw.x < sj.right and sw.depth > sj.depth:
                rgt.append(w)
            else:
                raise InvariantBreach(f"images of overlapping intervals {w} and {j} do not cross")
        lft.sort(key=lambda w: images[w].depth)
        rgt.sort(key=lambda w: images[w].x)
        left[j], right[j] = tuple(lft), tuple(rgt)
    return _LayerNeighbors(left, right)


def build_layer_aux_graph(
    K: Sequence[int],
    cur: Sequence[int],
    images: Sequence[GroundedLShape],
    graph: Graph | None = None,
    prev: Sequence[int] | None = None,
    nbrs: _LayerNeighbors | None = None,
) -> LayerAuxGraph:
    """G1, G2 and G3 on the surviving subset K of S_(i-1), fed by the layer S_i.

    Consecutiveness along the vertical (resp. horizontal) part of an S_i image counts only
    the horizontal (resp. vertical) parts of K images.
    """
    if nbrs is None:
        if graph is None:
            raise ValueError("need the overlap graph or precomputed neighbor lists")
        nbrs = _layer_neighbors(prev if prev is not None else K, cur, graph, images)
    ids = tuple(sorted(K))
    pos = {v: i for i, v in enumerate(ids)}
    g1, g2, g3 = set(), set(), set()
    for j in cur:
        lft = [pos[w] for w in nbrs.left[j] if w in pos]
        rgt = [pos[w] for w in nbrs.right[j] if w in pos]
        for u, v in zip(lft, lft[1:]):
            g1.add((min(u, v), max(u, v)))
        for u, v in zip(rgt, rgt[1:]):
            g2.add((min(u, v), max(u, v)))
        if len(lft) == 1 and len(rgt) == 1:
            u, v = lft[0], rgt[0]
            g3.add((min(u, v), max(u, v)))
    return LayerAuxGraph(ids, frozenset(g1), frozenset(g2), frozenset(g3))


def _planar_edge_cap(v: int) -> int:
    return 3 * v - 6 if v >= 3 else v * (v - 1) // 2


def check_aux_graph(aux: LayerAuxGraph) -> tuple[int, int]:
    """Assert the edge-count and degree bounds; returns (max G3 degree, degeneracy of the union)."""
    for name, part in (("G1", aux.g1), ("G2", aux.g2)):
        touched = {u for e in part for u in e}
        if len(part) > _planar_edge_cap(len(touched)):
            raise InvariantBreach(f"{name} has {len(part)} edges on {len(touched)} vertices")
    deg3: dict[int, int] = {}
    for u, v in aux.g3:
        deg3[u] = deg3.get(u, 0) + 1
        deg3[v] = deg3.get(v, 0) + 1
    max3 = max(deg3.values(), default=0)
    if max3 > G3_DEGREE_CAP:
        raise InvariantBreach(f"G3 has a vertex of degree {max3}")
    _, at_removal = degeneracy_ordering(aux.union())
    dgn = max(at_removal, default=0)
    if dgn > AUX_DEGENERACY_CAP:
        raise InvariantBreach(f"auxiliary graph has degeneracy {dgn}")
    return max3, dgn


def layer_hypergraph(prev: Sequence[int], cur: Sequence[int], graph: Graph) -> Hypergraph:
    """Vertices are positions in sorted ``prev``; one hyperedge per member of ``cur``."""
    ids = sorted(prev)
    pos = {v: i for i, v in enumerate(ids)}
    edges = []
    for j in cur:
        e = sorted(pos[w] for w in graph.adj[j] if w in pos)
        if e:
            edges.append(tuple(e))
    return Hypergraph(len(ids), tuple(edges))


def layer_feed_cf_coloring(
    items: Sequence[Interval],
    prev: Sequence[int],
    cur: Sequence[int],
    graph: Graph | None = None,
    images: Sequence[GroundedLShape] | None = None,
    stats: CircleStats | None = None,
) -> Coloring:
    """CF coloring of S_(i-1) (indexed by sorted position) so every member of S_i sees a unique color."""
    g = overlap_graph(items) if graph is None else graph
    imgs = to_grounded_lshapes(items) if images is None else images
    ids = sorted(prev)
    h = layer_hypergraph(ids, cur, g)
    nbrs = _layer_neighbors(ids, cur, g, imgs)

    def colorer(sub, local_ids):
        K = [ids[i] for i in local_ids]
        aux = build_layer_aux_graph(K, cur, imgs, nbrs=nbrs)
        max3, dgn = check_aux_graph(aux)
        col = degeneracy_color(aux.union())
        palette = col.palette_size
        if stats is not None:
            stats.aux_palettes.append(palette)
            stats.max_aux_degeneracy = max(stats.max_aux_degeneracy, dgn)
            stats.max_g3_degree = max(stats.max_g3_degree, max3)
            stats.planarity_checks += 2
        return Coloring(col.colors, max(palette, 1))

    return k_cf_color_via_weak(h, colorer, k=1)


def _has_unique(colors, nbrs) -> bool:
    seen: dict = {}
    for u in nbrs:
        seen[colors[u]] = seen.get(colors[u], 0) + 1
    return any(c == 1 for c in seen.values())


def cf_color_circle_graph(items: Sequence[Interval], stats: CircleStats | None = None) -> Coloring:
    """CF coloring of the overlap graph using three cyclic palette blocks plus one shared extra color."""
    n = len(items)
    if n == 0:
        return Coloring((), 0)
    g = overlap_graph(items)
    imgs = to_grounded_lshapes(items)
    labels: list = [None] * n
    st = stats if stats is not None else CircleStats()
    parts = distance_layers(items, g)
    st.components += len(parts)
    for part in parts:
        layers = part.layers
        s = len(layers) - 1
        for i in range(1, s + 1):
            prev, cur = layers[i - 1], layers[i]
            col = layer_feed_cf_coloring(items, prev, cur, g, imgs, st)
            st.layer_palettes.append(col.palette_size)
            for p, v in enumerate(sorted(prev)):
                labels[v] = ((i - 1) % 3, col.colors[p])
        for v in layers[s]:
            labels[v] = (s % 3, 0)
        root = part.root
        nb = sorted(g.adj[root])
        if nb and not _has_unique(labels, nb):
            for w in nb:
                old = labels[w]
                labels[w] = ("x",)
                if all(_has_unique(labels, g.adj[u]) for u in set(g.adj[w]) | {root}):
                    st.x_recolored += 1
                    break
                labels[w] = old
            else:
                raise InvariantBreach(f"no neighbor of root {root} can take the extra color")
    return Coloring.from_labels(labels)
