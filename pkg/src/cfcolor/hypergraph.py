"""Hypergraphs, graphs, colorings, and the validity checks everything else is judged by."""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence


@dataclass(frozen=True)
class Hypergraph:
    """Vertices are ``0..n-1``; every hyperedge is a strictly ascending tuple of ids."""

    n: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        edges = tuple(tuple(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 0:
            raise ValueError("negative vertex count")
        for idx, e in enumerate(edges):
            if not e:
                raise ValueError(f"hyperedge {idx} is empty")
            if e[0] < 0 or e[-1] >= self.n:
                raise ValueError(f"hyperedge {idx} has an id outside 0..{self.n - 1}")
            for a, b in zip(e, e[1:]):
                if a >= b:
                    raise ValueError(f"hyperedge {idx} is not strictly ascending")

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> Hypergraph:
        return cls(n, tuple(tuple(sorted(set(s))) for s in sets))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def incidence(self) -> list[list[int]]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for idx, e in enumerate(self.edges):
            for v in e:
                inc[v].append(idx)
        return inc


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph stored as a tuple of neighbor sets."""

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        adj = tuple(frozenset(a) for a in self.adj)
        object.__setattr__(self, "adj", adj)
        if len(adj) != self.n:
            raise ValueError("adjacency length differs from vertex count")
        for v, nbrs in enumerate(adj):
            if v in nbrs:
                raise ValueError(f"self-loop at {v}")
            for u in nbrs:
                if not 0 <= u < self.n or v not in adj[u]:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(a) for a in adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, tuple(frozenset() for _ in range(n)))

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def induced(self, keep: Sequence[int]) -> Graph:
        ids = sorted(set(keep))
        pos = {v: i for i, v in enumerate(ids)}
        return Graph(len(ids), tuple(frozenset(pos[u] for u in self.adj[v] if u in pos) for v in ids))


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    palette_size: int

    def __post_init__(self):
        colors = tuple(int(c) for c in self.colors)
        object.__setattr__(self, "colors", colors)
        for v, c in enumerate(colors):
            if not 0 <= c < self.palette_size:
                raise ValueError(f"color {c} of vertex {v} outside palette of size {self.palette_size}")

    @classmethod
    def from_labels(cls, labels: Sequence[Hashable], reserved: Hashable = None) -> Coloring:
        """Relabel arbitrary hashable color labels to ``0..p-1`` by first appearance.

        ``reserved``, when it occurs, is pinned to color 0.
        """
        ids: dict[Hashable, int] = {}
        if reserved is not None and reserved in labels:
            ids[reserved] = 0
        out = []
        for lab in labels:
            if lab not in ids:
                ids[lab] = len(ids)
            out.append(ids[lab])
        return cls(tuple(out), len(ids))

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def num_used(self) -> int:
        return len(set(self.colors))

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, []).append(v)
        return out


def _color_seq(c) -> Sequence[int]:
    return c.colors if isinstance(c, Coloring) else c


def neighborhood_hypergraph(g: Graph) -> Hypergraph:
    """One hyperedge per vertex with a non-empty punctured neighborhood, in vertex order."""
    return Hypergraph(g.n, tuple(tuple(sorted(a)) for a in g.adj if a))


def neighborhood_owners(g: Graph) -> list[int]:
    """Vertex that owns each hyperedge of :func:`neighborhood_hypergraph`."""
    return [v for v in range(g.n) if g.adj[v]]


def induced_subhypergraph(h: Hypergraph, keep: Iterable[int]) -> tuple[Hypergraph, tuple[int, ...]]:
    """Restrict ``h`` to ``keep``; returns the subhypergraph and ``ids`` with ``ids[new] == old``.

    Hyperedges whose restriction is empty are dropped.
    """
    ids = tuple(sorted(set(keep)))
    if ids and (ids[0] < 0 or ids[-1] >= h.n):
        raise ValueError("keep contains an id outside the vertex range")
    pos = [-1] * h.n
    for i, v in enumerate(ids):
        pos[v] = i
    edges = []
    for e in h.edges:
        r = tuple(pos[v] for v in e if pos[v] >= 0)
        if r:
            edges.append(r)
    return Hypergraph(len(ids), tuple(edges)), ids


def _check_length(h: Hypergraph, colors: Sequence[int]) -> None:
    if len(colors) != h.n:
        raise ValueError(f"coloring covers {len(colors)} vertices, hypergraph has {h.n}")


def first_k_cf_violation(h: Hypergraph, c, k: int = 1) -> int | None:
    """Index of the first hyperedge with no color of multiplicity in ``[1, k]``, else None."""
    colors = _color_seq(c)
    _check_length(h, colors)
    if k < 1:
        raise ValueError("k must be positive")
    for idx, e in enumerate(h.edges):
        if len(e) <= k:
            continue
        counts = Counter(colors[v] for v in e)
        if min(counts.values()) > k:
            return idx
    return None


def verify_k_cf(h: Hypergraph, c, k: int = 1) -> bool:
    return first_k_cf_violation(h, c, k) is None


def first_weak_violation(h: Hypergraph, c, k: int) -> int | None:
    """Index of the first monochromatic hyperedge of size >= k, else None."""
    colors = _color_seq(c)
    _check_length(h, colors)
    for idx, e in enumerate(h.edges):
        if len(e) >= k and len(e) >= 2:
            c0 = colors[e[0]]
            if all(colors[v] == c0 for v in e):
                return idx
    return None


def verify_k_weak(h: Hypergraph, c, k: int) -> bool:
    return first_weak_violation(h, c, k) is None


def is_proper(g: Graph, c) -> bool:
    colors = _color_seq(c)
    return all(colors[u] != colors[v] for u in range(g.n) for v in g.adj[u])


def max_degree(h: Hypergraph) -> int:
    return max(h.degrees(), default=0)


def degeneracy_ordering(g: Graph) -> tuple[list[int], list[int]]:
    """Repeatedly remove a minimum-degree vertex (smallest id on ties).

    Returns the removal order and each removed vertex's degree at removal time.
    """
    deg = [len(a) for a in g.adj]
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order: list[int] = []
    at_removal: list[int] = []
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        at_removal.append(d)
        for u in g.adj[v]:
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return order, at_removal


def degeneracy(g: Graph) -> int:
    return max(degeneracy_ordering(g)[1], default=0)


def degeneracy_color(g: Graph) -> Coloring:
    """Greedy coloring in reverse degeneracy order; uses at most degeneracy(g) + 1 colors."""
    order, _ = degeneracy_ordering(g)
    colors = [-1] * g.n
    for v in reversed(order):
        taken = {colors[u] for u in g.adj[v]}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return Coloring(tuple(colors), max(colors, default=-1) + 1)
