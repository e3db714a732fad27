"""Reduction from (k+1)-weak colorings to k-CF colorings by repeated largest-class removal."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import WeakColoringError
from .hypergraph import Coloring, Hypergraph, first_weak_violation, induced_subhypergraph

# colorer(sub, ids) -> coloring of sub; ids[new] == old vertex id in the original hypergraph
WeakColorer = Callable[[Hypergraph, Sequence[int]], Coloring]


@dataclass(frozen=True)
class RoundInfo:
    round: int
    alive: int
    aux_palette: int
    removed: int


def k_cf_color_via_weak(
    h: Hypergraph,
    colorer: WeakColorer,
    k: int = 1,
    on_round: Callable[[RoundInfo], None] | None = None,
) -> Coloring:
    """k-CF color ``h``; round r colors the largest class of a (k+1)-weak coloring of the alive part with r.

    When no alive hyperedge has more than k vertices, all alive vertices share one final round.
    """
    if k < 1:
        raise ValueError("k must be positive")
    colors = [-1] * h.n
    alive = list(range(h.n))
    rnd = 0
    while alive:
        sub, ids = induced_subhypergraph(h, alive)
        if all(len(e) <= k for e in sub.edges):
            for v in alive:
                colors[v] = rnd
            if on_round is not None:
                on_round(RoundInfo(rnd, len(alive), 1, len(alive)))
            rnd += 1
            break
        aux = colorer(sub, ids)
        aux_colors = aux.colors if isinstance(aux, Coloring) else tuple(aux)
        if len(aux_colors) != sub.n:
            raise WeakColoringError(f"colorer returned {len(aux_colors)} colors for {sub.n} vertices")
        bad = first_weak_violation(sub, aux_colors, k + 1)
        if bad is not None:
            edge = [ids[v] for v in sub.edges[bad]]
            raise WeakColoringError(f"round {rnd}: hyperedge {edge} is monochromatic")
        counts = Counter(aux_colors)
        top = max(counts.values())
        best = min(c for c, cnt in counts.items() if cnt == top)
        keep = []
        for i, c in enumerate(aux_colors):
            if c == best:
                colors[ids[i]] = rnd
            else:
                keep.append(ids[i])
        if on_round is not None:
            on_round(RoundInfo(rnd, len(alive), len(counts), len(alive) - len(keep)))
        alive = keep
        rnd += 1
    return Coloring(tuple(colors), rnd)
