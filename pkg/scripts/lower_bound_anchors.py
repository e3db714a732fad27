"""Exact k-CF chromatic numbers of the small extremal constructions, next to what the algorithms use on them.

    python3 scripts/lower_bound_anchors.py
"""

import sys

from cfcolor.circle import cf_color_circle_graph
from cfcolor.geometry import frames_intersection_graph, overlap_graph
from cfcolor.hypergraph import neighborhood_hypergraph
from cfcolor.instances import (
    complete_graph,
    gen_circle_lower_bound,
    gen_frames_clique_gadget,
    gen_gbonc,
    gen_interval_filaments,
)
from cfcolor.lll import k_cf_color_general
from cfcolor.oracle import exact_k_cf_chromatic
from cfcolor.patterns import k_cf_color_frames


def rows():
    for t in (1, 2, 3):
        items = gen_circle_lower_bound(t, 1)
        h = neighborhood_hypergraph(overlap_graph(items))
        yield f"lb-circle t={t} k=1", h.n, 1, exact_k_cf_chromatic(h), cf_color_circle_graph(items).palette_size
    for m in (2, 3, 4):
        items = gen_frames_clique_gadget(m)
        h = neighborhood_hypergraph(frames_intersection_graph(items))
        yield f"frames-gadget m={m}", h.n, 1, exact_k_cf_chromatic(h), None
        yield f"frames-gadget m={m}", h.n, 4, exact_k_cf_chromatic(h, 4), k_cf_color_frames(items).palette_size
    for t, k in ((4, 2), (5, 2), (5, 3)):
        h = gen_gbonc(complete_graph(t), k)
        yield f"gbonc t={t} k={k}", h.n, k, exact_k_cf_chromatic(h, k), k_cf_color_general(h, k, seed=0).palette_size
    h = gen_interval_filaments(3, 1).hypergraph
    yield "filaments t=3 k=1", h.n, 1, exact_k_cf_chromatic(h), None


def main():
    print(f"{'instance':22s} {'n':>4s} {'k':>2s} {'exact':>6s} {'algo':>5s}")
    for name, n, k, exact, algo in rows():
        print(f"{name:22s} {n:4d} {k:2d} {exact!s:>6s} {'-' if algo is None else algo:>5}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
