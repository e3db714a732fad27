import math
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from cfcolor.errors import WeakColoringError
from cfcolor.framework import k_cf_color_via_weak
from cfcolor.hypergraph import Coloring, Graph, Hypergraph, degeneracy_color, verify_k_cf, verify_k_weak
from cfcolor.instances import discrete_interval_hypergraph

from conftest import hypergraphs, naive_k_cf


def clique_expansion_colorer(sub, ids):
    """Proper coloring of the graph joining every two vertices that share a hyperedge."""
    pairs = [(e[i], e[j]) for e in sub.edges for i in range(len(e)) for j in range(i + 1, len(e))]
    return degeneracy_color(Graph.from_edges(sub.n, pairs))


def parity_colorer(sub, ids):
    return Coloring(tuple(i % 2 for i in range(sub.n)), 2)


def test_no_hyperedges_one_color():
    col = k_cf_color_via_weak(Hypergraph(5, ()), parity_colorer, 1)
    assert col.colors == (0,) * 5 and col.palette_size == 1


def test_discrete_interval_with_parity_colorer():
    h = discrete_interval_hypergraph(8)
    col = k_cf_color_via_weak(h, parity_colorer, 1)
    assert verify_k_cf(h, col, 1)
    # derived by replaying the rounds by hand: evens go first, then the survivors' evens, and so on
    assert col.colors == (0, 1, 0, 2, 0, 1, 0, 3)


def test_rejects_non_weak_colorer():
    with pytest.raises(WeakColoringError):
        k_cf_color_via_weak(Hypergraph(3, ((0, 1, 2),)), lambda sub, ids: Coloring((0,) * sub.n, 1), 1)


def test_rejects_wrong_length():
    with pytest.raises(WeakColoringError):
        k_cf_color_via_weak(Hypergraph(3, ((0, 1),)), lambda sub, ids: Coloring((0,), 1), 1)


def test_colorer_receives_original_ids():
    seen = []

    def colorer(sub, ids):
        seen.append(tuple(ids))
        return parity_colorer(sub, ids)

    k_cf_color_via_weak(discrete_interval_hypergraph(4), colorer, 1)
    assert seen[0] == (0, 1, 2, 3) and seen[1] == (1, 3)


def test_empty_and_bad_k():
    assert k_cf_color_via_weak(Hypergraph(0, ()), parity_colorer, 1).palette_size == 0
    with pytest.raises(ValueError):
        k_cf_color_via_weak(Hypergraph(1, ()), parity_colorer, 0)


@given(hypergraphs(max_n=14, max_m=14), st.integers(1, 3))
def test_output_is_k_cf(h, k):
    col = k_cf_color_via_weak(h, clique_expansion_colorer, k)
    assert naive_k_cf(h.n, h.edges, col.colors, k)


@given(hypergraphs(max_n=14, max_m=14), st.integers(1, 3))
def test_max_color_appears_at_most_k_times(h, k):
    col = k_cf_color_via_weak(h, clique_expansion_colorer, k)
    for e in h.edges:
        top = max(col.colors[v] for v in e)
        assert Counter(col.colors[v] for v in e)[top] <= k


@given(hypergraphs(max_n=14, max_m=14, min_n=1))
def test_round_count_bound(h):
    widths = []

    def colorer(sub, ids):
        c = clique_expansion_colorer(sub, ids)
        widths.append(c.palette_size)
        return c

    col = k_cf_color_via_weak(h, colorer, 1)
    t = max(widths, default=1)
    if t >= 2:
        assert col.palette_size <= math.ceil(math.log(h.n) / math.log(t / (t - 1))) + 1
        assert col.palette_size <= t * math.log(h.n) + 1


@given(hypergraphs(max_n=12, max_m=10))
def test_classes_are_weak_classes_of_their_round(h):
    rounds = []

    def colorer(sub, ids):
        c = clique_expansion_colorer(sub, ids)
        rounds.append((sub, c))
        assert verify_k_weak(sub, c, 2)
        return c

    k_cf_color_via_weak(h, colorer, 1)
    for sub, c in rounds:
        top = Counter(c.colors).most_common()
        assert top[0][1] >= sub.n / max(c.palette_size, 1)
