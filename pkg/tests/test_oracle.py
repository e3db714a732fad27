import pytest
from hypothesis import given, settings, strategies as st

from cfcolor.errors import SearchCapExceeded
from cfcolor.geometry import frames_intersection_graph
from cfcolor.hypergraph import Hypergraph, neighborhood_hypergraph
from cfcolor.instances import (
    complete_graph,
    discrete_interval_hypergraph,
    gen_frames_clique_gadget,
    gen_gbonc,
    gen_interval_filaments,
)
from cfcolor.oracle import ExceedsLimit, exact_k_cf_chromatic, k_cf_colorable, naive_k_cf_chromatic

from conftest import hypergraphs, naive_k_cf


def test_discrete_interval_seven():
    h = discrete_interval_hypergraph(7)
    assert exact_k_cf_chromatic(h) == naive_k_cf_chromatic(h) == 3


def test_single_pair():
    assert exact_k_cf_chromatic(Hypergraph(2, ((0,), (1,)))) == 1
    assert exact_k_cf_chromatic(Hypergraph(2, ((0, 1),))) == 2
    assert exact_k_cf_chromatic(Hypergraph(2, ((0, 1),)), k=2) == 1


def test_empty():
    assert exact_k_cf_chromatic(Hypergraph(0, ())) == 0
    assert k_cf_colorable(Hypergraph(0, ()), 1, 0) == ()


def test_witness_is_valid():
    h = discrete_interval_hypergraph(9)
    col = k_cf_colorable(h, 1, 4)
    assert col is not None and naive_k_cf(h.n, h.edges, col, 1)
    assert k_cf_colorable(h, 1, 3) is None


@pytest.mark.parametrize("m,expected", [(2, 3), (3, 3)])
def test_frame_gadget(m, expected):
    # m = 2 is a triangle; both values agree with the exhaustive enumerator
    h = neighborhood_hypergraph(frames_intersection_graph(gen_frames_clique_gadget(m)))
    assert exact_k_cf_chromatic(h) == naive_k_cf_chromatic(h) == expected


def test_filaments_three_one():
    h = gen_interval_filaments(3, 1).hypergraph
    assert exact_k_cf_chromatic(h) == naive_k_cf_chromatic(h) == 3


@pytest.mark.parametrize("t,k,expected", [(4, 2, 2), (5, 2, 3), (5, 3, 2)])
def test_gbonc(t, k, expected):
    h = gen_gbonc(complete_graph(t), k)
    assert exact_k_cf_chromatic(h, k) == expected
    witness = k_cf_colorable(h, k, expected)
    assert naive_k_cf(h.n, h.edges, witness, k)
    # no coloring with one color fewer, by plain enumeration
    with pytest.raises(SearchCapExceeded):
        naive_k_cf_chromatic(h, k, max_colors=expected - 1)


@settings(max_examples=80)
@given(hypergraphs(max_n=6, max_m=8), st.integers(1, 3))
def test_agrees_with_enumeration(h, k):
    assert exact_k_cf_chromatic(h, k) == naive_k_cf_chromatic(h, k)


@given(hypergraphs(max_n=7, max_m=8))
def test_monotone_in_k(h):
    vals = [exact_k_cf_chromatic(h, k) for k in (1, 2, 3)]
    assert vals[0] >= vals[1] >= vals[2]


def test_limit():
    h = discrete_interval_hypergraph(7)
    assert exact_k_cf_chromatic(h, limit=2) == ExceedsLimit(2)
    assert exact_k_cf_chromatic(h, limit=3) == 3


def test_node_cap():
    with pytest.raises(SearchCapExceeded):
        exact_k_cf_chromatic(discrete_interval_hypergraph(30), node_cap=100)


def test_bad_k():
    with pytest.raises(ValueError):
        exact_k_cf_chromatic(Hypergraph(1, ()), 0)
