import math
from collections import defaultdict

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cfcolor.errors import ImproperClassesError, PartitionConditionError, PatternHypothesisError
from cfcolor.geometry import CornerLShape, Frame, Polyline, corner_lshapes_intersect, frames_intersect
from cfcolor.instances import random_bipartite_strings, random_corner_lshapes, random_frames
from cfcolor.patterns import (
    PartitionedCurve,
    PatternStats,
    cf_color_bounded_chromatic,
    compute_patterns,
    frame_curves,
    k_cf_color_frames,
    k_cf_color_lshapes,
    lshape_curves,
    pattern_weak_coloring,
    s_cf_color,
)

from conftest import naive_k_cf, naive_k_weak, naive_neighborhoods


def pair_patterns(fam):
    out = defaultdict(set)
    for f, c, p in zip(fam.rec_f.tolist(), fam.rec_c.tolist(), fam.rec_pattern.tolist()):
        out[f, c].add(fam.pattern_list[p])
    return out


def seg(*pts):
    return Polyline(tuple(pts))


# ---------------------------------------------------------------- pattern sets


def test_two_crossing_frames():
    fam = compute_patterns(*[frame_curves([Frame(0, 0, 10, 10), Frame(5, 5, 15, 15)])] * 2)
    # right side of 0 meets top of 1, top of 0 meets left of 1
    assert pair_patterns(fam)[0, 1] == {(2, 1), (3, 0)}
    assert fam.realized_l == 2


def test_disjoint_family_has_no_patterns():
    curves = frame_curves([Frame(0, 0, 1, 1), Frame(5, 5, 6, 6)])
    fam = compute_patterns(curves, curves)
    assert fam.m == 0 and fam.hypergraph().m == 0


@pytest.mark.parametrize("seed", range(5))
def test_frame_pairs_realize_two_or_four_patterns(seed):
    curves = frame_curves(random_frames(120, seed))
    for pats in pair_patterns(compute_patterns(curves, curves)).values():
        assert len(pats) in (2, 4)


@pytest.mark.parametrize("seed", range(5))
def test_lshape_pairs_realize_at_most_two_patterns(seed):
    curves = lshape_curves(random_corner_lshapes(120, seed))
    fam = compute_patterns(curves, curves)
    assert all(1 <= len(p) <= 2 for p in pair_patterns(fam).values())
    assert fam.m <= 2


@pytest.mark.parametrize("seed", range(4))
def test_family_hypergraph_is_the_neighborhood_hypergraph(seed):
    items = random_frames(80, seed)
    curves = frame_curves(items)
    fam = compute_patterns(curves, curves)
    adj, _ = naive_neighborhoods(len(items), lambda i, j: frames_intersect(items[i], items[j]))
    assert sorted(fam.hypergraph().edges) == sorted(tuple(sorted(a)) for a in adj if a)


def test_own_slots_crossing_rejected():
    bad = PartitionedCurve(0, (seg((0, 0), (4, 4)), seg((0, 4), (4, 0))))
    with pytest.raises(PartitionConditionError):
        compute_patterns([bad], [bad])


def test_same_slot_of_two_curves_rejected():
    a = PartitionedCurve(0, (seg((0, 0), (4, 4)),))
    b = PartitionedCurve(1, (seg((0, 4), (4, 0)),))
    with pytest.raises(PartitionConditionError):
        compute_patterns([a, b], [a, b])


def test_aliased_ids_rejected():
    a = PartitionedCurve(0, (seg((0, 0), (1, 0)), None))
    b = PartitionedCurve(0, (seg((0, 5), (1, 5)), None))
    with pytest.raises(PartitionConditionError):
        compute_patterns([a], [b])


def test_declared_l_too_large_rejected():
    curves = frame_curves([Frame(0, 0, 10, 10), Frame(5, 5, 15, 15)])
    with pytest.raises(PatternHypothesisError):
        compute_patterns(curves, curves, l=3, s=4)


# ---------------------------------------------------------------- weak colorings of G(K)


def test_weak_coloring_without_patterns():
    curves = frame_curves([Frame(0, 0, 1, 1), Frame(5, 5, 6, 6)])
    fam = compute_patterns(curves, curves)
    assert pattern_weak_coloring(fam, [0, 1]).palette_size == 1


@pytest.mark.parametrize("seed", range(5))
def test_weak_coloring_is_s_plus_one_weak(seed):
    curves = frame_curves(random_frames(150, seed))
    fam = compute_patterns(curves, curves, l=2, s=4)
    rng = np.random.default_rng(seed)
    for K in (list(range(len(curves))), sorted(rng.choice(len(curves), 90, replace=False).tolist())):
        stats = PatternStats()
        col = pattern_weak_coloring(fam, K, stats)
        pos = {v: i for i, v in enumerate(K)}
        edges = [tuple(pos[v] for v in e if v in pos) for e in fam.hypergraph().edges]
        assert naive_k_weak(len(K), edges, col.colors, fam.s + 1)
        assert stats.nmc_failures == 0 and stats.planarity_breaches == 0


# ---------------------------------------------------------------- full colorings


@pytest.mark.parametrize("seed", range(4))
def test_lshapes_2cf(seed):
    items = random_corner_lshapes(200, seed)
    stats = PatternStats()
    col = k_cf_color_lshapes(items, stats)
    _, edges = naive_neighborhoods(len(items), lambda i, j: corner_lshapes_intersect(items[i], items[j]))
    assert naive_k_cf(len(items), edges, col.colors, 2)
    assert stats.nmc_failures == 0 and stats.planarity_breaches == 0
    assert max(stats.aux_palettes) <= 6 * 2


@pytest.mark.parametrize("seed", range(4))
def test_frames_4cf(seed):
    items = random_frames(200, seed)
    stats = PatternStats()
    col = k_cf_color_frames(items, stats)
    _, edges = naive_neighborhoods(len(items), lambda i, j: frames_intersect(items[i], items[j]))
    assert naive_k_cf(len(items), edges, col.colors, 4)
    assert stats.nmc_failures == 0 and stats.planarity_breaches == 0
    assert col.palette_size <= 6 * 4 * (math.log2(len(items)) + 1) * 2


@settings(max_examples=25)
@given(st.lists(st.tuples(st.integers(0, 40), st.integers(0, 40), st.integers(1, 30), st.integers(1, 30)), max_size=25))
def test_lshapes_2cf_small(raw):
    from cfcolor.geometry import normalize

    items = normalize([CornerLShape(x, y, h, w) for x, y, h, w in raw])
    col = k_cf_color_lshapes(items)
    _, edges = naive_neighborhoods(len(items), lambda i, j: corner_lshapes_intersect(items[i], items[j]))
    assert naive_k_cf(len(items), edges, col.colors, 2)


def test_empty_families():
    assert k_cf_color_frames([]).palette_size == 0
    assert k_cf_color_lshapes([]).palette_size == 0
    assert cf_color_bounded_chromatic([], []).palette_size == 0


def test_s_cf_color_with_empty_F():
    curves = frame_curves([Frame(0, 0, 1, 1)])
    fam = compute_patterns([], curves)
    assert s_cf_color(fam).palette_size == 0


# ---------------------------------------------------------------- bounded chromatic number strings


def test_single_class_strings_one_color():
    strings = [seg((0, 0), (5, 0)), seg((0, 3), (5, 3))]
    assert cf_color_bounded_chromatic(strings, [0, 0]).palette_size == 1


def test_improper_classes_rejected():
    strings = [seg((0, 0), (4, 4)), seg((0, 4), (4, 0))]
    with pytest.raises(ImproperClassesError):
        cf_color_bounded_chromatic(strings, [0, 0])


def test_class_count_must_match():
    with pytest.raises(ValueError):
        cf_color_bounded_chromatic([seg((0, 0), (1, 1))], [])


def crossing_pred(strings):
    from cfcolor.geometry import polyline_crossings

    return lambda i, j: bool(polyline_crossings(strings[i], strings[j]))


@pytest.mark.parametrize("seed", range(4))
def test_bipartite_strings_cf(seed):
    inst = random_bipartite_strings(80, seed)
    stats = PatternStats()
    col = cf_color_bounded_chromatic(inst.strings, inst.classes, stats)
    _, edges = naive_neighborhoods(len(inst.strings), crossing_pred(inst.strings))
    assert naive_k_cf(len(inst.strings), edges, col.colors, 1)
    assert stats.nmc_failures == 0


def test_classes_use_disjoint_palettes():
    inst = random_bipartite_strings(40, 3)
    col = cf_color_bounded_chromatic(inst.strings, inst.classes)
    by_class = defaultdict(set)
    for c, cls in zip(col.colors, inst.classes):
        by_class[cls].add(c)
    assert not (by_class[0] & by_class[1])
