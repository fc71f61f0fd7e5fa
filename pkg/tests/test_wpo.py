from itertools import product

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from simpair import (
    ALEPH0,
    CapExceeded,
    NotInSc,
    ShapeSeq,
    UpperSet,
    count_classes_in,
    fin,
    gcs_leq,
    min_class_size,
    min_size_upper_set,
    minimal_elements,
    parse_shape_literal,
    shape_leq,
    upper_set,
)
from simpair.construct import build_shape_pair
from conftest import coarse_class_shapes, nested_pairs
from corpus import HALVES, REFINED, SPLIT, UNEVEN

LIT = parse_shape_literal


def test_minimal_elements_examples():
    shapes = [LIT("<2,1|0;0>"), LIT("<2,2|0;0>"), LIT("<3,1|0;0>")]
    assert minimal_elements(shapes) == (LIT("<2,1|0;0>"),)
    incomparable = [LIT("<2|0;0>"), LIT("<1,1|0;0>")]
    assert set(minimal_elements(incomparable)) == set(incomparable)
    assert minimal_elements([]) == ()
    with pytest.raises(NotInSc):
        minimal_elements([LIT("<1,2|0;0>")])


def test_upper_set_canonicalizes_and_validates():
    w = upper_set([LIT("<2,1|0;0>"), LIT("<3,1|0;0>")])
    assert w.generators == (LIT("<2,1|0;0>"),)
    assert str(w) == "{<2,1|0;0>}"
    with pytest.raises(NotInSc):
        UpperSet((LIT("<2,1|0;0>"), LIT("<2,2|0;0>")))
    assert str(upper_set([LIT("<2|0;0>"), LIT("<1,1|0;0>")])) == "{<1,1|0;0>, <2|0;0>}"


def test_contains():
    w = upper_set([LIT("<1,1,1|0;0>")])
    assert w.contains(LIT("<1,1,1|0;0>"))
    assert w.contains(LIT("<2,2,1|0;0>"))
    assert not w.contains(LIT("<2,1|0;0>"))
    assert not upper_set([]).contains(LIT("<1|0;0>"))
    with pytest.raises(NotInSc):
        w.contains(LIT("<|1;0>"))


def test_count_classes_in():
    assert count_classes_in(REFINED, upper_set([LIT("<1|0;0>")])) == fin(2)
    assert count_classes_in(REFINED, upper_set([LIT("<1,1,1|0;0>")])) == fin(1)
    assert count_classes_in(REFINED, upper_set([])) == fin(0)


def _decreasing_tuples(m):
    """Independent enumeration: all weakly decreasing positive tuples
    summing to m, found by filtering the full product space."""
    found = set()
    for length in range(1, m + 1):
        for tup in product(range(1, m + 1), repeat=length):
            if sum(tup) == m and all(a >= b for a, b in zip(tup, tup[1:])):
                found.add(tup)
    return found


@pytest.mark.parametrize("m", range(1, 7))
def test_min_size_upper_set_matches_partition_enumeration(m):
    got = {
        tuple(v.value for v in g.prefix) for g in min_size_upper_set(m).generators
    }
    assert got == _decreasing_tuples(m)


def test_min_size_upper_set_small_values():
    assert min_size_upper_set(1).generators == (LIT("<1|0;0>"),)
    assert set(min_size_upper_set(2).generators) == {LIT("<2|0;0>"), LIT("<1,1|0;0>")}
    assert set(min_size_upper_set(3).generators) == {
        LIT("<3|0;0>"),
        LIT("<2,1|0;0>"),
        LIT("<1,1,1|0;0>"),
    }


def test_min_size_upper_set_infinite_threshold():
    gens = set(min_size_upper_set(ALEPH0).generators)
    assert gens == {LIT("<inf|0;0>"), LIT("<|1;1>")}


@given(coarse_class_shapes(), st.integers(1, 6))
def test_min_size_upper_set_agrees_with_min_class_size(s, m):
    assert min_size_upper_set(m).contains(s) == (min_class_size(s) >= fin(m))


@given(coarse_class_shapes())
def test_min_size_upper_set_infinite_agrees(s):
    assert min_size_upper_set(ALEPH0).contains(s) == (min_class_size(s) == ALEPH0)


@given(st.lists(coarse_class_shapes(), max_size=7))
def test_minimal_elements_idempotent_antichain_covering(shapes):
    mins = minimal_elements(shapes)
    assert minimal_elements(mins) == mins
    for a in mins:
        for b in mins:
            if a != b:
                assert not shape_leq(a, b)
    for s in shapes:
        assert any(shape_leq(m, s) for m in mins)
        assert s in mins or any(m != s and shape_leq(m, s) for m in mins)


def test_descending_chains_are_short_on_bounded_fragment():
    # fragment: finite shapes, prefix length <= 3, entries <= 2
    fragment = [
        ShapeSeq(tuple(fin(v) for v in p))
        for p in product(range(3), repeat=3)
        if sorted(p, reverse=True) == list(p) and any(p)
    ]
    longest = {}
    for s in sorted(fragment, key=lambda s: sum(v.value for v in s.prefix)):
        below = [
            longest[t] for t in fragment if t != s and shape_leq(t, s) and t in longest
        ]
        longest[s] = 1 + max(below, default=0)
    # a strict descent drops the entry total by at least one each step
    assert max(longest.values()) <= 6


def test_gcs_examples():
    assert gcs_leq(UNEVEN, HALVES)
    assert not gcs_leq(HALVES, UNEVEN)
    assert not gcs_leq(REFINED, SPLIT)
    assert gcs_leq(REFINED, REFINED)


def test_gcs_cap():
    with pytest.raises(CapExceeded):
        gcs_leq(REFINED, REFINED, max_distinct=1)


@given(nested_pairs(max_n=5), nested_pairs(max_n=5))
@settings(max_examples=60)
def test_gcs_restricted_sweep_equals_full_lattice_sweep(p1, p2):
    """The implementation only sweeps upper sets generated from shapes
    realized in the first pair; sweeping the whole lattice generated by
    both realized sets must agree."""
    from itertools import combinations

    from simpair import local_coarse_shape

    realized1 = [local_coarse_shape(p1, c) for c in range(p1.F.num_classes)]
    realized2 = [local_coarse_shape(p2, c) for c in range(p2.F.num_classes)]
    everything = sorted(set(realized1) | set(realized2), key=str)
    full = True
    for size in range(1, len(everything) + 1):
        for subset in combinations(everything, size):
            w = upper_set(subset)
            if count_classes_in(p1, w) > count_classes_in(p2, w):
                full = False
                break
        if not full:
            break
    assert gcs_leq(p1, p2) == full


@given(nested_pairs(), st.lists(coarse_class_shapes(), min_size=1, max_size=4))
def test_count_monotone_under_upper_set_inclusion(pair, shapes):
    w_small = upper_set(shapes[:1])
    w_big = upper_set(shapes)
    # every generator of the small set lies in the big one
    assert all(w_big.contains(g) for g in w_small.generators)
    assert count_classes_in(pair, w_small) <= count_classes_in(pair, w_big)


def test_cap_reachable_with_many_distinct_shapes():
    shapes = [
        ShapeSeq(tuple(fin(0) for _ in range(k)) + (fin(1),)) for k in range(21)
    ]
    pair = build_shape_pair(shapes)
    with pytest.raises(CapExceeded):
        gcs_leq(pair, pair)
