"""Engine operations: pinned values, preconditions and the algebraic
invariants that tie the sum objects together, each checked against the
independent brute-force oracle on random small inputs."""

import pytest
from hypothesis import given, settings, strategies as st

from sumbounds import engine
from sumbounds.core import IntSequence, IntSet, dilate
from sumbounds.errors import EmptyCollectionError, IndexRangeError, OracleSizeError
from sumbounds.oracle import brute_force_oracle

small_sets = st.sets(st.integers(-12, 20), min_size=1, max_size=7).map(IntSet.of)
positive_sets = st.sets(st.integers(1, 20), min_size=1, max_size=7).map(IntSet.of)


@st.composite
def small_sequences(draw):
    vals = draw(st.sets(st.integers(1, 12), min_size=1, max_size=4))
    mults = draw(st.lists(st.integers(1, 3), min_size=len(vals),
                          max_size=len(vals)))
    return IntSequence.of(sorted(vals), mults)


def test_h_fold_examples():
    assert engine.h_fold_sumset(IntSet.of([0, 1]), 3).sums == (0, 1, 2, 3)
    assert engine.h_fold_sumset(IntSet.of([0, 1, 3]), 2).sums == (0, 1, 2, 3, 4, 6)
    assert engine.h_fold_sumset(IntSet.of([5]), 4).sums == (20,)
    with pytest.raises(IndexRangeError):
        engine.h_fold_sumset(IntSet.of([1, 2]), 0)


def test_restricted_examples():
    assert engine.restricted_h_fold_sumset(IntSet.of([0, 1, 3]), 2).sums == (1, 3, 4)
    assert engine.restricted_h_fold_sumset(IntSet.of([0, 1, 2, 3]), 2).sums \
        == (1, 2, 3, 4, 5)
    a = IntSet.of([2, 5, 9])
    assert engine.restricted_h_fold_sumset(a, 3).sums == (16,)
    with pytest.raises(EmptyCollectionError):
        engine.restricted_h_fold_sumset(a, 4)


def test_subset_sums_examples():
    assert engine.subset_sums(IntSet.of([1, 2, 3])).sums == (1, 2, 3, 4, 5, 6)
    assert engine.subset_sums(IntSet.of([1, 2, 4])).sums == tuple(range(1, 8))
    assert engine.subset_sums(IntSet.of([2, 4, 6])).sums == (2, 4, 6, 8, 10, 12)


def test_min_and_bounded_card_examples():
    a = IntSet.of([1, 2, 3])
    assert engine.subset_sums_min_card(a, 2).sums == (3, 4, 5, 6)
    assert engine.subset_sums_min_card(a, 1).sums == engine.subset_sums(a).sums
    assert engine.subset_sums_min_card(a, 3).sums == (6,)
    assert engine.subset_sums_bounded_card(a, 1).sums == (1, 2, 3, 4, 5)
    assert engine.subset_sums_bounded_card(a, 2).sums == (1, 2, 3)
    with pytest.raises(EmptyCollectionError):
        engine.subset_sums_min_card(a, 4)
    with pytest.raises(EmptyCollectionError):
        engine.subset_sums_bounded_card(a, 3)


def test_subsequence_examples():
    s = IntSequence.of([1, 2], [2, 1])
    assert engine.subsequence_sums(s).sums == (1, 2, 3, 4)
    assert engine.subsequence_sums_min_card(s, 2).sums == (2, 3, 4)
    assert engine.subsequence_sums_min_card(s, 1).sums == (1, 2, 3, 4)
    assert engine.subsequence_sums_min_card(s, 3).sums == (4,)
    assert engine.subsequence_sums(IntSequence.of([1], [3])).sums == (1, 2, 3)
    ones = IntSequence.of([1, 2, 3], [1, 1, 1])
    assert engine.subsequence_sums(ones).sums \
        == engine.subset_sums(IntSet.of([1, 2, 3])).sums


def test_total_sum():
    assert engine.total_sum(IntSet.of([1, 2, 3])) == 6
    assert engine.total_sum(IntSequence.of([1, 2], [2, 1])) == 4
    assert engine.total_sum(IntSet.of([0, 1, 3])) == 4


def test_oracle_guard():
    big = IntSet.of(range(1, 22))
    with pytest.raises(OracleSizeError):
        brute_force_oracle(big, "subset_sums")


def test_oracle_examples():
    assert brute_force_oracle(IntSet.of([1, 2, 4]), "subset_sums").sums \
        == tuple(range(1, 8))
    assert brute_force_oracle(IntSet.of([0, 1, 3]), "restricted", h=2).sums \
        == (1, 3, 4)
    s = IntSequence.of([1, 2], [2, 1])
    assert brute_force_oracle(s, "min_card", alpha=2).sums == (2, 3, 4)


@given(small_sets, st.data())
@settings(max_examples=150)
def test_oracle_equivalence_sets(a, data):
    h = data.draw(st.integers(1, len(a)))
    alpha = data.draw(st.integers(1, len(a)))
    assert engine.h_fold_sumset(a, h).sums \
        == brute_force_oracle(a, "h_fold", h=h).sums
    assert engine.restricted_h_fold_sumset(a, h).sums \
        == brute_force_oracle(a, "restricted", h=h).sums
    assert engine.subset_sums(a).sums == brute_force_oracle(a, "subset_sums").sums
    assert engine.subset_sums_min_card(a, alpha).sums \
        == brute_force_oracle(a, "min_card", alpha=alpha).sums
    if alpha < len(a):
        assert engine.subset_sums_bounded_card(a, alpha).sums \
            == brute_force_oracle(a, "bounded_card", alpha=alpha).sums


@given(small_sequences(), st.data())
@settings(max_examples=150)
def test_oracle_equivalence_sequences(s, data):
    alpha = data.draw(st.integers(1, s.size))
    assert engine.subsequence_sums(s).sums \
        == brute_force_oracle(s, "subset_sums").sums
    assert engine.subsequence_sums_min_card(s, alpha).sums \
        == brute_force_oracle(s, "min_card", alpha=alpha).sums
    if alpha < s.size:
        assert engine.subsequence_sums_bounded_card(s, alpha).sums \
            == brute_force_oracle(s, "bounded_card", alpha=alpha).sums


@given(small_sets, st.data())
def test_nesting_and_decomposition(a, data):
    h = data.draw(st.integers(1, len(a)))
    restricted = set(engine.restricted_h_fold_sumset(a, h).sums)
    assert restricted <= set(engine.h_fold_sumset(a, h).sums)
    union = set()
    for c in range(1, len(a) + 1):
        union |= set(engine.restricted_h_fold_sumset(a, c).sums)
    assert union == set(engine.subset_sums(a).sums)
    alpha = data.draw(st.integers(1, len(a)))
    union_alpha = set()
    for c in range(alpha, len(a) + 1):
        union_alpha |= set(engine.restricted_h_fold_sumset(a, c).sums)
    assert union_alpha == set(engine.subset_sums_min_card(a, alpha).sums)


@given(small_sets, st.integers(1, 5))
def test_dilation_equivariance(a, d):
    da = dilate(a, d)
    assert engine.subset_sums(da).sums \
        == tuple(d * x for x in engine.subset_sums(a).sums)
    assert engine.h_fold_sumset(da, 2).sums \
        == tuple(d * x for x in engine.h_fold_sumset(a, 2).sums)


@given(positive_sets)
def test_zero_absorption(a):
    with_zero = IntSet.of((0,) + a.elements)
    assert set(engine.subset_sums(with_zero).sums) \
        == set(engine.subset_sums(a).sums) | {0}


@given(positive_sets.filter(lambda a: len(a) >= 2), st.data())
def test_complement_identity(a, data):
    # S_alpha(A) = sigma(A) - (S_1^alpha(A) ∪ {0}) elementwise
    alpha = data.draw(st.integers(1, len(a) - 1))
    sigma = engine.total_sum(a)
    bounded = set(engine.subset_sums_bounded_card(a, alpha).sums) | {0}
    expect = {sigma - x for x in bounded}
    assert expect == set(engine.subset_sums_min_card(a, alpha).sums)
    # and the cardinality identity for 0 ∉ A / 0 ∈ A
    assert len(engine.subset_sums_min_card(a, alpha)) \
        == len(engine.subset_sums_bounded_card(a, alpha)) + 1
    z = IntSet.of((0,) + a.elements)
    assert len(engine.subset_sums_min_card(z, alpha)) \
        == len(engine.subset_sums_bounded_card(z, alpha))


@given(small_sets, st.data())
def test_minimum_size_floors(a, data):
    k = len(a)
    h = data.draw(st.integers(1, k))
    assert len(engine.h_fold_sumset(a, h)) >= h * k - h + 1
    assert len(engine.restricted_h_fold_sumset(a, h)) >= h * k - h * h + 1
    if a.min > 0:
        assert len(engine.subset_sums(a)) >= k * (k + 1) // 2


@given(small_sequences())
def test_sequence_floor_and_monotonicity(s):
    weighted = sum((i + 1) * r for i, r in enumerate(s.multiplicities))
    assert len(engine.subsequence_sums(s)) >= weighted
    sizes = [len(engine.subsequence_sums_min_card(s, al))
             for al in range(1, s.size + 1)]
    assert sizes == sorted(sizes, reverse=True)
