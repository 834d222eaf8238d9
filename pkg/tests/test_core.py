"""Domain types, affine maps and the instance enumerators."""

import math

import pytest
from hypothesis import given, strategies as st

from sumbounds.core import (EnumKind, IntSequence, IntSet, ap_cover_length,
                            dilate, enumerate_sequences, enumerate_sets,
                            gcd_of, is_arithmetic_progression, m_index,
                            normal_form, translate)
from sumbounds.errors import (DegenerateInputError, IndexRangeError,
                              InvalidDilationError)

int_sets = st.sets(st.integers(-30, 30), min_size=1, max_size=8).map(IntSet.of)


def test_intset_rejects_duplicates_and_empty():
    with pytest.raises(DegenerateInputError):
        IntSet.of([1, 1, 2])
    with pytest.raises(DegenerateInputError):
        IntSet(())


def test_intsequence_validation():
    s = IntSequence.of([2, 1], [1, 3])
    assert s.values == (1, 2) and s.multiplicities == (3, 1)
    assert s.size == 4 and s.k == 2
    with pytest.raises(DegenerateInputError):
        IntSequence.of([1, 2], [1, 0])
    with pytest.raises(DegenerateInputError):
        IntSequence.of([1, 2], [1])


def test_literals_round_trip():
    a = IntSet.parse("0,1,3")
    assert a.elements == (0, 1, 3)
    assert IntSet.parse(a.literal()) == a
    s = IntSequence.parse("1,2,4", "2,1,3")
    assert s.literal() == "values=1,2,4;mult=2,1,3"


def test_gcd_of():
    assert gcd_of(IntSet.of([2, 4, 6])) == 2
    assert gcd_of(IntSet.of([0, 3, 5])) == 1
    assert gcd_of(IntSet.of([6, 10, 15])) == 1
    with pytest.raises(DegenerateInputError):
        gcd_of(IntSet.of([0]))


def test_normal_form():
    assert normal_form(IntSet.of([3, 5, 7])).elements == (0, 1, 2)
    assert normal_form(IntSet.of([0, 1, 3])).elements == (0, 1, 3)
    assert normal_form(IntSet.of([10, 16, 28])).elements == (0, 1, 3)
    with pytest.raises(DegenerateInputError):
        normal_form(IntSet.of([5]))


def test_dilate_translate():
    assert dilate(IntSet.of([1, 2, 3]), 2).elements == (2, 4, 6)
    assert translate(IntSet.of([0, 1, 3]), 5).elements == (5, 6, 8)
    assert dilate(IntSet.of([1, 3]), -1).elements == (-3, -1)
    with pytest.raises(InvalidDilationError):
        dilate(IntSet.of([1, 2]), 0)


@given(int_sets.filter(lambda a: len(a) >= 2))
def test_normal_form_idempotent(a):
    n = normal_form(a)
    assert normal_form(n) == n
    assert n.min == 0 and gcd_of(n) == 1 and len(n) == len(a)


@given(int_sets.filter(lambda a: len(a) >= 2),
       st.integers(1, 7), st.integers(-10, 10))
def test_normal_form_affine_invariant(a, d, t):
    assert normal_form(dilate(translate(a, t), d)) == normal_form(a)


def test_enumerate_sets_examples():
    assert [a.elements for a in enumerate_sets(2, 2, EnumKind.ZERO_GCD1)] \
        == [(0, 1)]
    assert [a.elements for a in enumerate_sets(3, 3, EnumKind.ZERO_GCD1)] \
        == [(0, 1, 2), (0, 1, 3), (0, 2, 3)]
    assert [a.elements for a in enumerate_sets(2, 3, EnumKind.POSITIVE_GCD1)] \
        == [(1, 2), (1, 3), (2, 3)]


@pytest.mark.parametrize("kind", list(EnumKind))
@pytest.mark.parametrize("k,max_elem", [(2, 8), (3, 9), (4, 10)])
def test_enumerate_sets_sorted_unique_gcd1(kind, k, max_elem):
    seen = [a.elements for a in enumerate_sets(k, max_elem, kind)]
    assert seen == sorted(set(seen))
    for e in seen:
        assert math.gcd(*[abs(x) for x in e]) == 1
        assert len(e) == k and e[-1] <= max_elem
        if kind is EnumKind.ZERO_GCD1:
            assert e[0] == 0
        else:
            assert e[0] > 0


def test_enumerate_sets_restartable():
    full = list(enumerate_sets(3, 8, EnumKind.POSITIVE_GCD1))
    cut = full[4].elements
    rest = list(enumerate_sets(3, 8, EnumKind.POSITIVE_GCD1, after=cut))
    assert rest == full[5:]


def test_enumerate_sequences_examples():
    out = list(enumerate_sequences(1, 1, 2, EnumKind.POSITIVE_GCD1))
    assert [(s.values, s.multiplicities) for s in out] \
        == [((1,), (1,)), ((1,), (2,))]
    out = list(enumerate_sequences(2, 2, 1, EnumKind.POSITIVE_GCD1))
    assert [(s.values, s.multiplicities) for s in out] == [((1, 2), (1, 1))]
    assert sum(1 for _ in enumerate_sequences(2, 3, 2, EnumKind.POSITIVE_GCD1)) \
        == 3 * 4


def test_m_index_examples():
    assert m_index((2, 3, 1), 4) == 2
    assert m_index((2, 3, 1), 1) == 1
    assert m_index((2, 3, 1), 5) == 3
    with pytest.raises(IndexRangeError):
        m_index((2, 3, 1), 6)
    with pytest.raises(IndexRangeError):
        m_index((2, 3, 1), 0)


@given(st.lists(st.integers(1, 5), min_size=1, max_size=6), st.data())
def test_m_index_matches_linear_scan(r, data):
    total = sum(r)
    if total < 2:
        return
    alpha = data.draw(st.integers(1, total - 1))
    m = m_index(r, alpha)
    acc = 0
    expect = None
    for i, ri in enumerate(r, start=1):
        if acc <= alpha < acc + ri:
            expect = i
            break
        acc += ri
    assert m == expect


def test_ap_cover_length_examples():
    assert ap_cover_length(IntSet.of([0, 1, 2, 4])) == 5
    assert ap_cover_length(IntSet.of([0, 2, 6])) == 4
    assert ap_cover_length(IntSet.of([0, 1])) == 2
    assert ap_cover_length(IntSet.of([7])) == 1


@given(int_sets.filter(lambda a: len(a) >= 2))
def test_ap_cover_at_least_size(a):
    cover = ap_cover_length(a)
    assert cover >= len(a)
    assert (cover == len(a)) == is_arithmetic_progression(a)
