"""Instance checks, sweeps, determinism and the tightness construction."""

import pytest

from sumbounds.core import IntSequence, IntSet
from sumbounds.errors import IndexRangeError
from sumbounds.registry import Instance, TheoremId
from sumbounds.verifier import (ALL_APPLICABLE, check_instance,
                                conjecture1_tightness,
                                cross_theorem_consistency, verify_range)


def test_check_instance_examples():
    out = check_instance(TheoremId.SUBSET_FREIMAN_POS,
                         Instance(IntSet.of([1, 2, 4])))
    assert out.measured == 7 and out.bound == "4θ-1" and out.status == "PASS"
    out = check_instance(TheoremId.SUBSET_MIN_LEMMA_A,
                         Instance(IntSet.of([1, 2, 3, 4])))
    assert (out.measured, out.status, out.inverse_status) \
        == (10, "EQUALITY", "STRUCTURE_CONFIRMED")
    out = check_instance(TheoremId.SUBSET_MIN_LEMMA_A,
                         Instance(IntSet.of([1, 2, 3, 5])))
    assert out.measured == 11 and out.status == "PASS"


def test_check_instance_inapplicable():
    out = check_instance(TheoremId.SUBSET_FREIMAN_ZERO,
                         Instance(IntSet.of([0, 1, 2])))
    assert out.status == "INAPPLICABLE"
    assert out.measured is None and out.bound is None


def test_check_instance_computes_auxiliary():
    out = check_instance(TheoremId.LEV_HFOLD,
                         Instance(IntSet.of([0, 1, 2, 5]), h=2))
    # |1A| = 4, min(5, 2*2+1) = 5 -> bound 9; 2A = {0..7, 10} has 9 elements
    assert out.bound == "9" and out.measured == 9 and out.status == "EQUALITY"


def test_verify_range_lemma_witnesses():
    rep = verify_range(TheoremId.SUBSET_MIN_LEMMA_A, [4], 12)
    assert rep.counts["violation"] == 0
    assert rep.equality_witnesses == ["1,2,3,4"]
    assert rep.structure == {"confirmed": 1, "failed": 0,
                             "failed_witnesses": []}
    assert rep.cursor == "COMPLETE"


def test_verify_range_hfold_witnesses():
    rep = verify_range(TheoremId.NATHANSON_HFOLD, [3], 6, h_values=[2])
    assert rep.counts["violation"] == 0
    assert rep.equality_witnesses == ["0,1,2|h=2"]


def test_verify_range_conjecture_small():
    rep = verify_range(TheoremId.FREIMAN_LEV_CONJECTURE, [8], 18, jobs=2)
    assert rep.counts["violation"] == 0
    assert rep.counts["pass"] + rep.counts["equality"] > 0


def test_verify_range_determinism_across_jobs():
    kwargs = dict(max_elem=10, mult_max=2, alpha_policy=ALL_APPLICABLE)
    one = verify_range(TheoremId.BP_SUBSEQ_MIN, [3, 4], jobs=1, **kwargs)
    four = verify_range(TheoremId.BP_SUBSEQ_MIN, [3, 4], jobs=4, **kwargs)
    assert one.to_dict() == four.to_dict()


def test_verify_range_resume_cursor():
    full = verify_range(TheoremId.SUBSET_FREIMAN_POS, [3], 9)
    head = verify_range(TheoremId.SUBSET_FREIMAN_POS, [3], 9)
    cut = head.equality_witnesses[0] if head.equality_witnesses else "1,2,3"
    rest = verify_range(TheoremId.SUBSET_FREIMAN_POS, [3], 9, after=cut)
    total = sum(full.counts.values())
    assert sum(rest.counts.values()) < total


def test_verify_range_rejects_empty():
    with pytest.raises(IndexRangeError):
        verify_range(TheoremId.SUBSET_MIN_LEMMA_A, [], 12)


def test_alpha_policy_fixed_list():
    rep = verify_range(TheoremId.BP_SUBSET_MIN, [4], 8, alpha_policy=[2, 9])
    # alpha=9 exceeds every k=4 instance's range and counts inapplicable
    assert rep.counts["inapplicable"] > 0
    assert rep.counts["violation"] == 0


def test_conjecture1_tightness_examples():
    a, expected, measured = conjecture1_tightness(9, 20)
    assert a.elements == (0, 1, 2, 3, 4, 5, 6, 19, 20)
    assert expected == 20 and measured == 20
    _, expected, measured = conjecture1_tightness(9, 13)
    assert expected == 20 and measured == 20
    _, expected, measured = conjecture1_tightness(8, 12)
    assert expected == 17 and measured == 17
    with pytest.raises(IndexRangeError):
        conjecture1_tightness(5, 10)
    with pytest.raises(IndexRangeError):
        conjecture1_tightness(9, 7)


def test_cross_theorem_consistency_singleton():
    outs = cross_theorem_consistency(Instance(IntSet.of([1])))
    assert len(outs) == 28
    assert all(o.status == "INAPPLICABLE" for o in outs)


def test_cross_theorem_consistency_zero_set():
    outs = {o.theorem: o
            for o in cross_theorem_consistency(Instance(IntSet.of([0, 1, 3])))}
    o = outs[TheoremId.FREIMAN_2A_LOWER]
    assert o.measured == 6 and o.status == "EQUALITY"


def test_cross_set_and_sequence_agree_on_measured():
    a = Instance(IntSet.of([1, 2, 3]))
    s = Instance(IntSequence.of([1, 2, 3], [1, 1, 1]))
    set_out = {o.theorem: o for o in cross_theorem_consistency(a)}
    seq_out = {o.theorem: o for o in cross_theorem_consistency(s)}
    assert set_out[TheoremId.SUBSET_MIN_LEMMA_A].measured == 6
    assert seq_out[TheoremId.SUBSEQ_MIN_R1].measured == 6


def test_structure_checks_on_small_doubling():
    rep = verify_range(TheoremId.FREIMAN_3K4_STRUCTURE, [4, 5], 10)
    assert rep.structure["failed"] == 0
    assert rep.structure["confirmed"] > 0
