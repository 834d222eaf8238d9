"""Catalog of lower-bound statements on sum-set cardinalities.

Each entry pairs an applicability predicate with an exactly-evaluable
bound formula (golden-mean terms stay exact via ExactBound) and, where
one exists, an equality characterization.  Formulas are hand-encoded
per tag; the unit tests pin every closed-form value.

Index conventions.  Positive families are written a_1 < ... < a_k with
multiplicities r_1..r_k; zero-anchored families are 0 = a_0 < ... <
a_{k-1} with multiplicities r_0..r_{k-1}, and their minimum
multiplicity r deliberately excludes r_0 (extra copies of 0 never
enlarge a sum set).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence, Union

from .core import (EnumKind, IntSequence, IntSet, ap_cover_length, gcd_of,
                   is_arithmetic_progression, m_index)
from .errors import InapplicableError, MissingAuxiliaryError
from .exact import ExactBound

Subject = Union[IntSet, IntSequence]


class TheoremId(Enum):
    NATHANSON_HFOLD = "NATHANSON_HFOLD"
    NATHANSON_RESTRICTED = "NATHANSON_RESTRICTED"
    FREIMAN_3K4_STRUCTURE = "FREIMAN_3K4_STRUCTURE"
    FREIMAN_2A_LOWER = "FREIMAN_2A_LOWER"
    LEV_HFOLD = "LEV_HFOLD"
    FREIMAN_LEV_CONJECTURE = "FREIMAN_LEV_CONJECTURE"
    FLP_RESTRICTED = "FLP_RESTRICTED"
    LEV_RESTRICTED = "LEV_RESTRICTED"
    BP_SUBSET_MIN = "BP_SUBSET_MIN"
    BP_SUBSEQ_MIN = "BP_SUBSEQ_MIN"
    SUBSET_MIN_LEMMA_A = "SUBSET_MIN_LEMMA_A"
    SUBSET_FREIMAN_POS = "SUBSET_FREIMAN_POS"
    SUBSET_FREIMAN_ZERO = "SUBSET_FREIMAN_ZERO"
    SUBSEQ_MIN_R1 = "SUBSEQ_MIN_R1"
    SUBSEQ_MIN_R2 = "SUBSEQ_MIN_R2"
    SUBSEQ_FREIMAN_POS = "SUBSEQ_FREIMAN_POS"
    SUBSEQ_FREIMAN_R2 = "SUBSEQ_FREIMAN_R2"
    SUBSEQ_FREIMAN_ZERO = "SUBSEQ_FREIMAN_ZERO"
    ALPHA_SUBSET_POS = "ALPHA_SUBSET_POS"
    ALPHA_SUBSET_ZERO = "ALPHA_SUBSET_ZERO"
    ALPHA_SEQ_LAST = "ALPHA_SEQ_LAST"
    ALPHA_SEQ_R2_SMALL = "ALPHA_SEQ_R2_SMALL"
    ALPHA_SEQ_R2_LARGE = "ALPHA_SEQ_R2_LARGE"
    ALPHA_SEQ_R1_MAIN = "ALPHA_SEQ_R1_MAIN"
    ALPHA_SEQ_R1_SPECIAL = "ALPHA_SEQ_R1_SPECIAL"
    ALPHA_SEQ_ZERO_LAST = "ALPHA_SEQ_ZERO_LAST"
    ALPHA_SEQ_ZERO_R2 = "ALPHA_SEQ_ZERO_R2"
    ALPHA_SEQ_ZERO_R1 = "ALPHA_SEQ_ZERO_R1"


# Auxiliary-cardinality keys a bound formula may request.
AUX_HFOLD_PREV = "(h-1)A"
AUX_RFOLD_WITH_ZERO = "(r-1)(A∪{0})"
AUX_RFOLD = "(r-1)A"


@dataclass(frozen=True)
class Instance:
    subject: Subject
    alpha: Optional[int] = None
    h: Optional[int] = None
    auxiliary_cardinalities: Optional[Mapping[str, int]] = None

    def with_aux(self, aux: Mapping[str, int]) -> "Instance":
        return Instance(self.subject, self.alpha, self.h, dict(aux))


def _tri(n: int) -> int:
    return n * (n + 1) // 2


def _is_dilated_interval(vals: Sequence[int]) -> bool:
    """vals equals d*{1,...,k} for some positive integer d."""
    d = vals[0]
    return d >= 1 and all(v == d * (i + 1) for i, v in enumerate(vals))


def _aux(inst: Instance, key: str) -> int:
    aux = inst.auxiliary_cardinalities
    if not aux or key not in aux:
        raise MissingAuxiliaryError(f"bound needs auxiliary cardinality {key!r}")
    return aux[key]


# ------------------------------------------------ hypothesis primitives


def _want_set(inst: Instance) -> Optional[str]:
    if not isinstance(inst.subject, IntSet):
        return "integer set required"
    return None


def _want_seq(inst: Instance) -> Optional[str]:
    if not isinstance(inst.subject, IntSequence):
        return "integer sequence required"
    return None


def _values(inst: Instance) -> tuple[int, ...]:
    s = inst.subject
    return s.values if isinstance(s, IntSequence) else s.elements


def _positive(inst: Instance) -> Optional[str]:
    if _values(inst)[0] <= 0:
        return "positive elements required"
    return None


def _zero_anchored(inst: Instance) -> Optional[str]:
    if _values(inst)[0] != 0:
        return "smallest element 0 required"
    return None


def _gcd_one(inst: Instance) -> Optional[str]:
    vals = _values(inst)
    if vals == (0,):
        return "gcd 1 required"
    if gcd_of(IntSet(vals)) != 1:
        return "gcd 1 required"
    return None


def _k_at_least(inst: Instance, n: int) -> Optional[str]:
    if len(_values(inst)) < n:
        return f"k ≥ {n} required"
    return None


def _need_h(inst: Instance, lo: int, hi: Optional[int] = None) -> Optional[str]:
    if inst.h is None:
        return "h required"
    if inst.h < lo:
        return f"h ≥ {lo} required"
    if hi is not None and inst.h > hi:
        return f"h ≤ {hi} required"
    return None


def _need_alpha(inst: Instance, lo: int, hi: int,
                hi_text: Optional[str] = None) -> Optional[str]:
    if inst.alpha is None:
        return "α required"
    if inst.alpha < lo:
        return f"α ≥ {lo} required"
    if inst.alpha > hi:
        return hi_text or f"α ≤ {hi} required"
    return None


def _first(*reasons: Optional[str]) -> Optional[str]:
    for r in reasons:
        if r is not None:
            return r
    return None


# Per-sequence shorthand used throughout the formulas.


def _pos_stats(s: IntSequence) -> tuple[int, int, int]:
    """(k, total size S, weighted sum W = sum of i*r_i, 1-based)."""
    r = s.multiplicities
    return len(r), sum(r), sum((i + 1) * ri for i, ri in enumerate(r))


def _prefix(r: Sequence[int], m: int) -> int:
    return sum(r[:m])


def _wm(r: Sequence[int], m: int) -> int:
    """sum of i*r_i for i = 1..m (1-based)."""
    return sum((i + 1) * r[i] for i in range(m))


def _zero_stats(s: IntSequence) -> tuple[int, int, int]:
    """(k, total size S, W0 = sum of t*r_t over t = 0..k-1)."""
    r = s.multiplicities
    return len(r), sum(r), sum(t * rt for t, rt in enumerate(r))


def _tm(r: Sequence[int], m: int) -> int:
    """sum of t*r_t for t = 0..m-1."""
    return sum(t * r[t] for t in range(m))


def _zero_rmin(s: IntSequence) -> int:
    # multiplicity of the zero value is irrelevant to sums; the minimum
    # is taken over the nonzero values only
    return min(s.multiplicities[1:])


# ------------------------------------------------------------ the table


@dataclass(frozen=True)
class TheoremSpec:
    tag: TheoremId
    statement: str
    hypotheses: str
    measures: str
    kind: EnumKind
    sequence_based: bool
    check: Callable[[Instance], Optional[str]]
    bound: Callable[[Instance], ExactBound]
    needs_h: bool = False
    aux_key: Optional[str] = None
    conjecture: bool = False
    alpha_range: Optional[Callable[[Subject], range]] = None
    inverse_side: Optional[Callable[[Instance, int], bool]] = None
    inverse_pred: Optional[Callable[[Instance, int], bool]] = None
    note: Optional[str] = None


_SPECS: dict[TheoremId, TheoremSpec] = {}


def _register(spec: TheoremSpec) -> None:
    _SPECS[spec.tag] = spec


# ---- h-fold and pair sumsets (zero-anchored families) ----


def _chk_nathanson_hfold(inst):
    return _first(_want_set(inst), _k_at_least(inst, 3), _need_h(inst, 1))


def _bnd_nathanson_hfold(inst):
    k = len(_values(inst))
    return ExactBound.of(inst.h * k - inst.h + 1)


_register(TheoremSpec(
    tag=TheoremId.NATHANSON_HFOLD,
    statement="|hA| ≥ hk − h + 1; for h ≥ 2 equality holds exactly when "
              "A is an arithmetic progression",
    hypotheses="finite integer set, h ≥ 1",
    measures="hA",
    kind=EnumKind.ZERO_GCD1,
    sequence_based=False,
    check=_chk_nathanson_hfold,
    bound=_bnd_nathanson_hfold,
    needs_h=True,
    inverse_side=lambda inst, measured: inst.h >= 2,
    inverse_pred=lambda inst, measured: is_arithmetic_progression(inst.subject),
))


def _chk_nathanson_restricted(inst):
    r = _first(_want_set(inst), _k_at_least(inst, 3))
    if r:
        return r
    return _need_h(inst, 1, len(_values(inst)))


def _bnd_nathanson_restricted(inst):
    k = len(_values(inst))
    return ExactBound.of(inst.h * k - inst.h * inst.h + 1)


_register(TheoremSpec(
    tag=TheoremId.NATHANSON_RESTRICTED,
    statement="|h^A| ≥ hk − h² + 1; for k ≥ 5 and 2 ≤ h ≤ k−2 equality "
              "holds exactly when A is an arithmetic progression",
    hypotheses="finite integer set, 1 ≤ h ≤ k",
    measures="h^A",
    kind=EnumKind.ZERO_GCD1,
    sequence_based=False,
    check=_chk_nathanson_restricted,
    bound=_bnd_nathanson_restricted,
    needs_h=True,
    inverse_side=lambda inst, measured: (len(_values(inst)) >= 5
                                         and 2 <= inst.h <= len(_values(inst)) - 2),
    inverse_pred=lambda inst, measured: is_arithmetic_progression(inst.subject),
))


def _chk_freiman_3k4(inst):
    return _first(_want_set(inst), _zero_anchored(inst), _gcd_one(inst),
                  _k_at_least(inst, 3))


_register(TheoremSpec(
    tag=TheoremId.FREIMAN_3K4_STRUCTURE,
    statement="|2A| ≥ 2k − 1, and whenever |2A| = 2k − 1 + b ≤ 3k − 4 the "
              "set A lies in an arithmetic progression of length ≤ k + b",
    hypotheses="0 = a_0 < ... < a_{k-1}, gcd 1, k ≥ 3",
    measures="2A",
    kind=EnumKind.ZERO_GCD1,
    sequence_based=False,
    check=_chk_freiman_3k4,
    bound=lambda inst: ExactBound.of(2 * len(_values(inst)) - 1),
    inverse_side=lambda inst, measured: measured <= 3 * len(_values(inst)) - 4,
    inverse_pred=lambda inst, measured: (
        ap_cover_length(inst.subject)
        <= len(_values(inst)) + measured - (2 * len(_values(inst)) - 1)),
    note="the structure clause applies to every set with small doubling, "
         "not only to bound-equality witnesses",
))


def _bnd_freiman_2a(inst):
    e = _values(inst)
    k, amax = len(e), e[-1]
    return ExactBound.of(amax + k if amax <= 2 * k - 3 else 3 * k - 3)


_register(TheoremSpec(
    tag=TheoremId.FREIMAN_2A_LOWER,
    statement="|2A| ≥ a_{k-1} + k when a_{k-1} ≤ 2k − 3, else |2A| ≥ 3k − 3",
    hypotheses="0 = a_0 < ... < a_{k-1}, gcd 1, k ≥ 3",
    measures="2A",
    kind=EnumKind.ZERO_GCD1,
    sequence_based=False,
    check=_chk_freiman_3k4,
    bound=_bnd_freiman_2a,
))


def _chk_lev_hfold(inst):
    return _first(_want_set(inst), _zero_anchored(inst), _gcd_one(inst),
                  _k_at_least(inst, 3), _need_h(inst, 2))


def _bnd_lev_hfold(inst):
    e = _values(inst)
    k, amax, h = len(e), e[-1], inst.h
    return ExactBound.of(_aux(inst, AUX_HFOLD_PREV) + min(amax, h * (k - 2) + 1))


_register(TheoremSpec(
    tag=TheoremId.LEV_HFOLD,
    statement="|hA| ≥ |(h−1)A| + min(a_{k-1}, h(k−2) + 1)",
    hypotheses="0 = a_0 < ... < a_{k-1}, gcd 1, k ≥ 3, h ≥ 2",
    measures="hA",
    kind=EnumKind.ZERO_GCD1,
    sequence_based=False,
    check=_chk_lev_hfold,
    bound=_bnd_lev_hfold,
    needs_h=True,
    aux_key=AUX_HFOLD_PREV,
))


def _chk_flc(inst):
    return _first(_want_set(inst), _zero_anchored(inst), _gcd_one(inst),
                  _k_at_least(inst, 8))


def _bnd_flc(inst):
    e = _values(inst)
    k, amax = len(e), e[-1]
    return ExactBound.of(amax + k - 2 if amax <= 2 * k - 5 else 3 * k - 7)


_register(TheoremSpec(
    tag=TheoremId.FREIMAN_LEV_CONJECTURE,
    statement="conjecturally |2^A| ≥ a_{k-1} + k − 2 when a_{k-1} ≤ 2k − 5, "
              "else |2^A| ≥ 3k − 7",
    hypotheses="0 = a_0 < ... < a_{k-1}, gcd 1, k ≥ 8",
    measures="2^A",
    kind=EnumKind.ZERO_GCD1,
    sequence_based=False,
    check=_chk_flc,
    bound=_bnd_flc,
    conjecture=True,
))


def _bnd_flp(inst):
    e = _values(inst)
    k, amax = len(e), e[-1]
    if amax <= 2 * k - 3:
        return ExactBound.of(Fraction(amax + k, 2) + k - Fraction(7, 2))
    return ExactBound.of(Fraction(5, 2) * k - 5)


_register(TheoremSpec(
    tag=TheoremId.FLP_RESTRICTED,
    statement="|2^A| ≥ (a_{k-1} + k)/2 + k − 7/2 when a_{k-1} ≤ 2k − 3, "
              "else |2^A| ≥ 5k/2 − 5",
    hypotheses="0 = a_0 < ... < a_{k-1}, gcd 1, k ≥ 3",
    measures="2^A",
    kind=EnumKind.ZERO_GCD1,
    sequence_based=False,
    check=_chk_freiman_3k4,
    bound=_bnd_flp,
))


def _bnd_lev_restricted(inst):
    e = _values(inst)
    k, amax = len(e), e[-1]
    if amax <= 2 * k - 5:
        return ExactBound.of(amax + k - 2)
    return ExactBound.theta(k, k - 6)


_register(TheoremSpec(
    tag=TheoremId.LEV_RESTRICTED,
    statement="|2^A| ≥ a_{k-1} + k − 2 when a_{k-1} ≤ 2k − 5, else "
              "|2^A| ≥ (θ + 1)k − 6 with θ the golden mean",
    hypotheses="0 = a_0 < ... < a_{k-1}, gcd 1, k ≥ 3",
    measures="2^A",
    kind=EnumKind.ZERO_GCD1,
    sequence_based=False,
    check=_chk_freiman_3k4,
    bound=_bnd_lev_restricted,
))


# ---- subset sums of sets ----


def _chk_subset_min(inst):
    return _first(_want_set(inst), _positive(inst), _k_at_least(inst, 3))


_register(TheoremSpec(
    tag=TheoremId.SUBSET_MIN_LEMMA_A,
    statement="|S(A)| ≥ k(k+1)/2; for k ≥ 4 equality holds exactly when "
              "A = d∗{1,...,k}",
    hypotheses="k positive integers, k ≥ 3",
    measures="S(A)",
    kind=EnumKind.POSITIVE_GCD1,
    sequence_based=False,
    check=_chk_subset_min,
    bound=lambda inst: ExactBound.of(_tri(len(_values(inst)))),
    inverse_side=lambda inst, measured: len(_values(inst)) >= 4,
    inverse_pred=lambda inst, measured: _is_dilated_interval(_values(inst)),
))


def _chk_bp_subset(inst):
    r = _first(_want_set(inst), _positive(inst), _k_at_least(inst, 3))
    if r:
        return r
    return _need_alpha(inst, 1, len(_values(inst)))


def _bnd_bp_subset(inst):
    k = len(_values(inst))
    return ExactBound.of(_tri(k) - _tri(inst.alpha) + 1)


_register(TheoremSpec(
    tag=TheoremId.BP_SUBSET_MIN,
    statement="|S_α(A)| ≥ k(k+1)/2 − α(α+1)/2 + 1; for k ≥ 4 and α ≤ k−2 "
              "equality holds exactly when A = d∗{1,...,k}",
    hypotheses="k positive integers, k ≥ 3, 1 ≤ α ≤ k",
    measures="S_α(A)",
    kind=EnumKind.POSITIVE_GCD1,
    sequence_based=False,
    check=_chk_bp_subset,
    bound=_bnd_bp_subset,
    alpha_range=lambda subject: range(1, len(subject) + 1),
    inverse_side=lambda inst, measured: (len(_values(inst)) >= 4
                                         and inst.alpha <= len(_values(inst)) - 2),
    inverse_pred=lambda inst, measured: _is_dilated_interval(_values(inst)),
))


def _chk_subset_freiman_pos(inst):
    return _first(_want_set(inst), _positive(inst), _gcd_one(inst),
                  _k_at_least(inst, 3))


def _bnd_subset_freiman_pos(inst):
    e = _values(inst)
    k, amax = len(e), e[-1]
    base = k * (k - 1) // 2
    if amax <= 2 * k - 3:
        return ExactBound.of(amax + base)
    return ExactBound.theta(k + 1, base - 4)


_register(TheoremSpec(
    tag=TheoremId.SUBSET_FREIMAN_POS,
    statement="|S(A)| ≥ a_k + k(k−1)/2 when a_k ≤ 2k − 3, else "
              "|S(A)| ≥ θ(k+1) − 4 + k(k−1)/2",
    hypotheses="k positive integers, gcd 1, k ≥ 3",
    measures="S(A)",
    kind=EnumKind.POSITIVE_GCD1,
    sequence_based=False,
    check=_chk_subset_freiman_pos,
    bound=_bnd_subset_freiman_pos,
))


def _chk_subset_freiman_zero(inst):
    return _first(_want_set(inst), _zero_anchored(inst), _gcd_one(inst),
                  _k_at_least(inst, 4))


def _bnd_subset_freiman_zero(inst):
    e = _values(inst)
    k, amax = len(e), e[-1]
    base = (k - 1) * (k - 2) // 2
    if amax <= 2 * k - 5:
        return ExactBound.of(amax + base + 1)
    return ExactBound.theta(k, base - 3)


_register(TheoremSpec(
    tag=TheoremId.SUBSET_FREIMAN_ZERO,
    statement="|S(A)| ≥ a_{k-1} + (k−1)(k−2)/2 + 1 when a_{k-1} ≤ 2k − 5, "
              "else |S(A)| ≥ θk − 3 + (k−1)(k−2)/2",
    hypotheses="0 = a_0 < ... < a_{k-1}, gcd 1, k ≥ 4",
    measures="S(A)",
    kind=EnumKind.ZERO_GCD1,
    sequence_based=False,
    check=_chk_subset_freiman_zero,
    bound=_bnd_subset_freiman_zero,
))


def _chk_alpha_subset_pos(inst):
    r = _chk_subset_freiman_pos(inst)
    if r:
        return r
    return _need_alpha(inst, 1, len(_values(inst)) - 2, "α ≤ k−2 required")


def _bnd_alpha_subset_pos(inst):
    e = _values(inst)
    k, amax, a = len(e), e[-1], inst.alpha
    base = k * (k - 1) // 2 - _tri(a) + 1
    if amax <= 2 * k - 3:
        return ExactBound.of(amax + base)
    return ExactBound.theta(k + 1, base - 4)


_register(TheoremSpec(
    tag=TheoremId.ALPHA_SUBSET_POS,
    statement="|S_α(A)| ≥ a_k + k(k−1)/2 − α(α+1)/2 + 1 when a_k ≤ 2k − 3, "
              "else the same tail plus θ(k+1) − 4 in place of a_k",
    hypotheses="k positive integers, gcd 1, k ≥ 3, 1 ≤ α ≤ k−2",
    measures="S_α(A)",
    kind=EnumKind.POSITIVE_GCD1,
    sequence_based=False,
    check=_chk_alpha_subset_pos,
    bound=_bnd_alpha_subset_pos,
    alpha_range=lambda subject: range(1, len(subject) - 1),
))


def _chk_alpha_subset_zero(inst):
    r = _chk_subset_freiman_zero(inst)
    if r:
        return r
    return _need_alpha(inst, 1, len(_values(inst)) - 2, "α ≤ k−2 required")


def _bnd_alpha_subset_zero(inst):
    e = _values(inst)
    k, amax, a = len(e), e[-1], inst.alpha
    base = (k - 1) * (k - 2) // 2 - a * (a - 1) // 2 + 1
    if amax <= 2 * k - 5:
        return ExactBound.of(amax + base)
    return ExactBound.theta(k, base - 4)


_register(TheoremSpec(
    tag=TheoremId.ALPHA_SUBSET_ZERO,
    statement="|S_α(A)| ≥ a_{k-1} + (k−1)(k−2)/2 − α(α−1)/2 + 1 when "
              "a_{k-1} ≤ 2k − 5, else the same tail plus θk − 4",
    hypotheses="0 = a_0 < ... < a_{k-1}, gcd 1, k ≥ 4, 1 ≤ α ≤ k−2",
    measures="S_α(A)",
    kind=EnumKind.ZERO_GCD1,
    sequence_based=False,
    check=_chk_alpha_subset_zero,
    bound=_bnd_alpha_subset_zero,
    alpha_range=lambda subject: range(1, len(subject) - 1),
    note="the trailing constant follows the derivation, which reduces to "
         "the α−1 bound on the nonzero part and gives +1; the headline "
         "figure of +2 fails at A = {0,1,2,3} with α = 1",
))


# ---- subsequence sums (positive families unless noted) ----


def _chk_subseq_min_r1(inst):
    return _first(_want_seq(inst), _positive(inst), _k_at_least(inst, 3))


def _bnd_weighted(inst):
    _, _, w = _pos_stats(inst.subject)
    return ExactBound.of(w)


def _inv_values_interval(inst, measured):
    return _is_dilated_interval(inst.subject.values)


_register(TheoremSpec(
    tag=TheoremId.SUBSEQ_MIN_R1,
    statement="|S(𝔸)| ≥ Σ i·r_i; for k ≥ 4 equality holds exactly when the "
              "value set is d∗{1,...,k}",
    hypotheses="k positive values, every r_i ≥ 1, k ≥ 3",
    measures="S(𝔸)",
    kind=EnumKind.POSITIVE_GCD1,
    sequence_based=True,
    check=_chk_subseq_min_r1,
    bound=_bnd_weighted,
    inverse_side=lambda inst, measured: len(inst.subject.values) >= 4,
    inverse_pred=_inv_values_interval,
))


def _chk_subseq_min_r2(inst):
    r = _chk_subseq_min_r1(inst)
    if r:
        return r
    if min(inst.subject.multiplicities) < 2:
        return "every r_i ≥ 2 required"
    return None


_register(TheoremSpec(
    tag=TheoremId.SUBSEQ_MIN_R2,
    statement="|S(𝔸)| ≥ Σ i·r_i when every multiplicity is at least 2; for "
              "k ≥ 4 equality holds exactly when the value set is d∗{1,...,k}",
    hypotheses="k positive values, every r_i ≥ 2, k ≥ 3",
    measures="S(𝔸)",
    kind=EnumKind.POSITIVE_GCD1,
    sequence_based=True,
    check=_chk_subseq_min_r2,
    bound=_bnd_weighted,
    inverse_side=lambda inst, measured: len(inst.subject.values) >= 4,
    inverse_pred=_inv_values_interval,
))


def _chk_bp_subseq(inst):
    r = _chk_subseq_min_r1(inst)
    if r:
        return r
    total = inst.subject.size
    return _need_alpha(inst, 1, total - 1, "α < Σr_i required")


def _bnd_bp_subseq(inst):
    s = inst.subject
    r = s.multiplicities
    _, _, w = _pos_stats(s)
    m = m_index(r, inst.alpha)
    return ExactBound.of(w - _wm(r, m) + m * (_prefix(r, m) - inst.alpha) + 1)


_register(TheoremSpec(
    tag=TheoremId.BP_SUBSEQ_MIN,
    statement="|S_α(𝔸)| ≥ Σ_{i>m} i·r_i + m(Σ_{i≤m} r_i − α) + 1 with m the "
              "prefix index of α; for k ≥ 4 and α ≤ Σr_i − 2 equality holds "
              "exactly when the value set is d∗{1,...,k}",
    hypotheses="k positive values, k ≥ 3, 1 ≤ α < Σr_i",
    measures="S_α(𝔸)",
    kind=EnumKind.POSITIVE_GCD1,
    sequence_based=True,
    check=_chk_bp_subseq,
    bound=_bnd_bp_subseq,
    alpha_range=lambda subject: range(1, subject.size),
    inverse_side=lambda inst, measured: (len(inst.subject.values) >= 4
                                         and inst.alpha <= inst.subject.size - 2),
    inverse_pred=_inv_values_interval,
))


def _chk_subseq_freiman_pos(inst):
    return _first(_want_seq(inst), _positive(inst), _gcd_one(inst),
                  _k_at_least(inst, 3))


def _bnd_subseq_freiman_pos(inst):
    s = inst.subject
    k, _, w = _pos_stats(s)
    amax = s.values[-1]
    if amax <= 2 * k - 3:
        return ExactBound.of(w + amax - k)
    return ExactBound.theta(k + 1, -k - 4) + w


_register(TheoremSpec(
    tag=TheoremId.SUBSEQ_FREIMAN_POS,
    statement="|S(𝔸)| ≥ Σ i·r_i + a_k − k when a_k ≤ 2k − 3, else "
              "|S(𝔸)| ≥ Σ i·r_i + θ(k+1) − k − 4",
    hypotheses="k positive values, gcd 1, k ≥ 3",
    measures="S(𝔸)",
    kind=EnumKind.POSITIVE_GCD1,
    sequence_based=True,
    check=_chk_subseq_freiman_pos,
    bound=_bnd_subseq_freiman_pos,
))


def _chk_subseq_freiman_r2(inst):
    r = _chk_subseq_freiman_pos(inst)
    if r:
        return r
    if min(inst.subject.multiplicities) < 2:
        return "every r_i ≥ 2 required"
    return None


def _bnd_subseq_freiman_r2(inst):
    s = inst.subject
    k, _, w = _pos_stats(s)
    r = min(s.multiplicities)
    rk = s.multiplicities[-1]
    amax = s.values[-1]
    return ExactBound.of(_aux(inst, AUX_RFOLD_WITH_ZERO)
                         + min(amax, r * (k - 1) + 1) - 1
                         + (w - k * rk) + k * (rk - r))


_register(TheoremSpec(
    tag=TheoremId.SUBSEQ_FREIMAN_R2,
    statement="|S(𝔸)| ≥ |(r−1)(A∪{0})| + min(a_k, r(k−1)+1) − 1 + "
              "Σ_{i<k} i·r_i + k(r_k − r) with r = min r_i",
    hypotheses="k positive values, gcd 1, k ≥ 3, every r_i ≥ 2",
    measures="S(𝔸)",
    kind=EnumKind.POSITIVE_GCD1,
    sequence_based=True,
    check=_chk_subseq_freiman_r2,
    bound=_bnd_subseq_freiman_r2,
    aux_key=AUX_RFOLD_WITH_ZERO,
))


def _chk_subseq_freiman_zero(inst):
    return _first(_want_seq(inst), _zero_anchored(inst), _gcd_one(inst),
                  _k_at_least(inst, 3))


def _bnd_subseq_freiman_zero(inst):
    s = inst.subject
    k, _, w0 = _zero_stats(s)
    amax = s.values[-1]
    rmin = _zero_rmin(s)
    if rmin >= 2:
        rtop = s.multiplicities[-1]
        return ExactBound.of(_aux(inst, AUX_RFOLD)
                             + min(amax, rmin * (k - 2) + 1)
                             + (w0 - (k - 1) * rtop)
                             + (k - 1) * (rtop - rmin))
    if amax <= 2 * k - 5:
        return ExactBound.of(amax - k + 2 + w0)
    return ExactBound.theta(k, -k - 2) + w0


_register(TheoremSpec(
    tag=TheoremId.SUBSEQ_FREIMAN_ZERO,
    statement="for r = min over nonzero values of r_i: r ≥ 2 gives "
              "|S(𝔸)| ≥ |(r−1)A| + min(a_{k-1}, r(k−2)+1) + Σ_{t<k-1} t·r_t "
              "+ (k−1)(r_{k-1} − r); r = 1 gives a_{k-1} − k + 2 + Σ t·r_t, "
              "with θk − k − 2 replacing a_{k-1} − k + 2 for large a_{k-1}",
    hypotheses="0 = a_0 < ... < a_{k-1}, gcd 1, k ≥ 3",
    measures="S(𝔸)",
    kind=EnumKind.ZERO_GCD1,
    sequence_based=True,
    check=_chk_subseq_freiman_zero,
    bound=_bnd_subseq_freiman_zero,
    aux_key=AUX_RFOLD,
))


# ---- alpha-restricted subsequence sums, positive families ----


def _chk_alpha_seq_last(inst):
    r = _chk_subseq_freiman_pos(inst)
    if r:
        return r
    total = inst.subject.size
    if total < 3:
        return "Σr_i ≥ 3 required"
    if inst.alpha is None:
        return "α required"
    if inst.alpha != total - 2:
        return "α = Σr_i − 2 required"
    return None


def _bnd_alpha_seq_last(inst):
    s = inst.subject
    k = len(s.values)
    amax = s.values[-1]
    if min(s.multiplicities) == 1:
        if amax <= 2 * k - 3:
            return ExactBound.of(amax + k)
        return ExactBound.theta(k + 1, k - 4)
    if amax <= 2 * k - 1:
        return ExactBound.of(amax + k + 1)
    return ExactBound.of(3 * k)


_register(TheoremSpec(
    tag=TheoremId.ALPHA_SEQ_LAST,
    statement="at α = Σr_i − 2: min r_i = 1 gives |S_α(𝔸)| ≥ a_k + k for "
              "a_k ≤ 2k − 3 and (θ+1)(k+1) − 5 otherwise; min r_i ≥ 2 gives "
              "a_k + k + 1 for a_k ≤ 2k − 1 and 3k otherwise",
    hypotheses="k positive values, gcd 1, k ≥ 3, α = Σr_i − 2",
    measures="S_α(𝔸)",
    kind=EnumKind.POSITIVE_GCD1,
    sequence_based=True,
    check=_chk_alpha_seq_last,
    bound=_bnd_alpha_seq_last,
    alpha_range=lambda subject: range(subject.size - 2, subject.size - 1)
    if subject.size >= 3 else range(0),
    note="the r = 1 large-element constant follows the derivation, which "
         "gives (θ+1)(k+1) − 5; the headline figure of −4 overstates it "
         "(witness: values 1,3,4 with unit multiplicities)",
))


def _chk_alpha_seq_r2_small(inst):
    r = _chk_subseq_freiman_r2(inst)
    if r:
        return r
    s = inst.subject
    hi = s.size - min(s.multiplicities) - 1
    return _need_alpha(inst, 1, hi, "α < Σr_i − r required")


def _bnd_alpha_seq_r2_small(inst):
    s = inst.subject
    k, _, w = _pos_stats(s)
    rv = s.multiplicities
    r = min(rv)
    rk = rv[-1]
    amax = s.values[-1]
    m = m_index(rv, inst.alpha)
    return ExactBound.of(_aux(inst, AUX_RFOLD_WITH_ZERO)
                         + min(amax, r * (k - 1) + 1)
                         + (w - k * rk) - _wm(rv, m)
                         + m * (_prefix(rv, m) - inst.alpha)
                         + k * (rk - r))


_register(TheoremSpec(
    tag=TheoremId.ALPHA_SEQ_R2_SMALL,
    statement="|S_α(𝔸)| ≥ |(r−1)(A∪{0})| + min(a_k, r(k−1)+1) + "
              "Σ_{m<i<k} i·r_i + m(Σ_{i≤m} r_i − α) + k(r_k − r)",
    hypotheses="k positive values, gcd 1, k ≥ 3, every r_i ≥ 2, "
               "1 ≤ α < Σr_i − r",
    measures="S_α(𝔸)",
    kind=EnumKind.POSITIVE_GCD1,
    sequence_based=True,
    check=_chk_alpha_seq_r2_small,
    bound=_bnd_alpha_seq_r2_small,
    aux_key=AUX_RFOLD_WITH_ZERO,
    alpha_range=lambda subject: range(1, subject.size - min(subject.multiplicities)),
))


def _chk_alpha_seq_r2_large(inst):
    r = _chk_subseq_freiman_r2(inst)
    if r:
        return r
    s = inst.subject
    total = s.size
    lo = max(1, total - min(s.multiplicities))
    return _need_alpha(inst, lo, total - 3, "α < Σr_i − 2 required")


def _bnd_alpha_seq_r2_large(inst):
    s = inst.subject
    k = len(s.values)
    total = s.size
    amax = s.values[-1]
    tail = k * (total - inst.alpha)
    if amax <= 2 * k - 1:
        return ExactBound.of(amax - k + 1 + tail)
    return ExactBound.of(k + tail)


_register(TheoremSpec(
    tag=TheoremId.ALPHA_SEQ_R2_LARGE,
    statement="for Σr_i − r ≤ α < Σr_i − 2: |S_α(𝔸)| ≥ a_k − k + 1 + "
              "k(Σr_i − α) when a_k ≤ 2k − 1, else k + k(Σr_i − α)",
    hypotheses="k positive values, gcd 1, k ≥ 3, every r_i ≥ 2, "
               "Σr_i − r ≤ α < Σr_i − 2",
    measures="S_α(𝔸)",
    kind=EnumKind.POSITIVE_GCD1,
    sequence_based=True,
    check=_chk_alpha_seq_r2_large,
    bound=_bnd_alpha_seq_r2_large,
    alpha_range=lambda subject: range(
        max(1, subject.size - min(subject.multiplicities)), subject.size - 2),
    note="the case constants follow the derivation (a_k − k + 1 and k); the "
         "headline figures a_k − k + 2 and k + 1 fail at values 1,2,3 with "
         "all multiplicities 3 and α = 6",
))


def _seq_special_split(s: IntSequence) -> bool:
    # second-largest value unique while the largest repeats
    return s.multiplicities[-2] == 1 and s.multiplicities[-1] >= 2


def _chk_alpha_seq_r1_main(inst):
    r = _chk_subseq_freiman_pos(inst)
    if r:
        return r
    s = inst.subject
    if _seq_special_split(s):
        return "r_{k-1} ≥ 2 or r_k = 1 required"
    return _need_alpha(inst, 1, s.size - 3, "α < Σr_i − 2 required")


def _bnd_alpha_seq_r1_main(inst):
    s = inst.subject
    k, total, w = _pos_stats(s)
    rv = s.multiplicities
    amax = s.values[-1]
    if inst.alpha < _prefix(rv, k - 1) - 1:
        m = m_index(rv, inst.alpha)
        tail = w - _wm(rv, m) + m * (_prefix(rv, m) - inst.alpha)
        if amax <= 2 * k - 3:
            return ExactBound.of(amax - k + 1 + tail)
        return ExactBound.theta(k + 1, -k - 3) + tail
    tail = k * (total - inst.alpha)
    if amax <= 2 * k - 3:
        return ExactBound.of(amax - k + tail)
    return ExactBound.theta(k + 1, -k - 4) + tail


_register(TheoremSpec(
    tag=TheoremId.ALPHA_SEQ_R1_MAIN,
    statement="two ranges: α < Σ_{i<k} r_i − 1 gives |S_α(𝔸)| ≥ a_k − k + 1 "
              "+ Σ_{i>m} i·r_i + m(Σ_{i≤m} r_i − α) (θ(k+1) − k − 3 replacing "
              "a_k − k + 1 for large a_k); otherwise a_k − k + k(Σr_i − α) "
              "(θ(k+1) − k − 4 for large a_k)",
    hypotheses="k positive values, gcd 1, k ≥ 3, not (r_{k-1} = 1 and "
               "r_k ≥ 2), 1 ≤ α < Σr_i − 2",
    measures="S_α(𝔸)",
    kind=EnumKind.POSITIVE_GCD1,
    sequence_based=True,
    check=_chk_alpha_seq_r1_main,
    bound=_bnd_alpha_seq_r1_main,
    alpha_range=lambda subject: range(1, subject.size - 2),
))


def _chk_alpha_seq_r1_special(inst):
    r = _chk_subseq_freiman_pos(inst)
    if r:
        return r
    s = inst.subject
    if not _seq_special_split(s):
        return "r_{k-1} = 1 and r_k ≥ 2 required"
    return _need_alpha(inst, 1, s.size - 3, "α < Σr_i − 2 required")


def _bnd_alpha_seq_r1_special(inst):
    s = inst.subject
    k, total, _ = _pos_stats(s)
    rv = s.multiplicities
    amax = s.values[-1]
    rk = rv[-1]
    if inst.alpha < _prefix(rv, k - 2):
        m = m_index(rv, inst.alpha)
        w2 = _wm(rv, k - 2)
        tail = (w2 - _wm(rv, m) + m * (_prefix(rv, m) - inst.alpha)
                + (k - m + 1) * (rk - 1))
        if amax <= 2 * k - 3:
            return ExactBound.of(amax + k + tail)
        return ExactBound.theta(k + 1, k - 4) + tail
    tail = (k - 1) * (total - inst.alpha)
    if amax <= 2 * k - 3:
        return ExactBound.of(amax - k + 2 + tail)
    return ExactBound.theta(k + 1, -k - 2) + tail


_register(TheoremSpec(
    tag=TheoremId.ALPHA_SEQ_R1_SPECIAL,
    statement="when only the largest value repeats past a unique "
              "second-largest: α < Σ_{i≤k-2} r_i gives |S_α(𝔸)| ≥ a_k + k + "
              "Σ_{m<i≤k-2} i·r_i + m(Σ_{i≤m} r_i − α) + (k−m+1)(r_k − 1); "
              "otherwise a_k − k + 2 + (k−1)(Σr_i − α); θ variants for "
              "large a_k",
    hypotheses="k positive values, gcd 1, k ≥ 3, r_{k-1} = 1, r_k ≥ 2, "
               "1 ≤ α < Σr_i − 2",
    measures="S_α(𝔸)",
    kind=EnumKind.POSITIVE_GCD1,
    sequence_based=True,
    check=_chk_alpha_seq_r1_special,
    bound=_bnd_alpha_seq_r1_special,
    alpha_range=lambda subject: range(1, subject.size - 2),
))


# ---- alpha-restricted subsequence sums, zero-anchored families ----


def _chk_alpha_seq_zero_common(inst):
    return _first(_want_seq(inst), _zero_anchored(inst), _gcd_one(inst),
                  _k_at_least(inst, 4))


def _chk_alpha_seq_zero_last(inst):
    r = _chk_alpha_seq_zero_common(inst)
    if r:
        return r
    total = inst.subject.size
    if total < 3:
        return "Σr_i ≥ 3 required"
    if inst.alpha is None:
        return "α required"
    if inst.alpha != total - 2:
        return "α = Σr_i − 2 required"
    return None


def _bnd_alpha_seq_zero_last(inst):
    s = inst.subject
    k = len(s.values)
    amax = s.values[-1]
    if _zero_rmin(s) == 1:
        if amax <= 2 * k - 5:
            return ExactBound.of(amax + k - 1)
        return ExactBound.theta(k, k - 5)
    if amax <= 2 * k - 3:
        return ExactBound.of(amax + k)
    return ExactBound.of(3 * k - 3)


_register(TheoremSpec(
    tag=TheoremId.ALPHA_SEQ_ZERO_LAST,
    statement="at α = Σr_i − 2: r = 1 gives |S_α(𝔸)| ≥ a_{k-1} + k − 1 for "
              "a_{k-1} ≤ 2k − 5 and (θ+1)k − 5 otherwise; r ≥ 2 gives "
              "a_{k-1} + k for a_{k-1} ≤ 2k − 3 and 3k − 3 otherwise",
    hypotheses="0 = a_0 < ... < a_{k-1}, gcd 1, k ≥ 4, α = Σr_i − 2",
    measures="S_α(𝔸)",
    kind=EnumKind.ZERO_GCD1,
    sequence_based=True,
    check=_chk_alpha_seq_zero_last,
    bound=_bnd_alpha_seq_zero_last,
    alpha_range=lambda subject: range(subject.size - 2, subject.size - 1)
    if subject.size >= 3 else range(0),
))


def _chk_alpha_seq_zero_r2(inst):
    r = _chk_alpha_seq_zero_common(inst)
    if r:
        return r
    s = inst.subject
    if _zero_rmin(s) < 2:
        return "every nonzero-value r_i ≥ 2 required"
    return _need_alpha(inst, 1, s.size - 3, "α < Σr_i − 2 required")


def _bnd_alpha_seq_zero_r2(inst):
    s = inst.subject
    k, total, w0 = _zero_stats(s)
    rv = s.multiplicities
    amax = s.values[-1]
    rmin = _zero_rmin(s)
    rtop = rv[-1]
    if inst.alpha < total - rmin:
        m = m_index(rv, inst.alpha)
        t_all = w0 - (k - 1) * rtop
        return ExactBound.of(_aux(inst, AUX_RFOLD)
                             + min(amax, rmin * (k - 2) + 1)
                             + t_all - _tm(rv, m)
                             + (m - 1) * (_prefix(rv, m) - inst.alpha)
                             + (k - 1) * (rtop - rmin))
    tail = (k - 1) * (total - inst.alpha)
    if amax <= 2 * k - 3:
        return ExactBound.of(amax - k + 2 + tail)
    return ExactBound.of(k - 1 + tail)


_register(TheoremSpec(
    tag=TheoremId.ALPHA_SEQ_ZERO_R2,
    statement="two ranges: α < Σr_i − r gives |S_α(𝔸)| ≥ |(r−1)A| + "
              "min(a_{k-1}, r(k−2)+1) + Σ_{m≤t<k-1} t·r_t + "
              "(m−1)(Σ_{t<m} r_t − α) + (k−1)(r_{k-1} − r); otherwise "
              "a_{k-1} − k + 2 + (k−1)(Σr_i − α), with k − 1 replacing "
              "a_{k-1} − k + 2 for large a_{k-1}",
    hypotheses="0 = a_0 < ... < a_{k-1}, gcd 1, k ≥ 4, every nonzero-value "
               "r_i ≥ 2, 1 ≤ α < Σr_i − 2",
    measures="S_α(𝔸)",
    kind=EnumKind.ZERO_GCD1,
    sequence_based=True,
    check=_chk_alpha_seq_zero_r2,
    bound=_bnd_alpha_seq_zero_r2,
    aux_key=AUX_RFOLD,
    alpha_range=lambda subject: range(1, subject.size - 2),
))


def _zero_special_split(s: IntSequence) -> bool:
    # read on the zero-indexed sequence: unique second-largest value,
    # repeated largest value
    return s.multiplicities[-2] == 1 and s.multiplicities[-1] >= 2


def _chk_alpha_seq_zero_r1(inst):
    r = _chk_alpha_seq_zero_common(inst)
    if r:
        return r
    s = inst.subject
    if _zero_rmin(s) != 1:
        return "min nonzero-value r_i = 1 required"
    return _need_alpha(inst, 1, s.size - 3, "α < Σr_i − 2 required")


def _bnd_alpha_seq_zero_r1(inst):
    s = inst.subject
    k, total, w0 = _zero_stats(s)
    rv = s.multiplicities
    amax = s.values[-1]
    alpha = inst.alpha
    small = amax <= 2 * k - 5
    if not _zero_special_split(s):
        if alpha < _prefix(rv, k - 1) - 1:
            m = m_index(rv, alpha)
            tail = w0 - _tm(rv, m) + (m - 1) * (_prefix(rv, m) - alpha)
            return (ExactBound.of(amax - k + 2 + tail) if small
                    else ExactBound.theta(k, -k - 2) + tail)
        tail = (k - 1) * (total - alpha)
        return (ExactBound.of(amax - k + 1 + tail) if small
                else ExactBound.theta(k, -k - 3) + tail)
    if alpha <= rv[0]:
        return (ExactBound.of(amax - k + 2 + w0) if small
                else ExactBound.theta(k, -k - 2) + w0)
    if alpha < _prefix(rv, k - 2):
        m = m_index(rv, alpha)
        t_all = w0 - (k - 1) * rv[-1]
        tail = (t_all - _tm(rv, m) + (m - 1) * (_prefix(rv, m) - alpha)
                + (k - m) * (rv[-1] - 1))
        return (ExactBound.of(amax + 1 + tail) if small
                else ExactBound.theta(k, -3) + tail)
    tail = (k - 2) * (total - alpha)
    return (ExactBound.of(amax - k + 3 + tail) if small
            else ExactBound.theta(k, -k - 1) + tail)


_register(TheoremSpec(
    tag=TheoremId.ALPHA_SEQ_ZERO_R1,
    statement="five ranges split on whether the second-largest value is "
              "unique while the largest repeats; each range gives an "
              "a_{k-1}-linear bound with a θk variant for large a_{k-1} "
              "(see the bound function for the exact case table)",
    hypotheses="0 = a_0 < ... < a_{k-1}, gcd 1, k ≥ 4, min nonzero-value "
               "r_i = 1, 1 ≤ α < Σr_i − 2",
    measures="S_α(𝔸)",
    kind=EnumKind.ZERO_GCD1,
    sequence_based=True,
    check=_chk_alpha_seq_zero_r1,
    bound=_bnd_alpha_seq_zero_r1,
    alpha_range=lambda subject: range(1, subject.size - 2),
    note="the first range's conclusion is a bound on |S_α(𝔸)|, not |S(𝔸)| "
         "as sometimes transcribed; the repeated-largest case split reads "
         "its multiplicity conditions on the top two nonzero values",
))


# --------------------------------------------------------------- public


@dataclass(frozen=True)
class CatalogEntry:
    id: TheoremId
    statement: str
    hypotheses: str
    measures: str
    conjecture: bool
    kind: EnumKind
    sequence_based: bool
    needs_h: bool
    needs_alpha: bool
    auxiliary: Optional[str]
    note: Optional[str] = None


def spec_for(t: TheoremId) -> TheoremSpec:
    return _SPECS[t]


def all_tags() -> tuple[TheoremId, ...]:
    return tuple(TheoremId)


def applicable(t: TheoremId, inst: Instance) -> tuple[bool, Optional[str]]:
    """True iff every hypothesis of the statement holds; the reason names
    the first failing clause."""
    reason = _SPECS[t].check(inst)
    return (reason is None, reason)


def evaluate_bound(t: TheoremId, inst: Instance) -> ExactBound:
    ok, reason = applicable(t, inst)
    if not ok:
        raise InapplicableError(f"{t.value}: {reason}")
    return _SPECS[t].bound(inst)


def bound_holds(t: TheoremId, inst: Instance, observed: int) -> bool:
    """Exact test observed >= bound."""
    return evaluate_bound(t, inst).compare(observed) <= 0


def equality_characterization(t: TheoremId, inst: Instance
                              ) -> Optional[Callable[[int], bool]]:
    """The structural predicate of the inverse clause, closed over inst,
    taking the measured cardinality; absent when t has no inverse clause.
    Side conditions are tested separately by inverse_side_holds."""
    spec = _SPECS[t]
    if spec.inverse_pred is None:
        return None

    def pred(measured: int) -> bool:
        return spec.inverse_pred(inst, measured)

    return pred


def inverse_side_holds(t: TheoremId, inst: Instance, measured: int) -> bool:
    spec = _SPECS[t]
    return spec.inverse_side is not None and spec.inverse_side(inst, measured)


def catalog() -> list[CatalogEntry]:
    """Stable-ordered listing of every encoded statement."""
    out = []
    for t in TheoremId:
        s = _SPECS[t]
        out.append(CatalogEntry(
            id=t, statement=s.statement, hypotheses=s.hypotheses,
            measures=s.measures, conjecture=s.conjecture, kind=s.kind,
            sequence_based=s.sequence_based, needs_h=s.needs_h,
            needs_alpha=s.alpha_range is not None, auxiliary=s.aux_key,
            note=s.note))
    return out
