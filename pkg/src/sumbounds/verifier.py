"""Exhaustive verification sweeps.

A sweep enumerates every instance of a theorem's hypothesis family in a
(k, max element, multiplicity) box, measures the constrained sum-set
cardinality with the engine, and classifies each (instance, h, α)
triple as PASS / EQUALITY / VIOLATION / INAPPLICABLE.  Work is split
into (k, lead-element) tasks whose results are merged in task order, so
the report is byte-identical for any parallelism degree.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .core import (EnumKind, IntSequence, IntSet, iter_mult_vectors,
                   iter_set_tuples)
from .engine import (hfold_sizes, min_card_size_profile, pairwise_distinct_size,
                     restricted_size_profile, seq_min_card_size_profile,
                     subsequence_sums_size, subset_sums_size)
from .errors import IndexRangeError
from .exact import ExactBound
from .registry import (AUX_HFOLD_PREV, AUX_RFOLD, AUX_RFOLD_WITH_ZERO,
                       Instance, TheoremId, applicable, spec_for)

PASS = "PASS"
EQUALITY = "EQUALITY"
VIOLATION = "VIOLATION"
INAPPLICABLE = "INAPPLICABLE"

STRUCTURE_CONFIRMED = "STRUCTURE_CONFIRMED"
STRUCTURE_FAILED = "STRUCTURE_FAILED"
NOT_CHECKED = "NOT_CHECKED"

ALL_APPLICABLE = "ALL_APPLICABLE"

AlphaPolicy = Union[str, Sequence[int]]


@dataclass(frozen=True)
class CheckOutcome:
    theorem: TheoremId
    instance: str
    measured: Optional[int]
    bound: Optional[str]
    status: str
    inverse_status: str = NOT_CHECKED


@dataclass
class VerificationReport:
    theorem: str
    params: dict
    counts: dict
    equality_witnesses: list
    violations: list
    structure: dict
    cursor: str
    version: str = "1"
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        """The canonical serializable body; elapsed time is excluded so
        repeated runs compare byte-identically."""
        return {
            "theorem": self.theorem,
            "params": self.params,
            "counts": self.counts,
            "equality_witnesses": self.equality_witnesses,
            "violations": self.violations,
            "structure": self.structure,
            "cursor": self.cursor,
            "version": self.version,
        }

    @property
    def has_violations(self) -> bool:
        return self.counts["violation"] > 0


# ----------------------------------------------------------- measurement


def _instance_label(subject, h: Optional[int], alpha: Optional[int]) -> str:
    label = subject.literal()
    if h is not None:
        label += f"|h={h}"
    if alpha is not None:
        label += f"|alpha={alpha}"
    return label


def _auto_aux(spec, subject) -> Optional[dict]:
    """Engine-computed auxiliary cardinalities, one dict per subject
    (only sequence-based bounds; the h-fold auxiliary varies with h and
    is supplied in the h loop instead)."""
    if spec.aux_key == AUX_RFOLD_WITH_ZERO:
        r = min(subject.multiplicities)
        if r >= 2:
            base = (0,) + subject.values
            return {AUX_RFOLD_WITH_ZERO: hfold_sizes(base, r - 1)[r - 2]}
    elif spec.aux_key == AUX_RFOLD:
        if len(subject.values) >= 2:
            r = min(subject.multiplicities[1:])
            if r >= 2:
                return {AUX_RFOLD: hfold_sizes(subject.values, r - 1)[r - 2]}
    return None


def _measure_single(spec, inst: Instance) -> int:
    """Cardinality of the engine object the bound constrains."""
    subject = inst.subject
    m = spec.measures
    if m == "hA":
        return hfold_sizes(subject.elements, inst.h)[inst.h - 1]
    if m == "2A":
        return hfold_sizes(subject.elements, 2)[1]
    if m == "h^A":
        return restricted_size_profile(subject.elements)[inst.h - 1]
    if m == "2^A":
        return pairwise_distinct_size(subject.elements)
    if m == "S(A)":
        return subset_sums_size(subject.elements)
    if m == "S_α(A)":
        return min_card_size_profile(subject.elements)[inst.alpha - 1]
    if m == "S(𝔸)":
        return subsequence_sums_size(subject.values, subject.multiplicities)
    if m == "S_α(𝔸)":
        return seq_min_card_size_profile(
            subject.values, subject.multiplicities)[inst.alpha - 1]
    raise ValueError(f"unknown measured object {m!r}")


def _classify(spec, inst: Instance, measured: int) -> tuple[str, str, ExactBound]:
    bound = spec.bound(inst)
    c = bound.compare(measured)
    if c > 0:
        status = VIOLATION
    elif c == 0:
        status = EQUALITY
    else:
        status = PASS
    inverse = NOT_CHECKED
    if spec.inverse_pred is not None:
        # the small-doubling structure clause applies whenever its side
        # condition holds, not only at bound equality
        wants = (status == EQUALITY
                 or spec.tag is TheoremId.FREIMAN_3K4_STRUCTURE)
        if wants and spec.inverse_side(inst, measured):
            inverse = (STRUCTURE_CONFIRMED if spec.inverse_pred(inst, measured)
                       else STRUCTURE_FAILED)
    return status, inverse, bound


def check_instance(t: TheoremId, inst: Instance) -> CheckOutcome:
    """Measure one instance against one theorem."""
    spec = spec_for(t)
    ok, reason = applicable(t, inst)
    if not ok:
        return CheckOutcome(t, _instance_label(inst.subject, inst.h, inst.alpha),
                            None, None, INAPPLICABLE)
    if spec.aux_key and not inst.auxiliary_cardinalities:
        if spec.aux_key == AUX_HFOLD_PREV:
            prev = hfold_sizes(inst.subject.elements, inst.h - 1)[inst.h - 2]
            inst = inst.with_aux({AUX_HFOLD_PREV: prev})
        else:
            aux = _auto_aux(spec, inst.subject)
            if aux:
                inst = inst.with_aux(aux)
    measured = _measure_single(spec, inst)
    status, inverse, bound = _classify(spec, inst, measured)
    return CheckOutcome(t, _instance_label(inst.subject, inst.h, inst.alpha),
                        measured, bound.exact_str(), status, inverse)


# ------------------------------------------------------------ the sweep


@dataclass
class _TaskResult:
    counts: list
    eq_wit: list
    viol: list
    struct_confirmed: int = 0
    struct_failed: int = 0
    struct_failed_wit: list = field(default_factory=list)


def _eval_subject(spec, subject, alpha_policy, h_values, res) -> None:
    if spec.needs_h:
        hs = list(h_values) if h_values else [2]
    else:
        hs = [None]
    if spec.alpha_range is not None:
        if alpha_policy == ALL_APPLICABLE:
            alphas = list(spec.alpha_range(subject))
            if not alphas:
                res.counts[3] += 1
                return
        else:
            alphas = list(alpha_policy)
    else:
        alphas = [None]

    elems = subject.values if isinstance(subject, IntSequence) else subject.elements
    m = spec.measures
    hsizes = prof = scalar = None
    if m in ("hA", "2A"):
        hmax = 2 if m == "2A" else max(hs)
        hsizes = hfold_sizes(elems, hmax)
    elif m == "h^A":
        prof = restricted_size_profile(elems)
    elif m == "2^A":
        scalar = pairwise_distinct_size(elems)
    elif m == "S(A)":
        scalar = subset_sums_size(elems)
    elif m == "S_α(A)":
        prof = min_card_size_profile(elems)
    elif m == "S(𝔸)":
        scalar = subsequence_sums_size(subject.values, subject.multiplicities)
    elif m == "S_α(𝔸)":
        prof = seq_min_card_size_profile(subject.values, subject.multiplicities)

    base_aux = _auto_aux(spec, subject) if spec.aux_key else None
    for h in hs:
        aux = base_aux
        if spec.aux_key == AUX_HFOLD_PREV and h is not None and h >= 2:
            if hsizes is None or len(hsizes) < h - 1:
                hsizes = hfold_sizes(elems, max(hs))
            aux = {AUX_HFOLD_PREV: hsizes[h - 2]}
        for alpha in alphas:
            inst = Instance(subject, alpha=alpha, h=h,
                            auxiliary_cardinalities=aux)
            reason = spec.check(inst)
            if reason is not None:
                res.counts[3] += 1
                continue
            if m == "2A":
                measured = hsizes[1]
            elif m == "hA":
                measured = hsizes[h - 1]
            elif prof is not None:
                measured = prof[(h if alpha is None else alpha) - 1]
            else:
                measured = scalar
            status, inverse, _ = _classify(spec, inst, measured)
            if status == PASS:
                res.counts[0] += 1
            elif status == EQUALITY:
                res.counts[1] += 1
                res.eq_wit.append(_instance_label(subject, h, alpha))
            else:
                res.counts[2] += 1
                res.viol.append(_instance_label(subject, h, alpha))
            if inverse == STRUCTURE_CONFIRMED:
                res.struct_confirmed += 1
            elif inverse == STRUCTURE_FAILED:
                res.struct_failed += 1
                res.struct_failed_wit.append(_instance_label(subject, h, alpha))


def _conjecture_task(k, lead, max_elem, after, res) -> None:
    # hand-inlined hot loop: the k in [8,11], max_elem <= 3k sweep visits
    # about 10^8 sets, so no Instance/ExactBound objects per set here
    small_cut = 2 * k - 5
    flat = 3 * k - 7
    for elems in iter_set_tuples(k, max_elem, EnumKind.ZERO_GCD1, lead):
        if after is not None and elems <= after:
            continue
        seen = 0
        pairs = 0
        for a in elems:
            pairs |= seen << a
            seen |= 1 << a
        measured = pairs.bit_count()
        amax = elems[-1]
        bound = amax + k - 2 if amax <= small_cut else flat
        if measured > bound:
            res.counts[0] += 1
        elif measured == bound:
            res.counts[1] += 1
            res.eq_wit.append(",".join(map(str, elems)))
        else:
            res.counts[2] += 1
            res.viol.append(",".join(map(str, elems)))


def _sweep_task(args) -> _TaskResult:
    (tag_value, k, lead, max_elem, mult_max, alpha_policy, h_values,
     after) = args
    t = TheoremId(tag_value)
    spec = spec_for(t)
    res = _TaskResult([0, 0, 0, 0], [], [])
    if t is TheoremId.FREIMAN_LEV_CONJECTURE:
        _conjecture_task(k, lead, max_elem, after, res)
        return res
    for elems in iter_set_tuples(k, max_elem, spec.kind, lead):
        if spec.sequence_based:
            for mults in iter_mult_vectors(k, mult_max):
                if after is not None and (elems, mults) <= after:
                    continue
                _eval_subject(spec, IntSequence(elems, mults), alpha_policy,
                              h_values, res)
        else:
            if after is not None and elems <= after:
                continue
            _eval_subject(spec, IntSet(elems), alpha_policy, h_values, res)
    return res


def _parse_cursor(after: Optional[str], sequence_based: bool):
    if after is None:
        return None
    if sequence_based:
        vals_text, mult_text = after.split(";")
        vals = tuple(int(x) for x in vals_text.split("=")[1].split(","))
        mults = tuple(int(x) for x in mult_text.split("=")[1].split(","))
        return (vals, mults)
    return tuple(int(x) for x in after.split(","))


def verify_range(t: TheoremId, k_range: Iterable[int], max_elem: int,
                 mult_max: int = 1, alpha_policy: AlphaPolicy = ALL_APPLICABLE,
                 jobs: int = 1, h_values: Optional[Sequence[int]] = None,
                 after: Optional[str] = None) -> VerificationReport:
    """Sweep every hypothesis-family instance in the box and aggregate.

    Deterministic for any jobs >= 1: work is partitioned into
    (cardinality, lead element) chunks of the lexicographic enumeration
    and merged back in enumeration order.
    """
    spec = spec_for(t)
    ks = sorted(set(k_range))
    if not ks or max_elem < 1:
        raise IndexRangeError("empty sweep range")
    cursor_tuple = _parse_cursor(after, spec.sequence_based)
    started = time.monotonic()
    tasks = [(t.value, k, lead, max_elem, mult_max, alpha_policy,
              tuple(h_values) if h_values else None, cursor_tuple)
             for k in ks for lead in range(1, max_elem + 1)]
    if jobs <= 1:
        results = map(_sweep_task, tasks)
        merged = _merge(results)
    else:
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            merged = _merge(pool.imap(_sweep_task, tasks, chunksize=1))
    counts, eq_wit, viol, sc, sf, sfw = merged
    if isinstance(alpha_policy, str):
        policy_text = alpha_policy
    else:
        policy_text = ",".join(str(a) for a in alpha_policy)
    report = VerificationReport(
        theorem=t.value,
        params={"k_min": ks[0], "k_max": ks[-1], "max_elem": max_elem,
                "mult_max": mult_max, "alpha_policy": policy_text},
        counts={"pass": counts[0], "equality": counts[1],
                "violation": counts[2], "inapplicable": counts[3]},
        equality_witnesses=eq_wit,
        violations=viol,
        structure={"confirmed": sc, "failed": sf, "failed_witnesses": sfw},
        cursor="COMPLETE",
        elapsed=time.monotonic() - started,
    )
    return report


def _merge(results) -> tuple:
    counts = [0, 0, 0, 0]
    eq_wit: list = []
    viol: list = []
    sc = sf = 0
    sfw: list = []
    for r in results:
        for i in range(4):
            counts[i] += r.counts[i]
        eq_wit.extend(r.eq_wit)
        viol.extend(r.viol)
        sc += r.struct_confirmed
        sf += r.struct_failed
        sfw.extend(r.struct_failed_wit)
    return counts, eq_wit, viol, sc, sf, sfw


# ------------------------------------------------------- special checks


def conjecture1_tightness(k: int, a_last: int) -> tuple[IntSet, int, int]:
    """Build {0,...,k-3} ∪ {a_last-1, a_last} and measure |2^A| against
    the piecewise bound it is claimed to meet exactly."""
    if k < 8:
        raise IndexRangeError("k ≥ 8 required")
    if a_last < k - 1:
        raise IndexRangeError("a_last ≥ k−1 required")
    a = IntSet.of(list(range(k - 2)) + [a_last - 1, a_last])
    expected = a_last + k - 2 if a_last <= 2 * k - 5 else 3 * k - 7
    measured = pairwise_distinct_size(a.elements)
    return a, expected, measured


def cross_theorem_consistency(inst: Instance) -> list[CheckOutcome]:
    """Run every cataloged theorem on one instance; tags whose hypotheses
    fail come back INAPPLICABLE.  Defaults: h = 2 and the smallest
    applicable α when the instance does not pin them."""
    out = []
    for t in TheoremId:
        spec = spec_for(t)
        h = inst.h
        if spec.needs_h and h is None:
            h = 2
        alpha = inst.alpha
        if spec.alpha_range is not None and alpha is None:
            try:
                rng = spec.alpha_range(inst.subject)
                alpha = rng[0] if len(rng) else None
            except (TypeError, AttributeError):
                alpha = None
        out.append(check_instance(t, Instance(
            inst.subject, alpha=alpha, h=h,
            auxiliary_cardinalities=inst.auxiliary_cardinalities)))
    return out
