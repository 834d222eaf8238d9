"""Sum-set computations via bitset dynamic programming.

Achievable sums live in a Python int used as a bit vector: bit i set
means the sum (offset + i) is achievable, where offset is the sum of
all negative admissible contributions (so indices never go negative).
One cardinality-stratified pass serves the plain, minimum-cardinality
and bounded-cardinality variants at once; the h-fold sumset with
repetition is h-1 single-addition convolutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .core import IntSequence, IntSet
from .errors import EmptyCollectionError, IndexRangeError


@dataclass(frozen=True)
class SumSet:
    sums: tuple[int, ...]
    provenance: str

    def __post_init__(self):
        if not self.sums:
            raise EmptyCollectionError(f"empty sum set from {self.provenance}")

    def __len__(self) -> int:
        return len(self.sums)

    def __iter__(self):
        return iter(self.sums)

    def __contains__(self, x: int) -> bool:
        return x in set(self.sums)

    def as_set(self) -> set[int]:
        return set(self.sums)


def _shl(bits: int, a: int) -> int:
    return bits << a if a >= 0 else bits >> -a


def _bits_to_sums(bits: int, offset: int) -> tuple[int, ...]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1 + offset)
        bits &= bits - 1
    return tuple(out)


# ---------------------------------------------------------------- raw layer


def set_layers(elems: Sequence[int]) -> tuple[list[int], int]:
    """Bit vectors of subset sums stratified by cardinality.

    layers[c] holds sums of the c-element subsets; shared offset is the
    sum of the negative elements.
    """
    offset = sum(a for a in elems if a < 0)
    k = len(elems)
    layers = [0] * (k + 1)
    layers[0] = 1 << -offset
    for a in elems:
        for c in range(k - 1, -1, -1):
            if layers[c]:
                layers[c + 1] |= _shl(layers[c], a)
    return layers, offset


def seq_layers(values: Sequence[int], mults: Sequence[int]) -> tuple[list[int], int]:
    """Like set_layers for a sequence: layers indexed by number of terms
    used, each value usable up to its multiplicity."""
    offset = sum(a * r for a, r in zip(values, mults) if a < 0)
    cap = sum(mults)
    layers = [0] * (cap + 1)
    layers[0] = 1 << -offset
    top = 0
    for a, r in zip(values, mults):
        for _ in range(r):
            top = min(top + 1, cap)
            for c in range(top - 1, -1, -1):
                if layers[c]:
                    layers[c + 1] |= _shl(layers[c], a)
    return layers, offset


def hfold_bits(elems: Sequence[int], h: int) -> tuple[int, int]:
    """Bits/offset of hA (repetition allowed)."""
    if h < 1:
        raise IndexRangeError("h must be >= 1")
    amin0 = min(0, min(elems))
    bits = 0
    for a in elems:
        bits |= 1 << (a - amin0)
    offset = amin0
    step = [(a - amin0) for a in elems]
    for _ in range(h - 1):
        nxt = 0
        for s in step:
            nxt |= bits << s
        bits = nxt
        offset += amin0
    return bits, offset


def hfold_sizes(elems: Sequence[int], h_max: int) -> list[int]:
    """[|1A|, |2A|, ..., |h_max A|] in one convolution chain."""
    amin0 = min(0, min(elems))
    bits = 0
    for a in elems:
        bits |= 1 << (a - amin0)
    sizes = [bits.bit_count()]
    step = [(a - amin0) for a in elems]
    for _ in range(h_max - 1):
        nxt = 0
        for s in step:
            nxt |= bits << s
        bits = nxt
        sizes.append(bits.bit_count())
    return sizes


def union_suffix_sizes(layers: Sequence[int]) -> list[int]:
    """sizes[c] = |union of layers[c:]| for c in 1..top (1-indexed list)."""
    acc = 0
    rev = []
    for c in range(len(layers) - 1, 0, -1):
        acc |= layers[c]
        rev.append(acc.bit_count())
    return rev[::-1]


def pairwise_distinct_size(elems: Sequence[int]) -> int:
    """|2^A| without building full layers."""
    amin0 = min(0, min(elems))
    seen = 0
    pairs = 0
    for a in elems:
        # both operands carry offset amin0, so pair sums carry 2*amin0
        pairs |= seen << (a - amin0)
        seen |= 1 << (a - amin0)
    return pairs.bit_count()


# ------------------------------------------------------------- public ops


def total_sum(subject: Union[IntSet, IntSequence]) -> int:
    """Sum of all elements, with multiplicity for sequences."""
    if isinstance(subject, IntSequence):
        return sum(a * r for a, r in zip(subject.values, subject.multiplicities))
    return sum(subject.elements)


def h_fold_sumset(a: IntSet, h: int) -> SumSet:
    """hA: sums of h elements with repetition."""
    if h < 1:
        raise IndexRangeError("h must be >= 1")
    bits, offset = hfold_bits(a.elements, h)
    return SumSet(_bits_to_sums(bits, offset), f"h_fold(h={h})")


def restricted_h_fold_sumset(a: IntSet, h: int) -> SumSet:
    """h^A: sums of h pairwise-distinct elements."""
    if not 1 <= h <= len(a):
        raise EmptyCollectionError(f"restricted h={h} needs 1 <= h <= {len(a)}")
    layers, offset = set_layers(a.elements)
    return SumSet(_bits_to_sums(layers[h], offset), f"restricted_h_fold(h={h})")


def subset_sums(a: IntSet) -> SumSet:
    """S(A): sums over all nonempty subsets."""
    layers, offset = set_layers(a.elements)
    acc = 0
    for c in range(1, len(layers)):
        acc |= layers[c]
    return SumSet(_bits_to_sums(acc, offset), "subset_sums")


def subset_sums_min_card(a: IntSet, alpha: int) -> SumSet:
    """S_alpha(A): sums of subsets with at least alpha elements."""
    if not 1 <= alpha <= len(a):
        raise EmptyCollectionError(f"alpha={alpha} needs 1 <= alpha <= {len(a)}")
    layers, offset = set_layers(a.elements)
    acc = 0
    for c in range(alpha, len(layers)):
        acc |= layers[c]
    return SumSet(_bits_to_sums(acc, offset), f"subset_sums_min_card(alpha={alpha})")


def subset_sums_bounded_card(a: IntSet, alpha: int) -> SumSet:
    """S_1^alpha(A): sums of subsets with 1 <= size <= |A| - alpha."""
    if not 1 <= alpha <= len(a) - 1:
        raise EmptyCollectionError(f"alpha={alpha} needs 1 <= alpha <= {len(a) - 1}")
    layers, offset = set_layers(a.elements)
    acc = 0
    for c in range(1, len(a) - alpha + 1):
        acc |= layers[c]
    return SumSet(_bits_to_sums(acc, offset), f"subset_sums_bounded_card(alpha={alpha})")


def subsequence_sums(s: IntSequence) -> SumSet:
    """S(A) for a sequence: sums over nonempty subsequences."""
    layers, offset = seq_layers(s.values, s.multiplicities)
    acc = 0
    for c in range(1, len(layers)):
        acc |= layers[c]
    return SumSet(_bits_to_sums(acc, offset), "subsequence_sums")


def subsequence_sums_min_card(s: IntSequence, alpha: int) -> SumSet:
    if not 1 <= alpha <= s.size:
        raise EmptyCollectionError(f"alpha={alpha} needs 1 <= alpha <= {s.size}")
    layers, offset = seq_layers(s.values, s.multiplicities)
    acc = 0
    for c in range(alpha, len(layers)):
        acc |= layers[c]
    return SumSet(_bits_to_sums(acc, offset),
                  f"subsequence_sums_min_card(alpha={alpha})")


def subsequence_sums_bounded_card(s: IntSequence, alpha: int) -> SumSet:
    if not 1 <= alpha <= s.size - 1:
        raise EmptyCollectionError(f"alpha={alpha} needs 1 <= alpha <= {s.size - 1}")
    layers, offset = seq_layers(s.values, s.multiplicities)
    acc = 0
    for c in range(1, s.size - alpha + 1):
        acc |= layers[c]
    return SumSet(_bits_to_sums(acc, offset),
                  f"subsequence_sums_bounded_card(alpha={alpha})")


# ----------------------------------------------- size profiles for sweeps


def subset_sums_size(elems: Sequence[int]) -> int:
    layers, _ = set_layers(elems)
    acc = 0
    for c in range(1, len(layers)):
        acc |= layers[c]
    return acc.bit_count()


def min_card_size_profile(elems: Sequence[int]) -> list[int]:
    """profile[alpha-1] = |S_alpha(A)| for alpha in 1..k."""
    layers, _ = set_layers(elems)
    return union_suffix_sizes(layers)


def restricted_size_profile(elems: Sequence[int]) -> list[int]:
    """profile[h-1] = |h^A| for h in 1..k."""
    layers, _ = set_layers(elems)
    return [layers[h].bit_count() for h in range(1, len(layers))]


def subsequence_sums_size(values: Sequence[int], mults: Sequence[int]) -> int:
    layers, _ = seq_layers(values, mults)
    acc = 0
    for c in range(1, len(layers)):
        acc |= layers[c]
    return acc.bit_count()


def seq_min_card_size_profile(values: Sequence[int], mults: Sequence[int]) -> list[int]:
    """profile[alpha-1] = |S_alpha(sequence)| for alpha in 1..size."""
    layers, _ = seq_layers(values, mults)
    return union_suffix_sizes(layers)
