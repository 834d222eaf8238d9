"""Integer sets and sequences: value types, affine maps, enumerators.

An IntSet is a finite set of distinct integers kept sorted.  An
IntSequence is a sorted tuple of distinct values together with a
multiplicity for each.  Enumerators yield the two hypothesis families
used throughout (positive gcd-1 sets, and zero-anchored gcd-1 sets),
in strict lexicographic order so sweeps can be split deterministically.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product
from typing import Iterable, Iterator, Optional, Sequence

from .errors import DegenerateInputError, IndexRangeError, InvalidDilationError


class EnumKind(Enum):
    # 0 < a_1 < ... < a_k, gcd = 1
    POSITIVE_GCD1 = "POSITIVE_GCD1"
    # 0 = a_0 < a_1 < ... < a_{k-1}, gcd = 1
    ZERO_GCD1 = "ZERO_GCD1"


@dataclass(frozen=True)
class IntSet:
    elements: tuple[int, ...]

    def __post_init__(self):
        if not self.elements:
            raise DegenerateInputError("IntSet must be nonempty")
        if any(b <= a for a, b in zip(self.elements, self.elements[1:])):
            raise DegenerateInputError("IntSet elements must be strictly increasing")

    @classmethod
    def of(cls, values: Iterable[int]) -> "IntSet":
        vals = tuple(sorted(values))
        if len(set(vals)) != len(vals):
            raise DegenerateInputError(f"duplicate elements in {vals}")
        return cls(vals)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    @property
    def min(self) -> int:
        return self.elements[0]

    @property
    def max(self) -> int:
        return self.elements[-1]

    def literal(self) -> str:
        return ",".join(str(a) for a in self.elements)

    @classmethod
    def parse(cls, text: str) -> "IntSet":
        return cls.of(int(tok) for tok in text.split(","))


@dataclass(frozen=True)
class IntSequence:
    values: tuple[int, ...]
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise DegenerateInputError("IntSequence must be nonempty")
        if len(self.values) != len(self.multiplicities):
            raise DegenerateInputError("values and multiplicities differ in length")
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise DegenerateInputError("IntSequence values must be strictly increasing")
        if any(r < 1 for r in self.multiplicities):
            raise DegenerateInputError("every multiplicity must be >= 1")

    @classmethod
    def of(cls, values: Iterable[int], multiplicities: Iterable[int]) -> "IntSequence":
        try:
            pairs = sorted(zip(values, multiplicities, strict=True))
        except ValueError as exc:
            raise DegenerateInputError(str(exc)) from None
        vals = tuple(v for v, _ in pairs)
        if len(set(vals)) != len(vals):
            raise DegenerateInputError(f"duplicate values in {vals}")
        return cls(vals, tuple(r for _, r in pairs))

    @property
    def k(self) -> int:
        return len(self.values)

    @property
    def size(self) -> int:
        return sum(self.multiplicities)

    def value_set(self) -> IntSet:
        return IntSet(self.values)

    def literal(self) -> str:
        return ("values=" + ",".join(str(v) for v in self.values)
                + ";mult=" + ",".join(str(r) for r in self.multiplicities))

    @classmethod
    def parse(cls, values_text: str, mult_text: str) -> "IntSequence":
        return cls.of((int(t) for t in values_text.split(",")),
                      (int(t) for t in mult_text.split(",")))


def gcd_of(a: IntSet) -> int:
    """d(A): gcd of the elements (absolute values)."""
    if a.elements == (0,):
        raise DegenerateInputError("gcd of {0} is undefined")
    return math.gcd(*[abs(x) for x in a.elements])


def translate(a: IntSet, t: int) -> IntSet:
    return IntSet(tuple(x + t for x in a.elements))


def dilate(a: IntSet, d: int) -> IntSet:
    if d == 0:
        raise InvalidDilationError("dilation factor must be nonzero")
    return IntSet.of(d * x for x in a.elements)


def normal_form(a: IntSet) -> IntSet:
    """Translate the minimum to 0 and divide by the gcd of differences."""
    if len(a) < 2:
        raise DegenerateInputError("normal form needs at least two elements")
    a0 = a.min
    d = math.gcd(*[x - a0 for x in a.elements[1:]])
    return IntSet(tuple((x - a0) // d for x in a.elements))


def ap_cover_length(a: IntSet) -> int:
    """Length of the shortest arithmetic progression containing A."""
    if len(a) < 2:
        return 1
    a0 = a.min
    d = math.gcd(*[x - a0 for x in a.elements[1:]])
    return (a.max - a0) // d + 1


def is_arithmetic_progression(a: IntSet) -> bool:
    return ap_cover_length(a) == len(a)


def m_index(multiplicities: Sequence[int], alpha: int) -> int:
    """The unique m with prefix(m-1) <= alpha < prefix(m), 1-based."""
    total = sum(multiplicities)
    if not 1 <= alpha < total:
        raise IndexRangeError(f"alpha={alpha} outside [1, {total - 1}]")
    prefix = []
    acc = 0
    for r in multiplicities:
        acc += r
        prefix.append(acc)
    return bisect_right(prefix, alpha) + 1


def iter_set_tuples(k: int, max_elem: int, kind: EnumKind,
                    lead: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Raw element tuples for enumerate_sets, lexicographic, gcd-1 only.

    With `lead` given, restricts to sets whose smallest nonzero element
    equals `lead` (the unit of work partitioning in parallel sweeps).
    """
    if k < 1:
        raise IndexRangeError("k must be >= 1")
    if kind is EnumKind.POSITIVE_GCD1:
        leads = range(1, max_elem + 1) if lead is None else (lead,)
        for f in leads:
            if k == 1:
                if f == 1:
                    yield (1,)
                continue
            for rest in combinations(range(f + 1, max_elem + 1), k - 1):
                if math.gcd(f, *rest) == 1:
                    yield (f, *rest)
    else:
        if k == 1:
            return  # {0} alone has no gcd-1 representative
        leads = range(1, max_elem + 1) if lead is None else (lead,)
        for f in leads:
            if k == 2:
                if f == 1:
                    yield (0, 1)
                continue
            for rest in combinations(range(f + 1, max_elem + 1), k - 2):
                if math.gcd(f, *rest) == 1:
                    yield (0, f, *rest)


def enumerate_sets(k: int, max_elem: int, kind: EnumKind,
                   after: Optional[tuple[int, ...]] = None) -> Iterator[IntSet]:
    """All gcd-1 sets of the given kind, cardinality k, max element <=
    max_elem, in lexicographic order; restartable after a given tuple."""
    for elems in iter_set_tuples(k, max_elem, kind):
        if after is not None and elems <= after:
            continue
        yield IntSet(elems)


def iter_mult_vectors(k: int, mult_max: int) -> Iterator[tuple[int, ...]]:
    return product(range(1, mult_max + 1), repeat=k)


def enumerate_sequences(k: int, max_elem: int, mult_max: int, kind: EnumKind,
                        after: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None,
                        ) -> Iterator[IntSequence]:
    """Every sequence whose value set comes from enumerate_sets, paired
    with every multiplicity vector in [1, mult_max]^k, value set major."""
    if mult_max < 1:
        raise IndexRangeError("mult_max must be >= 1")
    for elems in iter_set_tuples(k, max_elem, kind):
        if after is not None and elems < after[0]:
            continue
        for mults in iter_mult_vectors(k, mult_max):
            if after is not None and (elems, mults) <= after:
                continue
            yield IntSequence(elems, mults)
