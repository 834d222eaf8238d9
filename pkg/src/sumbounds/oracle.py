"""Brute-force reference computations, independent of the bitset engine.

Everything here works straight from the set-builder definitions using
itertools enumeration.  Exponential on purpose; inputs are capped.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, product
from typing import Optional, Union

from .core import IntSequence, IntSet
from .errors import EmptyCollectionError, OracleSizeError
from .engine import SumSet

_CAP = 20

MODES = ("h_fold", "restricted", "subset_sums", "min_card", "bounded_card")


def _set_sums(a: IntSet, mode: str, h: Optional[int], alpha: Optional[int]) -> set[int]:
    elems = a.elements
    k = len(elems)
    if mode == "h_fold":
        return set(map(sum, combinations_with_replacement(elems, h)))
    if mode == "restricted":
        return set(map(sum, combinations(elems, h)))
    if mode == "subset_sums":
        lo, hi = 1, k
    elif mode == "min_card":
        lo, hi = alpha, k
    elif mode == "bounded_card":
        lo, hi = 1, k - alpha
    else:
        raise ValueError(f"unknown oracle mode {mode!r}")
    out: set[int] = set()
    for c in range(lo, hi + 1):
        out.update(map(sum, combinations(elems, c)))
    return out


def _seq_sums(s: IntSequence, mode: str, alpha: Optional[int]) -> set[int]:
    size = s.size
    if mode == "subset_sums":
        lo, hi = 1, size
    elif mode == "min_card":
        lo, hi = alpha, size
    elif mode == "bounded_card":
        lo, hi = 1, size - alpha
    else:
        raise ValueError(f"oracle mode {mode!r} undefined for sequences")
    out: set[int] = set()
    for counts in product(*(range(r + 1) for r in s.multiplicities)):
        used = sum(counts)
        if lo <= used <= hi:
            out.add(sum(c * v for c, v in zip(counts, s.values)))
    return out


def brute_force_oracle(subject: Union[IntSet, IntSequence], mode: str,
                       h: Optional[int] = None,
                       alpha: Optional[int] = None) -> SumSet:
    """Same contract as the corresponding engine operation, by direct
    enumeration of subsets / count vectors / h-tuples."""
    if isinstance(subject, IntSequence):
        if subject.size > _CAP:
            raise OracleSizeError(f"sequence size {subject.size} exceeds {_CAP}")
        sums = _seq_sums(subject, mode, alpha)
    else:
        if len(subject) > _CAP:
            raise OracleSizeError(f"set size {len(subject)} exceeds {_CAP}")
        sums = _set_sums(subject, mode, h, alpha)
    if not sums:
        raise EmptyCollectionError(f"oracle {mode} produced no sums")
    return SumSet(tuple(sorted(sums)), f"oracle:{mode}(h={h},alpha={alpha})")
