"""Brute-force enumeration of Schreier subsets of {k, 2k, ..., nk}.

A subset is a bitmask over indices 1..n, bit ``i - 1`` standing for the
element ``i*k``. Counting is a vectorised scan over all masks (numpy),
enumeration decodes the surviving masks in ascending order.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterator, List

import numpy as np

from .core import SubsetWitness

DEFAULT_CAP = 24
_CHUNK_BITS = 20


class CapExceeded(ValueError):
    pass


class Mode(enum.Enum):
    SCHREIER = "schreier"          # min F >= |F|
    MAXIMAL = "maximal"            # min F == |F|
    STRICT = "strict"              # min F > |F|


@dataclass(frozen=True)
class EnumerationQuery:
    k: int
    n: int
    mode: Mode = Mode.SCHREIER
    require_max: bool = True

    def __post_init__(self):
        if self.k < 1 or self.n < 1:
            raise ValueError(f"need k >= 1 and n >= 1, got k={self.k}, n={self.n}")


_Predicate = Callable[[np.ndarray, np.ndarray], np.ndarray]


def _mode_predicate(mode: Mode) -> _Predicate:
    if mode is Mode.SCHREIER:
        return lambda least, size: least >= size
    if mode is Mode.MAXIMAL:
        return lambda least, size: least == size
    return lambda least, size: least > size


def _check_cap(size: int, cap: int) -> None:
    if size > cap:
        raise CapExceeded(f"ground set of {size} multiples exceeds enumeration cap {cap}")


def _mask_chunks(size: int, require_max: bool) -> Iterator[np.ndarray]:
    """All candidate masks over ``size`` indices, ascending, in bounded chunks."""
    if require_max:
        top = np.int64(1) << (size - 1)
        lo, hi = 0, 1 << (size - 1)
    else:
        top = np.int64(0)
        lo, hi = 1, 1 << size
    step = 1 << _CHUNK_BITS
    for start in range(lo, hi, step):
        yield np.arange(start, min(start + step, hi), dtype=np.int64) | top


def _scan(k: int, size: int, require_max: bool, keep: _Predicate) -> Iterator[np.ndarray]:
    for masks in _mask_chunks(size, require_max):
        lowbit = masks & -masks
        least = (np.bitwise_count(lowbit - 1).astype(np.int64) + 1) * k
        card = np.bitwise_count(masks).astype(np.int64)
        yield masks[keep(least, card)]


def _decode(k: int, mask: int) -> SubsetWitness:
    idx = []
    i = 1
    while mask:
        if mask & 1:
            idx.append(i)
        mask >>= 1
        i += 1
    return SubsetWitness.from_indices(k, idx)


def enumerate_sets(q: EnumerationQuery, cap: int = DEFAULT_CAP) -> List[SubsetWitness]:
    """All qualifying subsets, in ascending bitmask order."""
    _check_cap(q.n, cap)
    out: List[SubsetWitness] = []
    for hits in _scan(q.k, q.n, q.require_max, _mode_predicate(q.mode)):
        out.extend(_decode(q.k, int(m)) for m in hits)
    return out


def count(q: EnumerationQuery, cap: int = DEFAULT_CAP) -> int:
    _check_cap(q.n, cap)
    return sum(int(h.size) for h in _scan(q.k, q.n, q.require_max, _mode_predicate(q.mode)))


def count_schreier(k: int, n: int, cap: int = DEFAULT_CAP) -> int:
    return count(EnumerationQuery(k, n, Mode.SCHREIER), cap)


def count_maximal(k: int, n: int, cap: int = DEFAULT_CAP) -> int:
    return count(EnumerationQuery(k, n, Mode.MAXIMAL), cap)


def count_by_cardinality(k: int, n: int, strict: bool, i: int, cap: int = DEFAULT_CAP) -> int:
    """Size of the level sets used to compare two copies of S_{k,n}.

    strict:   F within {k..nk}, max F = nk, min F > |F| = i.
    relaxed:  F within {k..(n+1)k}, max F = (n+1)k, min F >= |F| = i > min F - k.
    """
    if k < 1 or n < 1 or i < 1:
        raise ValueError("k, n and i must be positive")
    if strict:
        size = n

        def keep(least, card):
            return (card == i) & (least > card)
    else:
        size = n + 1

        def keep(least, card):
            return (card == i) & (least >= card) & (card > least - k)

    _check_cap(size, cap)
    return sum(int(h.size) for h in _scan(k, size, True, keep))


def _as_set(k: int, n: int, mode: Mode, cap: int) -> set:
    return {w.elements for w in enumerate_sets(EnumerationQuery(k, n, mode), cap)}


def verify_phi_injection(k: int, n: int, cap: int = DEFAULT_CAP) -> bool:
    """Shifting every set of S_{k,n} by k lands injectively inside S_{k,n+1}."""
    _check_cap(n + 1, cap)
    source = enumerate_sets(EnumerationQuery(k, n), cap)
    target = _as_set(k, n + 1, Mode.SCHREIER, cap)
    images = [w.shifted(k).elements for w in source]
    return len(set(images)) == len(images) and all(im in target for im in images)


def verify_partition_identity(k: int, n: int, cap: int = DEFAULT_CAP) -> bool:
    """Level-by-level match between two copies of S_{k,n} and S_{k,n+1} plus the maximal sets.

    Checks |L_{k,n,i}| == |R_{k,n,i+1}| for 1 <= i <= n, that the strict sets
    are exactly the non-maximal Schreier sets, and that both complements
    S_{k,n} minus maximal and S_{k,n+1} minus the shifted copy have equal size.
    """
    _check_cap(n + 1, cap)
    for i in range(1, n + 1):
        if count_by_cardinality(k, n, True, i, cap) != count_by_cardinality(k, n, False, i + 1, cap):
            return False
    schreier = _as_set(k, n, Mode.SCHREIER, cap)
    maximal = _as_set(k, n, Mode.MAXIMAL, cap)
    strict = _as_set(k, n, Mode.STRICT, cap)
    if not maximal <= schreier or strict != schreier - maximal:
        return False
    shifted = {tuple(e + k for e in f) for f in schreier}
    upper = _as_set(k, n + 1, Mode.SCHREIER, cap)
    return len(schreier - maximal) == len(upper - shifted)
