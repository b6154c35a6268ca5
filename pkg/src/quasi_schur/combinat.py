# combinat.py
# Contains partition and composition enumeration, orders, and the box lattice L(w,h)

import logging
from functools import lru_cache
from itertools import accumulate, zip_longest
from typing import Dict, Iterable, List, Optional, Tuple, Union

from .exceptions import ValidationError
from .models import BoxLattice, Composition, Partition

Indexed = Union[Partition, Composition]


@lru_cache(maxsize=None)
def _partition_tuples(n: int, max_len: Optional[int], max_part: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    if max_len == 0:
        return ()
    rest_len = None if max_len is None else max_len - 1
    result = []
    for first in range(min(n, max_part), 0, -1):
        for tail in _partition_tuples(n - first, rest_len, first):
            result.append((first,) + tail)
    return tuple(result)


def partitions_of(n: int, max_len: Optional[int] = None, max_part: Optional[int] = None) -> List[Partition]:
    """All partitions of n within the bounds, in reverse lexicographic order."""
    if n < 0:
        raise ValidationError(f"Cannot list partitions of a negative number: {n}")
    bound = n if max_part is None else max_part
    return [Partition(parts) for parts in _partition_tuples(n, max_len, bound)]


def compositions_of(n: int) -> List[Composition]:
    """All 2^(n-1) compositions of n, in reverse lexicographic order."""
    if n < 0:
        raise ValidationError(f"Cannot list compositions of a negative number: {n}")
    if n == 0:
        return [Composition(())]
    result = []
    for first in range(n, 0, -1):
        for tail in compositions_of(n - first):
            result.append(Composition((first,) + tail.parts))
    return result


def dominance_leq(a: Indexed, b: Indexed) -> bool:
    """True iff every partial sum of a is at most the matching partial sum of b."""
    if a.size != b.size:
        raise ValidationError(f"Dominance compares equal sizes, got {a} and {b}")
    sums_a = accumulate(a.parts)
    sums_b = accumulate(b.parts)
    return all(x <= y for x, y in zip_longest(sums_a, sums_b, fillvalue=a.size))


def lex_cmp(a: Indexed, b: Indexed) -> int:
    """Lexicographic comparison of part sequences: -1, 0 or 1. A proper prefix is smaller."""
    if a.parts == b.parts:
        return 0
    return 1 if a.parts > b.parts else -1


def lex_max(indices: Iterable[Indexed]) -> Optional[Indexed]:
    return max(indices, key=lambda index: index.parts, default=None)


def contains(outer: Partition, inner: Partition) -> bool:
    """Containment of Young diagrams: inner fits inside outer."""
    return inner.length <= outer.length and all(i <= o for i, o in zip(inner.parts, outer.parts))


def box_elements(lattice: BoxLattice) -> List[List[Partition]]:
    """Elements of L(w,h) grouped by rank; group k holds the partitions of size k."""
    return [partitions_of(k, max_len=lattice.h, max_part=lattice.w) for k in range(lattice.max_rank + 1)]


def rank_sizes(lattice: BoxLattice) -> List[int]:
    return [len(group) for group in box_elements(lattice)]


def box_complement(mu: Partition, lattice: BoxLattice) -> Partition:
    """The partition (w - mu_h, ..., w - mu_1) with zeros stripped."""
    if mu not in lattice:
        raise ValidationError(f"{mu} is not an element of {lattice}")
    return Partition(tuple(lattice.w - part for part in reversed(mu.padded(lattice.h))))


def covers(mu: Partition, lattice: BoxLattice) -> List[Tuple[Partition, int]]:
    """Upper covers of mu inside the box, each with the 1-based column of the added cell.

    Ordered by increasing column.
    """
    if mu not in lattice:
        raise ValidationError(f"{mu} is not an element of {lattice}")
    parts = list(mu.parts)
    result = []
    # a cell can be added at the end of row r when the row below is longer
    for row in range(len(parts), -1, -1):
        if row == len(parts):
            if row < lattice.h:
                result.append((Partition(tuple(parts) + (1,)), 1))
            continue
        if parts[row] < lattice.w and (row == 0 or parts[row - 1] > parts[row]):
            grown = parts[:]
            grown[row] += 1
            result.append((Partition(tuple(grown)), grown[row]))
    return result


def added_column(lower: Partition, upper: Partition) -> Optional[int]:
    """Column of the single cell in upper / lower, or None when upper does not cover lower."""
    if upper.size != lower.size + 1 or not contains(upper, lower):
        return None
    for row, part in enumerate(upper.parts):
        if part != (lower.parts[row] if row < lower.length else 0):
            return part
    return None


def subpartition_strip(lam: Partition, pat: Partition) -> Optional[Partition]:
    """Multiplicity-wise difference lam - pat, or None when pat is not a subpartition of lam."""
    have = lam.multiplicities
    remaining: Dict[int, int] = dict(have)
    for value, count in pat.multiplicities.items():
        if have.get(value, 0) < count:
            return None
        remaining[value] -= count
    return Partition.from_multiplicities(remaining)


def subpartition_add(lam: Partition, pat: Partition) -> Partition:
    """lam (+) pat: the union of the multisets of parts."""
    merged = dict(lam.multiplicities)
    for value, count in pat.multiplicities.items():
        merged[value] = merged.get(value, 0) + count
    return Partition.from_multiplicities(merged)


def log_lattice_summary(lattice: BoxLattice) -> None:
    sizes = rank_sizes(lattice)
    logging.debug(f"{lattice}: {sum(sizes)} elements, rank sizes {sizes}")
