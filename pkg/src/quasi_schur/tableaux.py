# tableaux.py
# Contains enumeration of semistandard, standard and quasi-Yamanouchi tableaux,
# descent compositions and the standardization bijection

import logging
from collections import Counter
from functools import lru_cache
from math import factorial
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .exceptions import ValidationError
from .models import Composition, Partition, Tableau


def superstandard(shape: Partition) -> Tableau:
    """The unique tableau of shape and weight equal to shape: i's in row i."""
    return Tableau(tuple((i,) * part for i, part in enumerate(shape.parts, start=1)))


def _horizontal_strips(target: Tuple[int, ...], lengths: Tuple[int, ...], count: int) -> Iterator[Tuple[int, ...]]:
    """Row increments adding a horizontal strip of `count` cells without leaving `target`."""
    def extend(row: int, left: int, chosen: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if row == len(target):
            if left == 0:
                yield chosen
            return
        ceiling = target[row] if row == 0 else min(target[row], lengths[row - 1])
        for k in range(min(left, ceiling - lengths[row]), -1, -1):
            yield from extend(row + 1, left - k, chosen + (k,))

    yield from extend(0, count, ())


@lru_cache(maxsize=None)
def _ssyt(shape: Partition, weight: Tuple[int, ...]) -> Tuple[Tableau, ...]:
    target = shape.parts
    found: List[Tableau] = []

    def fill(letter: int, lengths: Tuple[int, ...], rows: Tuple[Tuple[int, ...], ...]) -> None:
        if letter > len(weight):
            if lengths == target:
                found.append(Tableau(rows))
            return
        for step in _horizontal_strips(target, lengths, weight[letter - 1]):
            grown = tuple(rows[r] + (letter,) * step[r] for r in range(len(target)))
            fill(letter + 1, tuple(lengths[r] + step[r] for r in range(len(target))), grown)

    fill(1, (0,) * len(target), ((),) * len(target))
    return tuple(sorted(found, key=Tableau.reading_word))


def enumerate_ssyt(shape: Partition, weight: Sequence[int]) -> List[Tableau]:
    """All semistandard tableaux of the given shape and weight, ordered by reading word."""
    weight = tuple(int(c) for c in weight)
    if any(c < 0 for c in weight):
        raise ValidationError(f"Weight entries must be nonnegative: {list(weight)}")
    if shape.size != sum(weight):
        raise ValidationError(f"Shape {shape} and weight {list(weight)} have different sizes")
    if not shape.parts:
        return [Tableau(())]
    return list(_ssyt(shape, weight))


def enumerate_syt(shape: Partition) -> List[Tableau]:
    return enumerate_ssyt(shape, (1,) * shape.size)


def count_syt(shape: Partition) -> int:
    """f^shape by the hook-length formula."""
    conjugate = shape.conjugate()
    hooks = 1
    for r, part in enumerate(shape.parts):
        for c in range(part):
            hooks *= (part - c - 1) + (conjugate.parts[c] - r - 1) + 1
    return factorial(shape.size) // hooks


def kostka(shape: Partition, weight: Sequence[int]) -> int:
    return len(enumerate_ssyt(shape, weight))


def _row_positions(t: Tableau) -> Dict[int, int]:
    return {value: row for row, _, value in t.cells()}


def _require_standard(t: Tableau) -> None:
    if not t.is_standard():
        raise ValidationError(f"Tableau {t} is not standard")


def descent_set(t: Tableau) -> Tuple[int, ...]:
    """Letters i such that i+1 lies in a strictly higher row."""
    _require_standard(t)
    row_of = _row_positions(t)
    return tuple(i for i in range(1, t.size) if row_of[i + 1] > row_of[i])


def descent_composition(t: Tableau) -> Composition:
    return Composition.from_descent_set(descent_set(t), t.size)


def standardize(t: Tableau) -> Tableau:
    """Renumber equal letters left to right, by increasing column."""
    cells = sorted(t.cells(), key=lambda cell: (cell[2], cell[1]))
    relabel = {(row, column): k for k, (row, column, _) in enumerate(cells, start=1)}
    return Tableau(tuple(tuple(relabel[(r, c)] for c in range(1, len(row) + 1))
                         for r, row in enumerate(t.rows, start=1)))


def destandardize(t: Tableau) -> Tableau:
    """Collapse each run of letters between consecutive descents to a single letter."""
    descents = descent_set(t)
    letter = {}
    block = 1
    for i in range(1, t.size + 1):
        letter[i] = block
        if i in descents:
            block += 1
    return Tableau(tuple(tuple(letter[v] for v in row) for row in t.rows))


def is_quasi_yamanouchi(t: Tableau) -> bool:
    """Every letter i > 1 has an occurrence strictly above some occurrence of i - 1."""
    lowest: Dict[int, int] = {}
    highest: Dict[int, int] = {}
    for row, _, value in t.cells():
        lowest[value] = min(lowest.get(value, row), row)
        highest[value] = max(highest.get(value, row), row)
    for value in highest:
        if value == 1:
            continue
        if value - 1 not in lowest or highest[value] <= lowest[value - 1]:
            return False
    return True


@lru_cache(maxsize=None)
def _qyt(shape: Partition) -> Tuple[Tableau, ...]:
    found = [destandardize(t) for t in enumerate_syt(shape)]
    return tuple(sorted(found, key=Tableau.reading_word))


def enumerate_qyt(shape: Partition, weight: Optional[Sequence[int]] = None,
                  max_entry: Optional[int] = None) -> List[Tableau]:
    """Quasi-Yamanouchi tableaux of a shape, optionally of a fixed weight or bounded largest entry."""
    if not shape.parts:
        return [Tableau(())]
    if weight is not None:
        found = [t for t in enumerate_ssyt(shape, weight) if is_quasi_yamanouchi(t)]
    else:
        found = list(_qyt(shape))
    if max_entry is not None:
        found = [t for t in found if t.max_entry <= max_entry]
    return found


def quasi_kostka(shape: Partition, alpha: Sequence[int]) -> int:
    """QK_{shape,alpha}: the number of quasi-Yamanouchi tableaux of the shape with weight alpha."""
    return len(enumerate_qyt(shape, weight=tuple(alpha)))


@lru_cache(maxsize=None)
def qyt_weight_counts(shape: Partition) -> Mapping[Tuple[int, ...], int]:
    """Weights of QYT(shape) with multiplicity; one pass over SYT(shape) via destandardize."""
    counts = Counter(t.weight for t in _qyt(shape))
    logging.debug(f"QYT{shape}: {sum(counts.values())} tableaux over {len(counts)} weights")
    return MappingProxyType(dict(counts))
