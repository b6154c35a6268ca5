# chains.py
# Contains the column operators and the symmetric chain decompositions of L(w,h) for w = 2, 3, 4

import logging
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Set, Tuple

from .combinat import box_elements, subpartition_add, subpartition_strip
from .exceptions import CrossCheckError, UnsupportedWidthError, ValidationError
from .models import BoxLattice, ChainDecomposition, OperatorStep, Partition, TwoRowPoly

SUPPORTED_WIDTHS = (2, 3, 4)

Multiplicities = Tuple[int, ...]
Step = Optional[Tuple[Partition, int]]

SHIFT_W3 = Partition((3, 1, 1, 1))
SHIFT_W4 = Partition((4, 1, 1))
SHIFT_PAIR = Partition((2, 2))


def multiplicities(lam: Partition, w: int) -> Multiplicities:
    """(m_1, ..., m_w)."""
    return tuple(lam.multiplicity(i) for i in range(1, w + 1))


def from_multiplicities(m: Multiplicities) -> Partition:
    return Partition.from_multiplicities({i: count for i, count in enumerate(m, start=1)})


def add_column(m: Multiplicities, column: int) -> Multiplicities:
    """Add a cell in the given column: a part column-1 becomes column (column 1 adds a part 1)."""
    grown = list(m)
    if column > 1:
        if grown[column - 2] == 0:
            raise CrossCheckError(f"No part {column - 1} to extend in multiplicities {m}")
        grown[column - 2] -= 1
    grown[column - 1] += 1
    return tuple(grown)


def remove_column(m: Multiplicities, column: int) -> Multiplicities:
    """Remove a cell from the given column: a part column becomes column-1."""
    shrunk = list(m)
    if shrunk[column - 1] == 0:
        raise CrossCheckError(f"No part {column} to shorten in multiplicities {m}")
    shrunk[column - 1] -= 1
    if column > 1:
        shrunk[column - 2] += 1
    return tuple(shrunk)


def _check_box(lam: Partition, w: int, h: int) -> None:
    if h < 0:
        raise ValidationError(f"Box height must be nonnegative, got {h}")
    if lam not in BoxLattice(w, h):
        raise ValidationError(f"{lam} is not an element of L({w},{h})")


class Width2Operators:
    """Boxes go alternately into columns 1 and 2."""

    @staticmethod
    def step(lam: Partition, h: int, direction: str) -> OperatorStep:
        _check_box(lam, 2, h)
        m = multiplicities(lam, 2)
        m1, m2 = m
        if direction == "f":
            if m1 % 2 == 1:
                column = 2
            elif m1 + m2 < h:
                column = 1
            else:
                column = None
        else:
            if m1 % 2 == 1:
                column = 1
            elif m2 > 0:
                column = 2
            else:
                column = None
        return _finish(1, "alternate", direction, m, column)


class Width3Operators:
    """The eight-case operators on L'(3,h), the elements without a (3,1,1,1) subpartition."""

    @staticmethod
    def in_stratum(lam: Partition) -> bool:
        m1, _, m3 = multiplicities(lam, 3)
        return m3 == 0 or m1 <= 2

    @staticmethod
    def phase(m: Multiplicities) -> int:
        m1, m2, m3 = m
        if m3 == 0 and (((m1 + m2) % 2 == 0 and m1 >= 1) or ((m1 + m2) % 2 == 1 and m1 > 2)):
            return 1
        return 2

    @staticmethod
    def case(m: Multiplicities) -> str:
        m1, m2, m3 = m
        if Width3Operators.phase(m) == 1:
            return "1" if (m1 + m2 + m3) % 2 == 1 else "2"
        table = {(0, 0): "3", (0, 1): "4", (1, 0): "5", (1, 1): "6", (2, 0): "7", (2, 1): "8"}
        key = (m1, m2 % 2)
        if key not in table:
            raise CrossCheckError(f"Multiplicities {m} match no case of the width-3 operators")
        return table[key]

    @staticmethod
    def step(lam: Partition, h: int, direction: str) -> OperatorStep:
        _check_box(lam, 3, h)
        if not Width3Operators.in_stratum(lam):
            raise ValidationError(f"{lam} contains (3,1,1,1) and is outside L'(3,{h})")
        m = multiplicities(lam, 3)
        m1, m2, m3 = m
        length = m1 + m2 + m3
        case = Width3Operators.case(m)
        if direction == "f":
            column = {
                "1": 2, "2": 2,
                "3": 1 if length < h else None,
                "4": 3, "5": 2,
                "6": 1 if length < h else None,
                "7": 2, "8": 3,
            }[case]
        else:
            if case in ("1", "2"):
                column = 2 if m2 > 0 else None
            elif case == "3":
                column = 3 if m3 > 0 else (2 if m2 > 0 else None)
            elif case == "8":
                column = 2 if m3 == 0 else 1
            else:
                column = {"4": 2, "5": 1, "6": 2, "7": 3}[case]
        return _finish(Width3Operators.phase(m), case, direction, m, column)


class Width4Operators:
    """The ten-case operators on L''(4,h), the elements without (4,1,1) or (2,2) subpartitions."""

    @staticmethod
    def in_stratum(lam: Partition) -> bool:
        m1, m2, _, m4 = multiplicities(lam, 4)
        return (m4 == 0 or m1 <= 1) and m2 <= 1

    @staticmethod
    def phase(m: Multiplicities) -> int:
        m1, m2, m3, m4 = m
        d = m1 + m2 + m3
        if m4 == 0 and ((d % 2 == 0 and m1 + m2 >= 1) or (d % 2 == 1 and m1 > 1)):
            return 1
        return 2

    @staticmethod
    def case(m: Multiplicities) -> str:
        m1, m2, m3, _ = m
        if Width4Operators.phase(m) == 1:
            return ("1" if (m1 + m2 + m3) % 2 == 0 else "2") + ("a" if m2 == 0 else "b")
        table = {
            (0, 0, 0): "3", (1, 0, 0): "4", (0, 1, 0): "5", (0, 0, 1): "6",
            (1, 1, 1): "7", (1, 1, 0): "8", (1, 0, 1): "9", (0, 1, 1): "10",
        }
        key = (m1, m2, m3 % 2)
        if key not in table:
            raise CrossCheckError(f"Multiplicities {m} match no case of the width-4 operators")
        return table[key]

    @staticmethod
    def step(lam: Partition, h: int, direction: str) -> OperatorStep:
        _check_box(lam, 4, h)
        if not Width4Operators.in_stratum(lam):
            raise ValidationError(f"{lam} contains (4,1,1) or (2,2) and is outside L''(4,{h})")
        m = multiplicities(lam, 4)
        m1, m2, m3, m4 = m
        length = m1 + m2 + m3 + m4
        case = Width4Operators.case(m)
        if direction == "f":
            column = {
                "1a": 2, "1b": 3, "2a": 2, "2b": 3,
                "3": 1 if length < h else None,
                "4": 2, "5": 3, "6": 4, "7": 4, "8": 3, "9": 2,
                "10": 1 if length < h else None,
            }[case]
        else:
            if case in ("1a", "2a"):
                column = 3 if m3 > 0 else None
            elif case == "3":
                column = 4 if m4 > 0 else (3 if m3 > 0 else None)
            elif case == "7":
                column = 1 if m4 > 0 else 2
            else:
                column = {"1b": 2, "2b": 2, "4": 1, "5": 2, "6": 3, "8": 4, "9": 3, "10": 2}[case]
        return _finish(Width4Operators.phase(m), case, direction, m, column)


def _finish(phase: int, case: str, direction: str, m: Multiplicities, column: Optional[int]) -> OperatorStep:
    if column is None:
        return OperatorStep(phase, case, direction, None, None)
    moved = add_column(m, column) if direction == "f" else remove_column(m, column)
    return OperatorStep(phase, case, direction, column, from_multiplicities(moved))


OPERATORS = {2: Width2Operators, 3: Width3Operators, 4: Width4Operators}


def _as_step(step: OperatorStep) -> Step:
    return None if step.column is None else (step.result, step.column)


def f2(lam: Partition, h: int) -> Step:
    return _as_step(Width2Operators.step(lam, h, "f"))


def e2(lam: Partition, h: int) -> Step:
    return _as_step(Width2Operators.step(lam, h, "e"))


def f3(lam: Partition, h: int) -> Step:
    """Successor of lam in its chain of L'(3,h) with the column of the added cell, or None at a lowest weight."""
    return _as_step(Width3Operators.step(lam, h, "f"))


def e3(lam: Partition, h: int) -> Step:
    """Predecessor of lam in its chain of L'(3,h), or None at a highest weight."""
    return _as_step(Width3Operators.step(lam, h, "e"))


def f4(lam: Partition, h: int) -> Step:
    return _as_step(Width4Operators.step(lam, h, "f"))


def e4(lam: Partition, h: int) -> Step:
    return _as_step(Width4Operators.step(lam, h, "e"))


def _check_width(w: int) -> None:
    if w not in SUPPORTED_WIDTHS:
        raise UnsupportedWidthError(w)


def _elements(w: int, h: int) -> List[Partition]:
    if h < 0:
        return []
    return [lam for group in box_elements(BoxLattice(w, h)) for lam in group]


def stratum_w3(h: int) -> List[Partition]:
    """L'(3,h)."""
    return [lam for lam in _elements(3, h) if Width3Operators.in_stratum(lam)]


def strata_w4(h: int) -> Dict[str, List[Partition]]:
    """L''(4,h) and L'(4,h): no (4,1,1) and (2,2) subpartitions, and no (4,1,1) subpartition."""
    without_hook = [lam for lam in _elements(4, h) if subpartition_strip(lam, SHIFT_W4) is None]
    return {
        "L''": [lam for lam in without_hook if Width4Operators.in_stratum(lam)],
        "L'": without_hook,
    }


def _stratum(w: int, h: int) -> List[Partition]:
    if w == 2:
        return _elements(2, h)
    if w == 3:
        return stratum_w3(h)
    return strata_w4(h)["L''"]


def highest_weights(w: int, h: int) -> List[Partition]:
    """Elements of the operator stratum with no predecessor."""
    _check_width(w)
    return [lam for lam in _stratum(w, h) if OPERATORS[w].step(lam, h, "e").column is None]


def lowest_weights(w: int, h: int) -> List[Partition]:
    """Elements of the operator stratum with no successor."""
    _check_width(w)
    return [lam for lam in _stratum(w, h) if OPERATORS[w].step(lam, h, "f").column is None]


def _ones(count: int) -> Partition:
    return Partition((1,) * count)


def _operator_chains(w: int, h: int) -> List[Tuple[Partition, ...]]:
    """Chains of the operator stratum, each grown by f from a highest weight 1^m."""
    if h < 0:
        return []
    step: Callable[[Partition, int], Step] = {2: f2, 3: f3, 4: f4}[w]
    starts = [count for count in range(h + 1) if (count % 2 == 0 if w == 2 else count != 1)]
    chains = []
    for count in starts:
        chain = [_ones(count)]
        nxt = step(chain[-1], h)
        while nxt is not None:
            chain.append(nxt[0])
            nxt = step(chain[-1], h)
        chains.append(tuple(chain))
    return chains


def _shifted(chains: List[Tuple[Partition, ...]], pattern: Partition) -> List[Tuple[Partition, ...]]:
    return [tuple(subpartition_add(lam, pattern) for lam in chain) for chain in chains]


@lru_cache(maxsize=None)
def _scd_w3_chains(h: int) -> Tuple[Tuple[Partition, ...], ...]:
    if h < 0:
        return ()
    chains = _operator_chains(3, h) + _shifted(list(_scd_w3_chains(h - 4)), SHIFT_W3)
    logging.debug(f"L(3,{h}): {len(chains)} chains")
    return tuple(chains)


@lru_cache(maxsize=None)
def _scd_w4_without_hook(h: int) -> Tuple[Tuple[Partition, ...], ...]:
    """Chains of L'(4,h)."""
    if h < 0:
        return ()
    return tuple(_operator_chains(4, h) + _shifted(list(_scd_w4_without_hook(h - 2)), SHIFT_PAIR))


@lru_cache(maxsize=None)
def _scd_w4_chains(h: int) -> Tuple[Tuple[Partition, ...], ...]:
    if h < 0:
        return ()
    chains = (_operator_chains(4, h)
              + _shifted(list(_scd_w4_without_hook(h - 2)), SHIFT_PAIR)
              + _shifted(list(_scd_w4_chains(h - 3)), SHIFT_W4))
    logging.debug(f"L(4,{h}): {len(chains)} chains")
    return tuple(chains)


def _decomposition(w: int, h: int, chains) -> ChainDecomposition:
    result = ChainDecomposition(BoxLattice(w, h), tuple(chains))
    logging.info(f"Built {len(result.chains)} symmetric chains of L({w},{h})")
    return result


def _check_height(h: int) -> None:
    if h < 0:
        raise ValidationError(f"Box height must be nonnegative, got {h}")


def scd_w2(h: int) -> ChainDecomposition:
    _check_height(h)
    return _decomposition(2, h, _operator_chains(2, h))


def scd_w3(h: int) -> ChainDecomposition:
    """f3-chains of L'(3,h) together with the chains of L(3,h-4) shifted by (+)(3,1,1,1)."""
    _check_height(h)
    return _decomposition(3, h, _scd_w3_chains(h))


def scd_w4(h: int) -> ChainDecomposition:
    """f4-chains of L''(4,h), the (+)(2,2) shift of the chains of L'(4,h-2) and the (+)(4,1,1) shift of L(4,h-3)."""
    _check_height(h)
    return _decomposition(4, h, _scd_w4_chains(h))


def scd(w: int, h: int) -> ChainDecomposition:
    _check_width(w)
    return {2: scd_w2, 3: scd_w3, 4: scd_w4}[w](h)


def closed_form_minima(w: int, h: int) -> Set[Partition]:
    """Chain minima described by multiplicities alone."""
    _check_width(w)
    minima = set()
    if w == 2:
        for m1 in range(0, h + 1, 2):
            minima.add(_ones(m1))
    elif w == 3:
        for m3 in range(h + 1):
            for m1 in range(3 * m3, h - m3 + 1):
                if m1 != 3 * m3 + 1:
                    minima.add(from_multiplicities((m1, 0, m3)))
    else:
        for m4 in range(h + 1):
            for m2 in range(0, h - m4 + 1, 2):
                for m1 in range(2 * m4, h - m2 - m4 + 1):
                    if m1 != 2 * m4 + 1:
                        minima.add(from_multiplicities((m1, m2, 0, m4)))
    return minima


def closed_form_maxima(w: int, h: int) -> Set[Partition]:
    """The maximum of the chain through each closed-form minimum."""
    maxima = set()
    for low in closed_form_minima(w, h):
        m = multiplicities(low, w)
        if w == 2:
            maxima.add(from_multiplicities((m[0], h - m[0])))
        elif w == 3:
            m3 = m[2]
            m1 = m[0] - 3 * m3
            if m1 % 2 == 0:
                maxima.add(from_multiplicities((3 * m3, m1, h - m1 - 3 * m3)))
            else:
                maxima.add(from_multiplicities((3 * m3 + 1, m1 - 2, h - m1 - 3 * m3 + 1)))
        else:
            m4 = m[3]
            m2 = m[1] // 2
            m1 = m[0] - 2 * m4
            top = h - m1 - 2 * m2 - 2 * m4
            if m1 % 2 == 0:
                maxima.add(from_multiplicities((2 * m4, 2 * m2, m1, top)))
            else:
                maxima.add(from_multiplicities((2 * m4, 2 * m2 + 1, m1 - 2, top + 1)))
    return maxima


def scd_coefficients(w: int, h: int) -> TwoRowPoly:
    """a^(wh-k,k) = number of chains whose minimum has rank k, checked against the closed-form minima."""
    _check_width(w)
    decomposition = scd(w, h)
    by_rank: Dict[int, int] = {}
    for chain in decomposition.chains:
        by_rank[chain[0].size] = by_rank.get(chain[0].size, 0) + 1
    closed: Dict[int, int] = {}
    for low in closed_form_minima(w, h):
        closed[low.size] = closed.get(low.size, 0) + 1
    if by_rank != closed:
        logging.error(f"L({w},{h}): chain minima by rank {by_rank}, closed form {closed}")
        raise CrossCheckError(f"Chain minima of L({w},{h}) disagree with the closed form")
    degree = w * h
    return TwoRowPoly(w, h, {(degree - k, k): count for k, count in by_rank.items() if 2 * k <= degree})
