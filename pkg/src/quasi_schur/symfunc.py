# symfunc.py
# Contains conversions between the fundamental (F), monomial (M) and Schur (s) expansions

import logging
from collections import Counter, defaultdict
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Dict, Iterator, Optional, Tuple

from .exceptions import BasisMismatchError, CrossCheckError
from .models import Composition, Partition, SymFunc
from .tableaux import descent_composition, enumerate_syt, qyt_weight_counts


def require_basis(f: SymFunc, basis: str) -> None:
    if f.basis != basis:
        raise BasisMismatchError(f"Expected a value in the {basis} basis, got basis {f.basis}")


@lru_cache(maxsize=None)
def _schur_to_F_terms(shape: Partition) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    from_qyt = Counter(qyt_weight_counts(shape))
    from_syt = Counter(descent_composition(t).parts for t in enumerate_syt(shape))
    if from_qyt != from_syt:
        logging.error(f"QYT and SYT expansions of s{shape} disagree")
        raise CrossCheckError(f"QYT and SYT expansions of s{shape} disagree")
    return tuple(sorted(from_qyt.items(), reverse=True))


def schur_to_F(shape: Partition, max_entry: Optional[int] = None) -> SymFunc:
    """s_shape as a sum of F_wt(T) over quasi-Yamanouchi tableaux T.

    With ``max_entry`` set, only tableaux with entries at most max_entry are kept, which is the
    expansion of the Schur polynomial in that many variables.
    """
    terms = {}
    for weight, count in _schur_to_F_terms(shape):
        if max_entry is None or len(weight) <= max_entry:
            terms[Composition(weight)] = count
    return SymFunc(shape.size, "F", terms)


def schur_expansion_to_F(g: SymFunc, max_entry: Optional[int] = None) -> SymFunc:
    """Replace each s_lam in g by its F-expansion."""
    require_basis(g, "s")
    total = SymFunc.zero(g.degree, "F")
    for shape, coeff in g.sorted_terms():
        total = total + coeff * schur_to_F(shape, max_entry)
    return total


def _refinements(alpha: Composition, n: int) -> Iterator[Composition]:
    """Compositions whose descent set contains that of alpha."""
    descents = set(alpha.descent_set())
    free = [i for i in range(1, n) if i not in descents]
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            yield Composition.from_descent_set(descents.union(extra), n)


def F_to_M(f: SymFunc) -> SymFunc:
    """F_alpha is the sum of M_beta over refinements beta of alpha."""
    require_basis(f, "F")
    n = f.degree
    if n <= 1:
        return SymFunc(n, "M", dict(f.terms))
    terms: Dict[Composition, int] = defaultdict(int)
    for alpha, coeff in f.terms.items():
        for beta in _refinements(alpha, n):
            terms[beta] += coeff
    return SymFunc(n, "M", {beta: c for beta, c in terms.items() if c})


def _rearrangement_count(shape: Tuple[int, ...]) -> int:
    count = factorial(len(shape))
    for multiplicity in Counter(shape).values():
        count //= factorial(multiplicity)
    return count


def is_symmetric(f: SymFunc) -> bool:
    """True iff M_alpha and M_beta have equal coefficients whenever beta rearranges alpha."""
    m = F_to_M(f)
    classes: Dict[Tuple[int, ...], Dict[Composition, int]] = defaultdict(dict)
    for alpha, coeff in m.terms.items():
        classes[tuple(sorted(alpha.parts, reverse=True))][alpha] = coeff
    for shape, members in classes.items():
        # a missing rearrangement has coefficient zero, unlike the stored ones
        if len(members) != _rearrangement_count(shape) or len(set(members.values())) != 1:
            logging.debug(f"Not symmetric on the rearrangements of {list(shape)}")
            return False
    return True
