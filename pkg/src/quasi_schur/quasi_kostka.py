# quasi_kostka.py
# Contains the quasi-Kostka matrix, its exact inverse, signed chains of quasi-Yamanouchi
# tableaux and the conversion from F-expansions to Schur expansions

import logging
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np

from .combinat import partitions_of
from .exceptions import CrossCheckError, NotSymmetricError, RoundTripError, ValidationError
from .models import Composition, Index, Partition, QuasiKostkaMatrix, SignedChain, SymFunc, Tableau
from .symfunc import is_symmetric, require_basis, schur_expansion_to_F
from .tableaux import enumerate_qyt, qyt_weight_counts


@lru_cache(maxsize=None)
def quasi_kostka_matrix(n: int, max_len: Optional[int] = None) -> QuasiKostkaMatrix:
    """Q = (QK_{lam,mu}) over partitions of n (of length at most max_len) in reverse-lex order."""
    if n < 1:
        raise ValidationError(f"The quasi-Kostka matrix needs n >= 1, got {n}")
    index = tuple(partitions_of(n, max_len=max_len))
    entries = np.zeros((len(index), len(index)), dtype=object)
    for i, lam in enumerate(index):
        counts = qyt_weight_counts(lam)
        for j, mu in enumerate(index):
            entries[i, j] = counts.get(mu.parts, 0)
    logging.info(f"Built the {len(index)}x{len(index)} quasi-Kostka matrix for n={n}, max_len={max_len}")
    return QuasiKostkaMatrix(n, index, entries, max_len)


def _identity(size: int) -> np.ndarray:
    eye = np.zeros((size, size), dtype=object)
    for i in range(size):
        eye[i, i] = 1
    return eye


def invert_unitriangular(q: QuasiKostkaMatrix) -> QuasiKostkaMatrix:
    """Exact inverse of a unit upper-triangular matrix by back-substitution."""
    if not q.is_unit_upper_triangular():
        raise ValidationError("Only unit upper-triangular matrices can be inverted here")
    u = q.entries
    x = _identity(q.size)
    for i in range(q.size - 2, -1, -1):
        x[i, i + 1:] = -u[i, i + 1:].dot(x[i + 1:, i + 1:])
    return QuasiKostkaMatrix(q.degree, q.index, x, q.max_len, inverted=not q.inverted)


def invert_by_series(q: QuasiKostkaMatrix) -> QuasiKostkaMatrix:
    """Inverse as the finite sum of (-N)^k with N = Q - I nilpotent."""
    if not q.is_unit_upper_triangular():
        raise ValidationError("Only unit upper-triangular matrices can be inverted here")
    eye = _identity(q.size)
    minus_n = eye - q.entries
    total = eye.copy()
    term = eye
    for _ in range(q.size):
        term = term.dot(minus_n)
        if not term.any():
            break
        total = total + term
    return QuasiKostkaMatrix(q.degree, q.index, total, q.max_len, inverted=not q.inverted)


@lru_cache(maxsize=None)
def inverse_matrix(n: int, max_len: Optional[int] = None) -> QuasiKostkaMatrix:
    return invert_unitriangular(quasi_kostka_matrix(n, max_len))


def checked_inverse(q: QuasiKostkaMatrix) -> QuasiKostkaMatrix:
    """Back-substitution inverse, compared against the series inverse."""
    inverse = invert_unitriangular(q)
    series = invert_by_series(q)
    if not inverse.same_entries(series):
        logging.error(f"Back-substitution and series inverses differ for n={q.degree}")
        raise CrossCheckError(f"Back-substitution and series inverses differ for n={q.degree}")
    return inverse


@lru_cache(maxsize=None)
def _partition_weighted_qyt(shape: Partition) -> Tuple[Tableau, ...]:
    """QYT of a shape whose weight is a partition."""
    found = []
    for t in enumerate_qyt(shape):
        if all(t.weight[i] >= t.weight[i + 1] for i in range(len(t.weight) - 1)):
            found.append(t)
    return tuple(found)


@lru_cache(maxsize=None)
def _chain_tails(shape: Partition, target: Optional[Partition]) -> Tuple[Tuple[Tableau, ...], ...]:
    tails = []
    for t in _partition_weighted_qyt(shape):
        weight = Partition(t.weight)
        if weight == shape:
            if target is None or weight == target:
                tails.append((t,))
            continue
        # weights only decrease in reverse-lex order along a chain
        if target is not None and weight.parts < target.parts:
            continue
        for tail in _chain_tails(weight, target):
            tails.append((t,) + tail)
    return tuple(tails)


def enumerate_chains(mu: Partition, lam: Partition) -> List[SignedChain]:
    """Signed chains starting at shape mu and ending with the superstandard tableau of shape lam."""
    if mu.size != lam.size:
        raise ValidationError(f"Chains connect partitions of equal size, got {mu} and {lam}")
    return [SignedChain(tableaux) for tableaux in _chain_tails(mu, lam)]


def chains_from(mu: Partition) -> List[SignedChain]:
    """Every signed chain starting at shape mu, whatever its final weight."""
    return [SignedChain(tableaux) for tableaux in _chain_tails(mu, None)]


def chain_sum(mu: Partition, lam: Partition) -> int:
    return sum(chain.sign for chain in enumerate_chains(mu, lam))


def _partition_coefficients(f: SymFunc, max_len: Optional[int]) -> List[Tuple[Partition, int]]:
    result = []
    for alpha, coeff in f.terms.items():
        if alpha.is_partition() and (max_len is None or alpha.length <= max_len):
            result.append((alpha.as_partition(), coeff))
    return result


def _check_input(f: SymFunc, check_symmetry: bool) -> None:
    require_basis(f, "F")
    if not check_symmetry:
        logging.warning("Symmetry check skipped; the result is only meaningful for symmetric input")
    elif not is_symmetric(f):
        raise NotSymmetricError(f"The F-expansion of degree {f.degree} is not symmetric")


def _round_trip(f: SymFunc, result: SymFunc, max_len: Optional[int]) -> None:
    restricted = max_len is not None and all(alpha.length <= max_len for alpha in f.terms)
    if restricted:
        logging.warning(f"Round trip compared on compositions of length at most {max_len}")
    expanded = schur_expansion_to_F(result, max_len if restricted else None)
    if expanded != f:
        raise RoundTripError("Expanding the Schur result back into the F basis does not reproduce the input")


def F_to_schur(f: SymFunc, max_len: Optional[int] = None, check_symmetry: bool = True) -> SymFunc:
    """Schur coefficients b_lam = sum over partitions mu of Qinv[mu, lam] * c_mu.

    Only partition-indexed F coefficients are read. With ``max_len`` set, the caller asserts no
    Schur term of length above max_len occurs, and the smaller matrix Q_{<=m} is used.
    """
    _check_input(f, check_symmetry)
    n = f.degree
    if n == 0:
        return SymFunc(0, "s", {Partition(()): f.coefficient(Composition(()))})
    inverse = inverse_matrix(n, max_len)
    c = np.zeros(inverse.size, dtype=object)
    for mu, coeff in _partition_coefficients(f, max_len):
        c[inverse.position(mu)] = coeff
    b = c.dot(inverse.entries)
    result = SymFunc(n, "s", {lam: int(b[i]) for i, lam in enumerate(inverse.index)})
    _round_trip(f, result, max_len)
    return result


def F_to_schur_via_chains(f: SymFunc, check_symmetry: bool = True) -> SymFunc:
    """Drop non-partition F terms, then replace F_mu by the signed sum of s_wt(c) over chains c from mu."""
    _check_input(f, check_symmetry)
    result = SymFunc.zero(f.degree, "s")
    for mu, coeff in _partition_coefficients(f, None):
        result = result + coeff * chain_contribution(mu)
    return result


def chain_contribution(mu: Index) -> SymFunc:
    """The Schur expansion that replaces a single F_mu; zero when mu is not a partition."""
    if isinstance(mu, Composition):
        if not mu.is_partition():
            return SymFunc.zero(mu.size, "s")
        mu = mu.as_partition()
    terms = {}
    for chain in chains_from(mu):
        terms[chain.weight] = terms.get(chain.weight, 0) + chain.sign
    return SymFunc(mu.size, "s", terms)
