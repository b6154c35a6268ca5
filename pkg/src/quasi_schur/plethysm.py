# plethysm.py
# Chứa bảng của các bảng, từ đọc động và khai triển F của s_lam[s_mu]
# cùng với các số hạng dẫn đầu của nó

import logging
from collections import Counter
from functools import lru_cache
from itertools import combinations, product
from math import factorial
from typing import Iterator, List, Optional, Sequence, Tuple

from .combinat import lex_max
from .exceptions import CrossCheckError, SizeGuardExceeded, ValidationError
from .models import Composition, Partition, SymFunc, TableauOfTableaux
from .quasi_kostka import F_to_schur
from .symfunc import schur_to_F
from .tableaux import count_syt, enumerate_ssyt, enumerate_syt, standardize

DEFAULT_SIZE_GUARD = 16

Matrix = Tuple[Tuple[int, ...], ...]


def check_size_guard(lam: Partition, mu: Partition, size_guard: int = DEFAULT_SIZE_GUARD) -> None:
    size = lam.size * mu.size
    if size > size_guard:
        raise SizeGuardExceeded(size, size_guard)


def _blocks(elements: Tuple[int, ...], block_size: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Set partitions of `elements` into blocks of equal size; each block holds the smallest remaining element."""
    if not elements:
        yield ()
        return
    first, rest = elements[0], elements[1:]
    for others in combinations(rest, block_size - 1):
        block = (first,) + others
        remaining = tuple(e for e in rest if e not in others)
        for tail in _blocks(remaining, block_size):
            yield (block,) + tail


def _outer_cell_order(outer_syt) -> Tuple[int, ...]:
    """Labels of the outer cells listed top to bottom, left to right."""
    return outer_syt.row_reading_word()


def iter_stot_matrices(lam: Partition, mu: Partition) -> Iterator[Matrix]:
    """Matrices A of SToT(lam, mu).

    A tableau of tableaux is a choice of n disjoint inner standard tableaux together with a standard
    tableau of shape lam saying where the k-th smallest inner tableau (lexicographic on row reading
    words) sits.
    """
    n, m = lam.size, mu.size
    inner_words = [t.row_reading_word() for t in enumerate_syt(mu)]
    outer_orders = [_outer_cell_order(t) for t in enumerate_syt(lam)]
    for blocks in _blocks(tuple(range(1, n * m + 1)), m):
        relabelled = [[tuple(block[v - 1] for v in word) for word in inner_words] for block in blocks]
        for choice in product(*relabelled):
            ordered = sorted(choice)
            for order in outer_orders:
                yield tuple(ordered[label - 1] for label in order)


def enumerate_stot(lam: Partition, mu: Partition, size_guard: int = DEFAULT_SIZE_GUARD) -> List[TableauOfTableaux]:
    """Mọi bảng chuẩn của các bảng có hình ngoài lam và hình trong mu."""
    _require_nonempty(lam, mu)
    check_size_guard(lam, mu, size_guard)
    found = [TableauOfTableaux.from_matrix(lam, mu, a) for a in iter_stot_matrices(lam, mu)]
    logging.info(f"Enumerated {len(found)} tableaux of tableaux of shape {lam}[{mu}]")
    return found


def count_stot(lam: Partition, mu: Partition) -> int:
    """|SToT(lam, mu)| = N! / ((m!)^n n!) * (f^mu)^n * f^lam with n = |lam|, m = |mu|, N = nm."""
    n, m = lam.size, mu.size
    set_partitions = factorial(n * m) // (factorial(m) ** n * factorial(n))
    return set_partitions * count_syt(mu) ** n * count_syt(lam)


def dynamic_word_of_matrix(a: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    if not a:
        return ()
    columns = len(a[0])
    word: List[int] = []
    for k in range(columns - 1):
        rows = sorted(range(len(a)), key=lambda r: a[r][k + 1])
        word.extend(a[r][k] for r in rows)
    word.extend(row[columns - 1] for row in a)
    return tuple(word)


def dynamic_reading_word(t: TableauOfTableaux) -> Tuple[int, ...]:
    """Scan the columns of A; column k is read in the row order that sorts column k+1."""
    return dynamic_word_of_matrix(t.matrix)


def _inverse_descents(word: Sequence[int]) -> Tuple[int, ...]:
    position = {letter: i for i, letter in enumerate(word)}
    return tuple(i for i in range(1, len(word)) if position[i] > position[i + 1])


def inverse_descent_composition(word: Sequence[int]) -> Composition:
    """Composition of {i : i appears after i+1}."""
    if sorted(word) != list(range(1, len(word) + 1)):
        raise ValidationError(f"Expected a permutation of 1..{len(word)}, got {list(word)}")
    return Composition.from_descent_set(_inverse_descents(word), len(word))


@lru_cache(maxsize=None)
def _plethysm_F_terms(lam: Partition, mu: Partition) -> Tuple[Tuple[Composition, int], ...]:
    n = lam.size * mu.size
    counts = Counter(_inverse_descents(dynamic_word_of_matrix(a)) for a in iter_stot_matrices(lam, mu))
    logging.info(f"s{lam}[s{mu}]: {sum(counts.values())} tableaux of tableaux, {len(counts)} F terms")
    return tuple((Composition.from_descent_set(d, n), c) for d, c in counts.items())


def plethysm_F(lam: Partition, mu: Partition, size_guard: int = DEFAULT_SIZE_GUARD) -> SymFunc:
    """s_lam[s_mu] as the sum of F_iDes(T) over T in SToT(lam, mu)."""
    _require_nonempty(lam, mu)
    check_size_guard(lam, mu, size_guard)
    return SymFunc(lam.size * mu.size, "F", dict(_plethysm_F_terms(lam, mu)))


def plethysm_schur(lam: Partition, mu: Partition, size_guard: int = DEFAULT_SIZE_GUARD) -> SymFunc:
    return F_to_schur(plethysm_F(lam, mu, size_guard))


def _require_nonempty(lam: Partition, mu: Partition) -> None:
    if not lam.parts or not mu.parts:
        raise ValidationError(f"Plethysm needs nonempty shapes, got {lam} and {mu}")


def leading_term(lam: Partition, mu: Partition) -> Partition:
    """nu = (n mu_1, ..., n mu_{k-1}, n mu_k - n + lam_1, lam_2, ..., lam_l), which has coefficient 1."""
    _require_nonempty(lam, mu)
    n, k = lam.size, mu.length
    head = tuple(n * part for part in mu.parts[:k - 1])
    return Partition(head + (n * mu.parts[-1] - n + lam.parts[0],) + lam.parts[1:])


def leading_term_newton(lam: Partition, mu: Partition) -> Partition:
    """The same partition as the sum of lam_i * mu^(i), with mu^(i) = (mu_1, ..., mu_k - 1, 0^(i-2), 1) for i > 1."""
    _require_nonempty(lam, mu)
    k = mu.length
    total = [0] * (k + lam.length - 1)
    for i, weight in enumerate(lam.parts, start=1):
        if i == 1:
            shifted = list(mu.parts)
        else:
            shifted = list(mu.parts[:k - 1]) + [mu.parts[-1] - 1] + [0] * (i - 2) + [1]
        for j, value in enumerate(shifted):
            total[j] += weight * value
    return Partition(tuple(total))


def leading_composition(lam: Partition, mu: Partition) -> Composition:
    """(n mu_1, ..., n mu_{k-1}, lam_2, ..., lam_l, n mu_k - n + lam_1): the iDes of leading_stot."""
    _require_nonempty(lam, mu)
    n, k = lam.size, mu.length
    head = tuple(n * part for part in mu.parts[:k - 1])
    return Composition(head + lam.parts[1:] + (n * mu.parts[-1] - n + lam.parts[0],))


def leading_stot(lam: Partition, mu: Partition) -> TableauOfTableaux:
    """Bảng của các bảng có iDes là hợp thành lớn nhất theo thứ tự từ điển."""
    _require_nonempty(lam, mu)
    n, k, m = lam.size, mu.length, mu.size
    a = [[0] * m for _ in range(n)]
    # các hàng trong được đọc từ trên xuống, nên phần mu_j giữ một khối cột tính từ bên phải
    right = m
    base = 0
    for j in range(k - 1):
        left = right - mu.parts[j]
        for c in range(left, right):
            for r in range(n):
                base += 1
                a[r][c] = base
        right = left
    for c in range(1, mu.parts[-1]):
        for r in range(n):
            a[r][c] = base + n * c + r + 1
    rotated = lam.parts[1:] + lam.parts[:1]
    [tableau] = enumerate_ssyt(lam, rotated)
    for r, value in enumerate(standardize(tableau).row_reading_word()):
        a[r][0] = base + value
    return TableauOfTableaux.from_matrix(lam, mu, a)


def _partition_terms(f: SymFunc) -> SymFunc:
    return SymFunc(f.degree, "F", {alpha: c for alpha, c in f.terms.items() if alpha.is_partition()})


def lex_leading_partitions(lam: Partition, mu: Partition,
                           size_guard: int = DEFAULT_SIZE_GUARD) -> Tuple[Tuple[Partition, int], Optional[Tuple[Partition, int]]]:
    """The two lexicographically largest Schur terms of s_lam[s_mu], read off partition-indexed F terms.

    Peels the leading s_nu with its F-expansion; what remains has the second Schur term as its
    lex-largest partition index.
    """
    f = _partition_terms(plethysm_F(lam, mu, size_guard))
    nu = lex_max(f.terms)
    first = (nu.as_partition(), f.coefficient(nu))
    rest = f - first[1] * _partition_terms(schur_to_F(first[0]))
    kappa = lex_max(rest.terms)
    second = None if kappa is None else (kappa.as_partition(), rest.coefficient(kappa))
    return first, second


def second_leading_term(lam: Partition, mu: Partition, size_guard: int = DEFAULT_SIZE_GUARD) -> Optional[Partition]:
    """kappa = (n mu_1, ..., n mu_k - n + lam_1 - 1, lam_2 + 2, lam_3, ..., lam_{l-1}, lam_l - 1).

    Defined when mu_k > 1 and lam has more than two parts; None otherwise. Inside the size guard the
    value is confirmed against the full F-expansion.
    """
    _require_nonempty(lam, mu)
    if mu.parts[-1] <= 1 or lam.length <= 2:
        return None
    n, k, l = lam.size, mu.length, lam.length
    head = tuple(n * part for part in mu.parts[:k - 1])
    kappa = Partition(head + (n * mu.parts[-1] - n + lam.parts[0] - 1, lam.parts[1] + 2)
                      + lam.parts[2:l - 1] + (lam.parts[-1] - 1,))
    if lam.size * mu.size > size_guard:
        logging.warning(f"s{lam}[s{mu}] is beyond the size guard; second leading term not cross-checked")
        return kappa
    _, second = lex_leading_partitions(lam, mu, size_guard)
    if second != (kappa, 1):
        logging.error(f"Second leading term of s{lam}[s{mu}]: formula {kappa}, expansion {second}")
        raise CrossCheckError(f"Second leading term of s{lam}[s{mu}] is {second}, formula gives {kappa}")
    return kappa
