# Tests for quasi_schur.plethysm
import pytest

from quasi_schur.combinat import dominance_leq, lex_max, partitions_of
from quasi_schur.exceptions import SizeGuardExceeded, ValidationError
from quasi_schur.models import Composition, Partition, SymFunc, TableauOfTableaux
from quasi_schur.plethysm import (check_size_guard, count_stot, dynamic_reading_word, enumerate_stot,
                                  inverse_descent_composition, leading_composition, leading_stot, leading_term,
                                  leading_term_newton, lex_leading_partitions, plethysm_F, plethysm_schur,
                                  second_leading_term)
from quasi_schur.symfunc import is_symmetric, schur_to_F


@pytest.fixture
def tot_instance():
    return TableauOfTableaux.from_matrix(Partition((2, 1)), Partition((2, 2)),
                                         [[10, 11, 1, 4], [5, 7, 2, 3], [8, 12, 6, 9]])


def shape_pairs(max_product):
    """All (lam, mu) with both nonempty and |lam|*|mu| at most max_product."""
    pairs = []
    for n in range(1, max_product + 1):
        for m in range(1, max_product // n + 1):
            for lam in partitions_of(n):
                for mu in partitions_of(m):
                    pairs.append((lam, mu))
    return pairs


def s(*terms):
    return SymFunc(sum(terms[0][0]), "s", {Partition(parts): c for parts, c in terms})


def test_dynamic_reading_word(tot_instance):
    word = dynamic_reading_word(tot_instance)
    assert word == (5, 10, 8, 11, 7, 12, 2, 1, 6, 4, 3, 9)
    assert inverse_descent_composition(word) == Composition((1, 2, 1, 2, 1, 2, 3))


@pytest.mark.parametrize('inputs,expected', [
    ((1, 2, 3, 4), (4,)),
    ((4, 3, 2, 1), (1, 1, 1, 1)),
    ((2, 1), (1, 1)),
    ((), ()),
])
def test_inverse_descent_composition(inputs, expected):
    assert inverse_descent_composition(inputs).parts == expected


@pytest.mark.parametrize('inputs', [(1, 1, 2), (0, 1), (1, 3)])
def test_inverse_descent_composition_rejects(inputs):
    with pytest.raises(ValidationError):
        inverse_descent_composition(inputs)


@pytest.mark.parametrize('inputs,expected', [
    (((2, 1), (2, 2)), 92400),
    (((2,), (2,)), 3),
    (((1,), (3, 1)), 3),
    (((3,), (1,)), 1),
])
def test_count_stot(inputs, expected):
    assert count_stot(Partition(inputs[0]), Partition(inputs[1])) == expected


@pytest.mark.parametrize('lam,mu', [
    ((2,), (2,)),
    ((2, 1), (2,)),
    ((1, 1), (2, 1)),
    ((3,), (2,)),
    ((2, 2), (1, 1)),
    ((1,), (3, 2)),
])
def test_enumerate_stot_matches_count(lam, mu):
    found = enumerate_stot(Partition(lam), Partition(mu))
    assert len(found) == count_stot(Partition(lam), Partition(mu))
    assert len(set(t.matrix for t in found)) == len(found)


def test_enumerate_stot_respects_size_guard():
    with pytest.raises(SizeGuardExceeded):
        enumerate_stot(Partition((3,)), Partition((3, 3)))


def test_check_size_guard_override():
    check_size_guard(Partition((3,)), Partition((3, 3)), size_guard=18)
    with pytest.raises(SizeGuardExceeded) as excinfo:
        check_size_guard(Partition((3,)), Partition((3, 3)))
    assert excinfo.value.size == 18


def test_plethysm_F_of_trivial_outer_shape():
    mu = Partition((3, 1))
    assert plethysm_F(Partition((1,)), mu) == schur_to_F(mu)


def test_plethysm_F_leading_coefficient():
    f = plethysm_F(Partition((2, 1)), Partition((2, 2)))
    assert f.coefficient(Composition((6, 5, 1))) == 1
    assert lex_max(f.terms) == Composition((6, 5, 1))


@pytest.mark.parametrize('inputs,expected', [
    (((1,), (3, 1)), s(((3, 1), 1))),
    (((2,), (2,)), s(((4,), 1), ((2, 2), 1))),
    (((1, 1), (2,)), s(((3, 1), 1))),
    (((2,), (1, 1)), s(((2, 2), 1), ((1, 1, 1, 1), 1))),
    (((1, 1), (1, 1)), s(((2, 1, 1), 1))),
    (((1, 1, 1), (2,)), s(((4, 1, 1), 1), ((3, 3), 1))),
])
def test_plethysm_schur(inputs, expected):
    assert plethysm_schur(Partition(inputs[0]), Partition(inputs[1])) == expected


@pytest.mark.parametrize('lam,mu', shape_pairs(6))
def test_plethysm_F_is_symmetric(lam, mu):
    assert is_symmetric(plethysm_F(lam, mu))


@pytest.mark.parametrize('inputs,expected', [
    (((2, 1), (2, 2)), (6, 5, 1)),
    (((3,), (2,)), (6,)),
    (((1, 1, 1), (2,)), (4, 1, 1)),
    (((1, 1), (1, 1)), (2, 1, 1)),
    (((2,), (1, 1)), (2, 2)),
    (((1, 1), (2,)), (3, 1)),
])
def test_leading_term(inputs, expected):
    lam, mu = Partition(inputs[0]), Partition(inputs[1])
    assert leading_term(lam, mu).parts == expected
    assert leading_term_newton(lam, mu).parts == expected


@pytest.mark.parametrize('inputs', [((), (2,)), ((2,), ())])
def test_leading_term_rejects_empty(inputs):
    with pytest.raises(ValidationError):
        leading_term(Partition(inputs[0]), Partition(inputs[1]))


def test_leading_stot():
    t = leading_stot(Partition((2, 1)), Partition((2, 2)))
    assert t.matrix == ((8, 10, 1, 4), (7, 11, 2, 5), (9, 12, 3, 6))
    word = dynamic_reading_word(t)
    assert word == (8, 7, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6)
    assert inverse_descent_composition(word) == Composition((6, 1, 5))
    assert leading_composition(Partition((2, 1)), Partition((2, 2))) == Composition((6, 1, 5))


@pytest.mark.parametrize('lam,mu', shape_pairs(8))
def test_leading_stot_realizes_leading_composition(lam, mu):
    word = dynamic_reading_word(leading_stot(lam, mu))
    assert inverse_descent_composition(word) == leading_composition(lam, mu)


def test_second_leading_term():
    lam, mu = Partition((1, 1, 1)), Partition((2,))
    kappa = second_leading_term(lam, mu)
    assert kappa == Partition((3, 3))
    nu = leading_term(lam, mu)
    assert not dominance_leq(kappa, nu) and not dominance_leq(nu, kappa)


@pytest.mark.parametrize('inputs', [
    # Only two parts in the outer shape
    ((2, 1), (2, 2)),
    # Last part of the inner shape is 1
    ((1, 1, 1), (2, 1)),
])
def test_second_leading_term_absent(inputs):
    assert second_leading_term(Partition(inputs[0]), Partition(inputs[1])) is None


def test_second_leading_term_beyond_guard_logs_warning(caplog):
    kappa = second_leading_term(Partition((2, 1, 1)), Partition((3, 3)))
    assert kappa == Partition((12, 9, 3))
    assert "not cross-checked" in caplog.text


def test_lex_leading_partitions():
    first, second = lex_leading_partitions(Partition((1, 1, 1)), Partition((2,)))
    assert first == (Partition((4, 1, 1)), 1)
    assert second == (Partition((3, 3)), 1)


@pytest.mark.parametrize('lam,mu', shape_pairs(6))
def test_leading_term_against_expansion(lam, mu):
    f = plethysm_F(lam, mu)
    nu = lex_max(f.terms)
    assert nu.is_partition()
    assert nu.as_partition() == leading_term(lam, mu)
    assert f.coefficient(nu) == 1


@pytest.mark.slow
@pytest.mark.parametrize('lam,mu', [pair for pair in shape_pairs(12) if pair[0].size * pair[1].size > 6])
def test_leading_term_against_expansion_exhaustive(lam, mu):
    f = plethysm_F(lam, mu)
    nu = lex_max(f.terms)
    assert nu.is_partition()
    assert nu.as_partition() == leading_term(lam, mu) == leading_term_newton(lam, mu)
    assert f.coefficient(nu) == 1
    # the cross-check inside raises if the formula and the expansion disagree
    kappa = second_leading_term(lam, mu)
    if kappa is not None:
        assert not dominance_leq(kappa, nu.as_partition())
