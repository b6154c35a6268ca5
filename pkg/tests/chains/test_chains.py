# Tests for quasi_schur.chains and quasi_schur.certifier
import os
from math import comb

import pytest

from quasi_schur.certifier import CHECKS, ChainCertifier, certify, compare_with_golden, pattern_split, restrict
from quasi_schur.chains import (OPERATORS, Width3Operators, Width4Operators, closed_form_maxima, closed_form_minima,
                                e2, f2, f3, highest_weights, lowest_weights, scd, scd_coefficients, scd_w2, scd_w3,
                                stratum_w3, strata_w4)
from quasi_schur.combinat import box_elements
from quasi_schur.exceptions import UnsupportedWidthError, ValidationError
from quasi_schur.models import BoxLattice, ChainDecomposition, Partition
from quasi_schur.serialization import load_chain_decomposition

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")


def P(*parts):
    return Partition(parts)


def ones(count):
    return Partition((1,) * count)


@pytest.fixture
def scd_instance():
    return scd_w2(2)


def load_golden(name):
    with open(os.path.join(GOLDEN_DIR, name)) as f:
        return load_chain_decomposition(f.read())


def test_scd_w2_small(scd_instance):
    assert scd_instance.chains == ((P(), P(1), P(2), P(2, 1), P(2, 2)), (P(1, 1),))
    assert scd_instance.edge_labels == ((1, 2, 1, 2), ())


def test_scd_w2_empty_box():
    assert scd_w2(0).chains == ((P(),),)
    assert certify(scd_w2(0)).passed


def test_scd_w3_minima():
    assert scd_w3(3).minima() == [P(), P(1, 1), P(1, 1, 1)]


def test_scd_rejects_negative_height():
    with pytest.raises(ValidationError):
        scd_w3(-1)


@pytest.mark.parametrize('inputs', [1, 5, 0])
def test_scd_rejects_unsupported_width(inputs):
    with pytest.raises(UnsupportedWidthError):
        scd(inputs, 3)


@pytest.mark.parametrize('inputs', [("L3x3.json", 3, 3), ("L3x10.json", 3, 10), ("L4x3.json", 4, 3),
                                    ("L4x7.json", 4, 7)])
def test_scd_matches_golden(inputs):
    name, w, h = inputs
    golden = load_golden(name)
    assert compare_with_golden(scd(w, h), golden) == []


def test_scd_w3_height10_has_eighteen_chains():
    assert len(scd_w3(10).chains) == 18


def test_compare_with_golden_reports_differences():
    golden = load_golden("L3x3.json")
    replaced = ((P(1, 1, 1), P(2, 1, 1)), (P(3, 1, 1), P(3, 2, 1)))
    broken = ChainDecomposition(golden.lattice, golden.chains[:-1] + replaced)
    differences = compare_with_golden(broken, golden)
    assert any(d.startswith("missing chain from [1,1,1] to [3,2,1]") for d in differences)
    assert any(d.startswith("unexpected chain from [3,1,1]") for d in differences)


def test_compare_with_golden_lattice_mismatch():
    differences = compare_with_golden(scd_w2(2), load_golden("L3x3.json"))
    assert differences[0] == "lattice L(2,2) differs from L(3,3)"


@pytest.mark.parametrize('w,h', [(w, h) for w in (2, 3, 4) for h in range(0, 7)])
def test_certify(w, h):
    report = certify(scd(w, h))
    assert report.passed
    assert list(report.checks) == list(CHECKS)


@pytest.mark.slow
@pytest.mark.parametrize('w,h', [(3, h) for h in range(7, 13)] + [(4, h) for h in range(7, 11)] +
                         [(2, h) for h in range(7, 13)])
def test_certify_tall(w, h):
    assert certify(scd(w, h)).passed


def test_certify_detects_broken_decomposition(caplog):
    box = BoxLattice(2, 2)
    # (2) -> (2,2) skips a rank, (1,1) is left out and (2,1) stands alone
    broken = ChainDecomposition(box, ((P(), P(1), P(2), P(2, 2)), (P(2, 1),)))
    report = certify(broken)
    assert not report.passed
    assert not report.checks["cover"].passed
    assert not report.checks["saturation"].passed
    assert not report.checks["rank_symmetry"].passed
    assert "failed checks" in caplog.text


def test_certify_detects_wrong_labels():
    # A saturated symmetric chain whose labels do not alternate
    box = BoxLattice(2, 2)
    odd = ChainDecomposition(box, ((P(), P(1), P(1, 1), P(2, 1), P(2, 2)), (P(2),)))
    assert not ChainCertifier(odd).check_pattern().passed


def test_check_cover_detects_duplicates():
    box = BoxLattice(2, 1)
    duplicated = ChainDecomposition(box, ((P(), P(1), P(2)), (P(1),)))
    result = ChainCertifier.check_cover(duplicated)
    assert result.violations == ["chain 2 (minimum [1]): [1] also lies in chain 1"]


def test_restrict(scd_instance):
    restricted = restrict(scd_instance)
    assert restricted.lattice == BoxLattice(2, 1)
    assert restricted.chains == ((P(), P(1), P(2)),)


def test_certificate_text(scd_instance):
    text = ChainCertifier._format_report_as_string(certify(scd_instance))
    assert "L(2,2)" in text
    for name in CHECKS:
        assert name in text


@pytest.mark.parametrize('inputs,expected', [
    (((2, 2, 1, 2, 3), 3), (2, (1, 2, 3))),
    (((2, 3, 2), 3), (1, (3, 2))),
    (((1, 1), 3), None),
    (((), 3), (0, ())),
    (((1, 2, 3, 1, 2, 3), 3), (0, (1, 2, 3))),
    (((2, 3, 2, 3, 1, 2, 3, 4), 4), (4, (1, 2, 3, 4))),
])
def test_pattern_split(inputs, expected):
    assert pattern_split(*inputs) == expected


@pytest.mark.parametrize('w,h', [(w, h) for w in (2, 3, 4) for h in range(0, 8)])
def test_closed_form_minima_and_maxima(w, h):
    decomposition = scd(w, h)
    assert set(decomposition.minima()) == closed_form_minima(w, h)
    assert set(decomposition.maxima()) == closed_form_maxima(w, h)
    assert len(decomposition.chains) == len(closed_form_minima(w, h))


@pytest.mark.parametrize('w,h', [(w, h) for w in (2, 3, 4) for h in range(0, 7)])
def test_operators_are_partial_inverses(w, h):
    operators = OPERATORS[w]
    if w == 2:
        stratum = [lam for group in box_elements(BoxLattice(2, h)) for lam in group]
    elif w == 3:
        stratum = stratum_w3(h)
    else:
        stratum = strata_w4(h)["L''"]
    for lam in stratum:
        up = operators.step(lam, h, "f")
        if up.column is not None:
            down = operators.step(up.result, h, "e")
            assert (down.result, down.column) == (lam, up.column)
        down = operators.step(lam, h, "e")
        if down.column is not None:
            up = operators.step(down.result, h, "f")
            assert (up.result, up.column) == (lam, down.column)


@pytest.mark.parametrize('w,h', [(w, h) for w in (2, 3, 4) for h in range(0, 7)])
def test_highest_weights_are_columns_of_ones(w, h):
    counts = [c for c in range(h + 1) if (c % 2 == 0 if w == 2 else c != 1)]
    assert set(highest_weights(w, h)) == {ones(c) for c in counts}
    assert len(lowest_weights(w, h)) == len(counts)


def test_highest_weights_rejects_unsupported_width():
    with pytest.raises(UnsupportedWidthError):
        highest_weights(5, 2)


@pytest.mark.parametrize('h', range(0, 9))
def test_strata_sizes(h):
    def size(w, height):
        return comb(w + height, w) if height >= 0 else 0

    assert len(stratum_w3(h)) == size(3, h) - size(3, h - 4)
    strata = strata_w4(h)
    assert len(strata["L'"]) == size(4, h) - size(4, h - 3)
    assert len(strata["L''"]) == len(strata["L'"]) - (size(4, h - 2) - size(4, h - 5))


@pytest.mark.parametrize('inputs,expected', [
    # lam, h and the expected successor with its column
    ((P(), 2), (P(1), 1)),
    ((P(1), 2), (P(2), 2)),
    ((P(2, 2), 2), None),
    ((P(1, 1), 2), None),
])
def test_f2(inputs, expected):
    assert f2(*inputs) == expected


def test_e2_inverts_f2():
    assert e2(P(2, 1), 2) == (P(2), 1)
    assert e2(P(), 2) is None


@pytest.mark.parametrize('inputs,expected', [
    ((P(1, 1, 1), 3), (P(2, 1, 1), 2)),
    ((P(3, 3, 3), 3), None),
    ((P(2, 2, 2), 3), (P(3, 2, 2), 3)),
])
def test_f3(inputs, expected):
    assert f3(*inputs) == expected


def test_f3_outside_stratum():
    with pytest.raises(ValidationError):
        f3(P(3, 1, 1, 1), 4)


def test_f2_outside_box():
    with pytest.raises(ValidationError):
        f2(P(3), 2)


@pytest.mark.parametrize('inputs,expected', [
    ((0, 0, 0), "3"),
    ((2, 1, 0), "8"),
    ((3, 0, 0), "1"),
    ((2, 0, 0), "2"),
])
def test_width3_case(inputs, expected):
    assert Width3Operators.case(inputs) == expected


@pytest.mark.parametrize('inputs,expected', [
    ((1, 1, 0, 0), "1b"),
    ((0, 0, 0, 0), "3"),
    ((1, 0, 1, 1), "9"),
])
def test_width4_case(inputs, expected):
    assert Width4Operators.case(inputs) == expected


def test_scd_coefficients():
    assert scd_coefficients(3, 3).coefficient(6, 3) == 1
    assert scd_coefficients(2, 4).coefficients == {(8, 0): 1, (6, 2): 1, (4, 4): 1}
