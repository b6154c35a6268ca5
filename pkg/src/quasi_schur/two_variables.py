# two_variables.py
# Contains the two-variable plethysm s_w[s_h](x,y) and its truncation/shift algebra

import logging
from typing import Dict, Optional, Tuple

import sympy

from .combinat import partitions_of
from .exceptions import CrossCheckError, ValidationError
from .models import Partition, SymFunc, TwoRowPoly

METHODS = ("formula", "scd", "oracle")

X, Y = sympy.symbols("x y")


def two_var_c(lam2: int, w: int, h: int) -> int:
    """Number of partitions of lam2 inside the w x h box that are not of the form (w^k, a)."""
    if lam2 < 0:
        raise ValidationError(f"lam2 must be nonnegative, got {lam2}")
    count = 0
    for mu in partitions_of(lam2, max_len=h, max_part=w):
        if any(part != w for part in mu.parts[:-1]):
            count += 1
    return count


def _by_formula(w: int, h: int) -> TwoRowPoly:
    degree = w * h
    coefficients = {(degree, 0): 1}
    for k in range(1, degree // 2 + 1):
        coefficients[(degree - k, k)] = two_var_c(k, w, h) - two_var_c(k - 1, w, h)
    return TwoRowPoly(w, h, coefficients)


def complete_homogeneous_at_monomials(w: int, h: int) -> sympy.Poly:
    """h_w evaluated at the h+1 monomials x^h, x^(h-1) y, ..., y^h, as an exact polynomial in x, y."""
    monomials = [X ** (h - i) * Y ** i for i in range(h + 1)]
    one = sympy.Poly(1, X, Y, domain="ZZ")
    zero = sympy.Poly(0, X, Y, domain="ZZ")
    # table[j] = h_j of the monomials seen so far
    table = [one] + [zero] * w
    for z in monomials:
        z_poly = sympy.Poly(z, X, Y, domain="ZZ")
        for j in range(1, w + 1):
            table[j] = table[j] + z_poly * table[j - 1]
    return table[w]


def _two_row_schur(a: int, b: int) -> sympy.Poly:
    return sympy.Poly(sum(X ** (a - i) * Y ** (b + i) for i in range(a - b + 1)), X, Y, domain="ZZ")


def schur_two_rows(poly: sympy.Poly, w: int = 1, h: Optional[int] = None) -> TwoRowPoly:
    """Decompose a symmetric homogeneous polynomial in x, y into the two-row Schur polynomials s_(a,b)(x,y).

    a_(a,b) = [x^a y^b] P - [x^(a+1) y^(b-1)] P.
    """
    if not isinstance(poly, sympy.Poly):
        poly = sympy.Poly(poly, X, Y, domain="ZZ")
    coeffs: Dict[Tuple[int, int], int] = {monom: int(c) for monom, c in poly.terms() if c}
    degrees = {i + j for i, j in coeffs}
    if len(degrees) > 1:
        raise ValidationError(f"Polynomial is not homogeneous: degrees {sorted(degrees)}")
    degree = degrees.pop() if degrees else 0
    if any(coeffs.get((j, i), 0) != c for (i, j), c in coeffs.items()):
        raise ValidationError("Polynomial is not symmetric in x and y")
    if h is None:
        h = degree // w if w else 0
    if w * h != degree:
        raise ValidationError(f"Degree {degree} is not w*h = {w}*{h}")
    result = {}
    for b in range(degree // 2 + 1):
        a = degree - b
        result[(a, b)] = coeffs.get((a, b), 0) - (coeffs.get((a + 1, b - 1), 0) if b > 0 else 0)
    decomposed = TwoRowPoly(w, h, result)
    rebuilt = sympy.Poly(0, X, Y, domain="ZZ")
    for (a, b), c in decomposed.coefficients.items():
        rebuilt = rebuilt + c * _two_row_schur(a, b)
    if rebuilt != poly:
        logging.error(f"Two-row Schur decomposition does not rebuild the polynomial of degree {degree}")
        raise CrossCheckError("Two-row Schur decomposition does not rebuild the input polynomial")
    return decomposed


def _by_oracle(w: int, h: int) -> TwoRowPoly:
    return schur_two_rows(complete_homogeneous_at_monomials(w, h), w, h)


def _by_scd(w: int, h: int) -> TwoRowPoly:
    # Import inside the function to avoid circular imports
    from .chains import scd_coefficients

    return scd_coefficients(w, h)


def two_var_plethysm(w: int, h: int, method: str = "formula") -> TwoRowPoly:
    """s_w[s_h](x,y) on two-row Schur polynomials, by rank counts, chain minima or direct expansion."""
    if w < 1 or h < 0:
        raise ValidationError(f"Two-variable plethysm needs w >= 1 and h >= 0, got w={w}, h={h}")
    if method not in METHODS:
        raise ValidationError(f"Unknown method {method!r}; expected one of {METHODS}")
    if h == 0:
        return TwoRowPoly(w, 0, {(0, 0): 1})
    result = {"formula": _by_formula, "scd": _by_scd, "oracle": _by_oracle}[method](w, h)
    logging.debug(f"s{w}[s{h}](x,y) by {method}: {len(result.coefficients)} terms")
    return result


def two_var_plethysm_all(w: int, h: int) -> TwoRowPoly:
    """Every applicable method; disagreement is a cross-check failure."""
    methods = METHODS if w in (2, 3, 4) else ("formula", "oracle")
    results = {method: two_var_plethysm(w, h, method) for method in methods}
    reference = results["formula"]
    for method, value in results.items():
        if value != reference:
            logging.error(f"s{w}[s{h}](x,y): method {method} gives {value.coefficients}, "
                          f"formula gives {reference.coefficients}")
            raise CrossCheckError(f"Two-variable methods disagree for w={w}, h={h}")
    return reference


def truncate_two_rows(f: SymFunc) -> SymFunc:
    """f restricted to Schur terms of length at most 2."""
    if f.basis != "s":
        raise ValidationError(f"Truncation acts on Schur expansions, got basis {f.basis}")
    return SymFunc(f.degree, "s", {lam: c for lam, c in f.terms.items() if lam.length <= 2})


def shift_add(a: Partition, f: SymFunc) -> SymFunc:
    """s_a (.) f: add a componentwise to every Schur index of f."""
    if f.basis != "s":
        raise ValidationError(f"Shifting acts on Schur expansions, got basis {f.basis}")
    return SymFunc(f.degree + a.size, "s", {lam + a: c for lam, c in f.terms.items()})


def _row_terms(w: int, h: int) -> SymFunc:
    degree = w * h
    terms = {Partition((degree,)): 1}
    for k in range(2, h + 1):
        terms[Partition((degree - k, k))] = 1
    return SymFunc(degree, "s", terms)


def _truncated(w: int, h: int) -> SymFunc:
    return two_var_plethysm(w, h).to_symfunc()


def width3_recursion(h: int) -> SymFunc:
    """s_(6,6) (.) (s_3[s_(h-4)] truncated) + s_(3h) + sum over 2 <= k <= h of s_(3h-k,k)."""
    if h < 4:
        raise ValidationError(f"The width-3 recursion starts at h = 4, got {h}")
    return shift_add(Partition((6, 6)), _truncated(3, h - 4)) + _row_terms(3, h)


def width4_recursion(h: int) -> SymFunc:
    """The width-4 analogue, with shifts by (6,6), (4,4) and (10,10)."""
    if h < 5:
        raise ValidationError(f"The width-4 recursion starts at h = 5, got {h}")
    return (shift_add(Partition((6, 6)), _truncated(4, h - 3))
            + shift_add(Partition((4, 4)), _truncated(4, h - 2))
            - shift_add(Partition((10, 10)), _truncated(4, h - 5))
            + _row_terms(4, h))
