# serialization.py
# Contains the JSON and CSV forms of symmetric function values, two-row expansions,
# chain decompositions, certification reports and matrices

import csv
import io
import json
import logging
from typing import Any, Dict, List, Optional

from .exceptions import ValidationError
from .models import (BASES, BoxLattice, CertificationReport, ChainDecomposition, Composition, Partition,
                     QuasiKostkaMatrix, SymFunc, TwoRowPoly)


def _dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2) + "\n"


def symfunc_to_dict(f: SymFunc) -> Dict[str, Any]:
    return {
        "degree": f.degree,
        "basis": f.basis,
        "terms": [{"index": list(index.parts), "coeff": str(coeff)} for index, coeff in f.sorted_terms()],
    }


def dump_symfunc(f: SymFunc) -> str:
    return _dumps(symfunc_to_dict(f))


def two_row_to_dict(poly: TwoRowPoly) -> Dict[str, Any]:
    return {
        "w": poly.w,
        "h": poly.h,
        "terms": [{"index": [a, b], "coeff": str(coeff)} for (a, b), coeff in poly.sorted_terms()],
    }


def dump_two_row(poly: TwoRowPoly) -> str:
    return _dumps(two_row_to_dict(poly))


def chains_to_dict(decomposition: ChainDecomposition) -> Dict[str, Any]:
    labels = dict(zip(decomposition.chains, decomposition.edge_labels))
    return {
        "w": decomposition.lattice.w,
        "h": decomposition.lattice.h,
        "chains": [{"elements": [list(lam.parts) for lam in chain], "labels": list(labels[chain])}
                   for chain in decomposition.sorted_chains()],
    }


def dump_chains(decomposition: ChainDecomposition, report: Optional[CertificationReport] = None,
                differences: Optional[List[str]] = None) -> str:
    payload = chains_to_dict(decomposition)
    if report is not None:
        payload["certificate"] = report.to_dict()
    if differences is not None:
        payload["golden"] = {"match": not differences, "differences": list(differences)}
    return _dumps(payload)


def matrix_to_csv(matrix: QuasiKostkaMatrix) -> str:
    """Header row "", labels...; then one row per partition, label first."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    labels = [str(lam) for lam in matrix.index]
    writer.writerow([""] + labels)
    for label, row in zip(labels, matrix.rows()):
        writer.writerow([label] + [str(v) for v in row])
    return buffer.getvalue()


def matrix_to_dict(matrix: QuasiKostkaMatrix) -> Dict[str, Any]:
    return {
        "degree": matrix.degree,
        "inverse": matrix.inverted,
        "index": [list(lam.parts) for lam in matrix.index],
        "rows": [[str(v) for v in row] for row in matrix.rows()],
        "max_abs_entry": str(matrix.max_abs_entry()),
    }


def _field(payload: Dict[str, Any], name: str, kind: type) -> Any:
    if name not in payload:
        raise ValidationError(f"Missing field {name!r}")
    value = payload[name]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ValidationError(f"Field {name!r} must be of type {kind.__name__}, got {value!r}")
    return value


def _int_list(value: Any, name: str) -> List[int]:
    if not isinstance(value, list) or any(not isinstance(v, int) or isinstance(v, bool) for v in value):
        raise ValidationError(f"Field {name!r} must be a list of integers, got {value!r}")
    return value


def _parse_coeff(value: Any) -> int:
    # integers are accepted as well as the decimal strings this module writes
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            pass
    raise ValidationError(f"Coefficient must be a decimal string, got {value!r}")


def symfunc_from_dict(payload: Dict[str, Any]) -> SymFunc:
    if not isinstance(payload, dict):
        raise ValidationError("A symmetric function is a JSON object")
    degree = _field(payload, "degree", int)
    basis = _field(payload, "basis", str)
    if basis not in BASES:
        raise ValidationError(f"Field 'basis' must be one of {BASES}, got {basis!r}")
    terms: Dict[Any, int] = {}
    for i, term in enumerate(_field(payload, "terms", list)):
        if not isinstance(term, dict):
            raise ValidationError(f"Term {i + 1} must be an object")
        parts = tuple(_int_list(term.get("index"), f"terms[{i}].index"))
        index = Partition(parts) if basis == "s" else Composition(parts)
        if index in terms:
            raise ValidationError(f"Index {index} appears twice")
        terms[index] = _parse_coeff(term.get("coeff"))
    return SymFunc(degree, basis, terms)


def load_symfunc(text: str) -> SymFunc:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"Invalid JSON: {e}") from e
    f = symfunc_from_dict(payload)
    logging.debug(f"Loaded a degree {f.degree} value with {len(f.terms)} terms in basis {f.basis}")
    return f


def chains_from_dict(payload: Dict[str, Any]) -> ChainDecomposition:
    """Labels in the payload are ignored; they are recomputed from the elements."""
    if not isinstance(payload, dict):
        raise ValidationError("A chain decomposition is a JSON object")
    lattice = BoxLattice(_field(payload, "w", int), _field(payload, "h", int))
    chains = []
    for i, chain in enumerate(_field(payload, "chains", list)):
        if not isinstance(chain, dict):
            raise ValidationError(f"Chain {i + 1} must be an object")
        elements = chain.get("elements")
        if not isinstance(elements, list) or not elements:
            raise ValidationError(f"Chain {i + 1} needs a nonempty 'elements' list")
        chains.append(tuple(Partition(tuple(_int_list(e, f"chains[{i}].elements"))) for e in elements))
    return ChainDecomposition(lattice, tuple(chains))


def load_chain_decomposition(text: str) -> ChainDecomposition:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"Invalid JSON: {e}") from e
    return chains_from_dict(payload)
