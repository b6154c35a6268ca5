# utils.py
# Contains the text renderings used by --format text

import os
from functools import lru_cache
from typing import List, Optional

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from .models import CertificationReport, ChainDecomposition, QuasiKostkaMatrix, SignedChain, SymFunc, Tableau, TwoRowPoly

TEMPLATE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "templates")


@lru_cache(maxsize=None)
def template_environment() -> Environment:
    env = Environment(
        loader=FileSystemLoader(TEMPLATE_DIR),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
        undefined=StrictUndefined,
    )
    env.filters["english"] = tableau_to_english
    env.filters["rjust"] = lambda value, width: str(value).rjust(width)
    return env


def render(template_name: str, **context) -> str:
    return template_environment().get_template(template_name).render(**context)


def tableau_to_english(t: Tableau) -> List[str]:
    """Rows of the tableau top row first, entries right-aligned to a common width."""
    if not t.rows:
        return ["(empty)"]
    width = max(len(str(v)) for row in t.rows for v in row)
    return [" ".join(str(v).rjust(width) for v in row) for row in t.to_english()]


def render_symfunc(f: SymFunc) -> str:
    return render("symfunc.txt.j2", f=f)


def render_two_row(poly: TwoRowPoly) -> str:
    return render("two_row.txt.j2", poly=poly)


def render_matrix(matrix: QuasiKostkaMatrix) -> str:
    labels = [str(lam) for lam in matrix.index]
    rows = matrix.rows()
    width = max([len(label) for label in labels] + [len(str(v)) for row in rows for v in row])
    return render("matrix.txt.j2", matrix=matrix, labels=labels, rows=rows, width=width)


def render_chains(decomposition: ChainDecomposition, report: Optional[CertificationReport] = None,
                  differences: Optional[List[str]] = None) -> str:
    labels = dict(zip(decomposition.chains, decomposition.edge_labels))
    chains = [(chain, labels[chain]) for chain in decomposition.sorted_chains()]
    return render("chains.txt.j2", decomposition=decomposition, chains=chains,
                  report=report, differences=differences)


def render_signed_chains(chains: List[SignedChain], total: int, expected: Optional[int] = None) -> str:
    return render("signed_chains.txt.j2", chains=chains, total=total, expected=expected)
