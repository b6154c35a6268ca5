# __init__.py
# Tệp này xuất các phép toán chính của gói quasi_schur: chuyển khai triển F sang cơ sở Schur,
# plethysm qua bảng của các bảng, và phân tích xích đối xứng của các phân hoạch trong hộp

from .certifier import ChainCertifier, certify, compare_with_golden, restrict
from .chains import (closed_form_maxima, closed_form_minima, e2, e3, e4, f2, f3, f4, highest_weights,
                     lowest_weights, scd, scd_coefficients, scd_w2, scd_w3, scd_w4, strata_w4, stratum_w3)
from .combinat import (added_column, box_complement, box_elements, compositions_of, contains, covers,
                       dominance_leq, lex_cmp, lex_max, partitions_of, rank_sizes, subpartition_add,
                       subpartition_strip)
from .exceptions import (BasisMismatchError, CrossCheckError, NotSymmetricError, QuasiSchurError, RoundTripError,
                         SizeGuardExceeded, UnsupportedWidthError, ValidationError)
from .models import (BoxLattice, CertificationReport, ChainDecomposition, CheckResult, Composition, OperatorStep,
                     Partition, QuasiKostkaMatrix, RunConfig, SignedChain, SymFunc, Tableau, TableauOfTableaux,
                     TwoRowPoly)
from .plethysm import (count_stot, dynamic_reading_word, enumerate_stot, inverse_descent_composition,
                       leading_composition, leading_stot, leading_term, leading_term_newton, plethysm_F,
                       plethysm_schur, second_leading_term)
from .quasi_kostka import (F_to_schur, F_to_schur_via_chains, chain_sum, chains_from, checked_inverse,
                           enumerate_chains, invert_by_series, invert_unitriangular, quasi_kostka_matrix)
from .symfunc import F_to_M, is_symmetric, schur_expansion_to_F, schur_to_F
from .tableaux import (count_syt, descent_composition, descent_set, destandardize, enumerate_qyt, enumerate_ssyt,
                       enumerate_syt, is_quasi_yamanouchi, kostka, quasi_kostka, standardize, superstandard)
from .two_variables import (schur_two_rows, shift_add, truncate_two_rows, two_var_c, two_var_plethysm,
                            two_var_plethysm_all, width3_recursion, width4_recursion)

__version__ = "0.1.0"
