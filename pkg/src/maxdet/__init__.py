"""Greedy nested maximal-determinant 0/1 matrices, with brute-force oracles."""
from .border_form import BorderAssignment, BorderForm, bordered_det, build_border_form, eval_border_form
from .errors import ArithmeticOverflowError, DimensionMismatchError, MatrixParseError, SizeGuardError
from .exact_linalg import BinaryMatrix, IntMatrix, adjugate, det_bareiss, det_cofactor
from .growth import (
    BranchPolicy,
    GrowthNode,
    SolutionForest,
    compare_with_reference,
    grow_forest,
    grow_once,
    grow_sequence,
)
from .oracle import OracleReport, brute_dn, brute_Mn, check_relation
from .reference import A1, A2, A3, A15, TABLES, ReferenceTables
from .search import MaxResult, TieBreakPolicy, enumerate_maximizers, maximize_exhaustive, maximize_fast

__version__ = "0.1.0"
