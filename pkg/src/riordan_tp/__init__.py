"""Exact-arithmetic Riordan triangles and total positivity tests.

Build classical combinatorial triangles from their recurrence sequences,
test total positivity of any order by exact minor enumeration with
failure witnesses, decide Polya frequency / log-convexity / log-concavity
exactly, and cross-check the closed-form tridiagonal criteria against
brute force.  All arithmetic is over arbitrary-precision rationals.
"""

from .exact import (
    Matrix,
    Polynomial,
    Scalar,
    as_scalar,
    count_distinct_real_roots,
    determinant_exact,
    first_negative_minor,
    minor,
)
from .sequences import (
    MinorWitness,
    PFVerdict,
    RootCountWitness,
    SequenceSpec,
    Tail,
    is_log_concave,
    is_log_convex,
    is_pf_finite,
    is_pf_r_window,
    toeplitz_window,
)
from .riordan import (
    NAMED_TRIANGLES,
    NotRiordanError,
    RecursiveMatrixParams,
    RiordanSpec,
    SeriesPair,
    Triangle,
    build_recursive_matrix,
    build_triangle,
    catalan_like_numbers,
    coefficient_matrix,
    extract_az,
    named_triangle,
    triangle_from_gf,
)
from .totalpos import (
    DecompositionReport,
    JacobiParams,
    RecursiveMatrixGuarantees,
    RowLogConcavityReport,
    TPReport,
    TriangleTPReport,
    aigner_decomposition_check,
    big_d_sequence,
    column0_logconvex_check,
    d_sequence,
    hankel_window,
    is_tp_r,
    jacobi_tp2_criterion,
    jacobi_tp_criterion,
    jacobi_window,
    recursive_matrix_guarantees,
    rows_logconcave_check,
    triangle_tp_check,
)

__version__ = "0.1.0"

__all__ = [
    "Matrix",
    "Polynomial",
    "Scalar",
    "as_scalar",
    "count_distinct_real_roots",
    "determinant_exact",
    "first_negative_minor",
    "minor",
    "MinorWitness",
    "PFVerdict",
    "RootCountWitness",
    "SequenceSpec",
    "Tail",
    "is_log_concave",
    "is_log_convex",
    "is_pf_finite",
    "is_pf_r_window",
    "toeplitz_window",
    "NAMED_TRIANGLES",
    "NotRiordanError",
    "RecursiveMatrixParams",
    "RiordanSpec",
    "SeriesPair",
    "Triangle",
    "build_recursive_matrix",
    "build_triangle",
    "catalan_like_numbers",
    "coefficient_matrix",
    "extract_az",
    "named_triangle",
    "triangle_from_gf",
    "DecompositionReport",
    "JacobiParams",
    "RecursiveMatrixGuarantees",
    "RowLogConcavityReport",
    "TPReport",
    "TriangleTPReport",
    "aigner_decomposition_check",
    "big_d_sequence",
    "column0_logconvex_check",
    "d_sequence",
    "hankel_window",
    "is_tp_r",
    "jacobi_tp2_criterion",
    "jacobi_tp_criterion",
    "jacobi_window",
    "recursive_matrix_guarantees",
    "rows_logconcave_check",
    "triangle_tp_check",
]
