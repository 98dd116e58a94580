"""Total positivity: exact minor enumeration and closed-form criteria.

The brute-force side enumerates minors with exact arithmetic and returns
a witness for any failure, so every closed-form criterion in this module
can be cross-checked against it.  The closed forms cover the tridiagonal
coefficient matrix with corner values (order 2 and all orders), the
determinant recurrences behind them, and the Hankel-matrix factorization
for Catalan-like numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Matrix, as_scalar, first_negative_minor
from .riordan import (
    RecursiveMatrixParams,
    RiordanSpec,
    build_recursive_matrix,
    build_triangle,
    coefficient_matrix,
)
from .sequences import MinorWitness, is_log_concave, is_log_convex

DEFAULT_SIZE_CAP = 12


@dataclass(frozen=True)
class TPReport:
    """Verdict of a total-positivity test on one matrix window.

    ``order`` of None means all orders were tested.  When the test fails,
    ``witness`` holds the first negative minor (smallest order, then
    lexicographic row and column sets).
    """

    holds: bool
    order: int | None
    shape: tuple[int, int]
    witness: MinorWitness | None = None


def is_tp_r(
    m: Matrix,
    order: int | None = None,
    *,
    size_cap: int = DEFAULT_SIZE_CAP,
    force: bool = False,
) -> TPReport:
    """Test whether all minors of order <= ``order`` are nonnegative.

    ``order=None`` tests every order up to min(rows, cols); since the
    minor count grows combinatorially, full scans of matrices larger than
    ``size_cap`` are refused unless ``force`` is set.  Enumeration goes by
    increasing order and lexicographic index sets, short-circuiting on the
    first negative minor.
    """
    if order is not None and order < 1:
        raise ValueError("order must be >= 1, or None for all orders")
    if order is None and max(m.n_rows, m.n_cols, 0) > size_cap and not force:
        raise ValueError(
            f"full minor scan of a {m.n_rows}x{m.n_cols} matrix exceeds the size cap "
            f"{size_cap}; pass force=True to run it anyway"
        )
    limit = min(m.n_rows, m.n_cols)
    hit = first_negative_minor(m, limit if order is None else min(order, limit))
    witness = None if hit is None else MinorWitness(*hit)
    return TPReport(hit is None, order, (m.n_rows, m.n_cols), witness)


@dataclass(frozen=True)
class TriangleTPReport:
    """Verdicts for a triangle window and its coefficient-matrix window."""

    triangle: TPReport
    coefficient: TPReport


def triangle_tp_check(
    spec: RiordanSpec,
    order: int | None = None,
    n_rows: int = 10,
    *,
    size_cap: int = DEFAULT_SIZE_CAP,
    force: bool = False,
) -> TriangleTPReport:
    """Run the minor test on a triangle window and its coefficient window.

    A nonnegative coefficient window forces a nonnegative triangle window
    (the triangle factors through it row by row), so reporting both makes
    that implication observable; the converse direction need not hold.
    """
    window = build_triangle(spec, n_rows).window(n_rows)
    coeff = coefficient_matrix(spec, n_rows)
    return TriangleTPReport(
        triangle=is_tp_r(window, order, size_cap=size_cap, force=force),
        coefficient=is_tp_r(coeff, order, size_cap=size_cap, force=force),
    )


@dataclass(frozen=True)
class JacobiParams:
    """Nonnegative values (a, b, r, s, t) of the bordered tridiagonal matrix.

    Diagonal (a, s, s, ...), superdiagonal all r, subdiagonal (b, t, t, ...).
    """

    a: Fraction
    b: Fraction
    r: Fraction
    s: Fraction
    t: Fraction

    def __post_init__(self) -> None:
        for name in ("a", "b", "r", "s", "t"):
            value = as_scalar(getattr(self, name))
            if value < 0:
                raise ValueError(f"parameter {name} must be nonnegative")
            object.__setattr__(self, name, value)


def jacobi_window(params: JacobiParams, n: int) -> Matrix:
    """Leading n x n window of the bordered tridiagonal matrix."""
    if n < 1:
        raise ValueError("window size must be >= 1")
    rows = []
    for i in range(n):
        row = [Fraction(0)] * n
        row[i] = params.a if i == 0 else params.s
        if i + 1 < n:
            row[i + 1] = params.r
        if i >= 1:
            row[i - 1] = params.b if i == 1 else params.t
        rows.append(row)
    return Matrix(rows)


def jacobi_tp2_criterion(params: JacobiParams) -> bool:
    """Order-2 positivity of the bordered tridiagonal matrix.

    Holds exactly when a s >= b r and s^2 >= r t; every other 2x2 minor is
    a product of nonnegative entries.
    """
    return params.a * params.s >= params.b * params.r and params.s**2 >= params.r * params.t


def _dominant_root_bound_holds(
    a: Fraction, b: Fraction, r: Fraction, s: Fraction, t: Fraction
) -> bool:
    # Decides a * (s + sqrt(s^2 - 4 r t)) / 2 >= b r without leaving the
    # rationals; the caller guarantees s^2 >= 4 r t.  When a s already
    # covers 2 b r the square root only helps; otherwise move it to one
    # side and square.
    gap = a * s - 2 * b * r
    if gap >= 0:
        return True
    return a * a * (s * s - 4 * r * t) >= gap * gap


def jacobi_tp_criterion(params: JacobiParams) -> bool:
    """All-orders positivity of the bordered tridiagonal matrix.

    Holds exactly when s^2 >= 4 r t (the band sequence (r, s, t) is real
    rooted) and a * lambda >= b r, where lambda is the larger root of
    x^2 - s x + r t.  The square-root comparison is decided by a sign case
    split and squaring; no floating point is involved.
    """
    a, b, r, s, t = params.a, params.b, params.r, params.s, params.t
    if s * s < 4 * r * t:
        return False
    return _dominant_root_bound_holds(a, b, r, s, t)


def d_sequence(
    r: int | str | Fraction, s: int | str | Fraction, t: int | str | Fraction, count: int
) -> tuple[Fraction, ...]:
    """Contiguous tridiagonal minors by their three-term recurrence.

    d_0 = 1, d_1 = s, d_n = s d_{n-1} - r t d_{n-2}; d_n equals the
    determinant of the n x n tridiagonal window with diagonal s,
    superdiagonal r, subdiagonal t.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    r, s, t = as_scalar(r), as_scalar(s), as_scalar(t)
    values = [Fraction(1), s]
    while len(values) < count:
        values.append(s * values[-1] - r * t * values[-2])
    return tuple(values[:count])


def big_d_sequence(params: JacobiParams, count: int) -> tuple[Fraction, ...]:
    """Bordered leading principal minors: D_0 = a, D_n = a d_n - b r d_{n-1}."""
    if count < 1:
        raise ValueError("count must be >= 1")
    d = d_sequence(params.r, params.s, params.t, count)
    values = [params.a]
    for n in range(1, count):
        values.append(params.a * d[n] - params.b * params.r * d[n - 1])
    return tuple(values)


def hankel_window(col0: tuple[Fraction, ...] | list) -> Matrix:
    """Hankel matrix h[i][j] = col0[i + j], sized so every entry is defined.

    The window is ceil(len/2) on a side.
    """
    values = [as_scalar(x) for x in col0]
    if not values:
        raise ValueError("need at least one term")
    n = (len(values) + 1) // 2
    return Matrix([[values[i + j] for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class DecompositionReport:
    """Outcome of the Hankel factorization check.

    ``mismatch`` stores (row, col, hankel value, product value) for the
    first differing entry when the factorization fails.
    """

    holds: bool
    size: int
    mismatch: tuple[int, int, Fraction, Fraction] | None = None


def aigner_decomposition_check(params: RecursiveMatrixParams, n: int) -> DecompositionReport:
    """Compare the Hankel matrix of column 0 with R diag(1, t, ..., t^(n-1)) R'.

    R is the n x n window of the recursive triangle and the Hankel matrix
    is built from 2n - 1 leading column-0 terms.  Exact entrywise
    comparison; the first differing entry is reported on failure.
    """
    if n < 1:
        raise ValueError("window size must be >= 1")
    triangle = build_recursive_matrix(params, 2 * n - 1)
    col0 = triangle.column(0)
    hankel = Matrix([[col0[i + j] for j in range(n)] for i in range(n)])
    r_matrix = triangle.window(n)
    t_matrix = Matrix.diagonal([params.t**k for k in range(n)])
    product = r_matrix @ t_matrix @ r_matrix.transpose()
    for i in range(n):
        for j in range(n):
            if hankel[i, j] != product[i, j]:
                return DecompositionReport(False, n, (i, j, hankel[i, j], product[i, j]))
    return DecompositionReport(True, n, None)


@dataclass(frozen=True)
class RecursiveMatrixGuarantees:
    """Which closed-form sufficient conditions a recursive triangle meets."""

    logconvex_guaranteed: bool
    tp_guaranteed: bool


def recursive_matrix_guarantees(params: RecursiveMatrixParams) -> RecursiveMatrixGuarantees:
    """Evaluate both sufficient conditions for a recursive triangle.

    Column 0 is log-convex when a s >= b and s^2 >= t; the whole triangle
    is totally positive when s^2 >= 4 t and a (s + sqrt(s^2 - 4 t)) / 2 >= b.
    Both are decided exactly.
    """
    a, b, s, t = params.a, params.b, params.s, params.t
    logconvex = a * s >= b and s * s >= t
    tp = s * s >= 4 * t and _dominant_root_bound_holds(a, b, Fraction(1), s, t)
    return RecursiveMatrixGuarantees(logconvex, tp)


def column0_logconvex_check(spec: RiordanSpec, n_rows: int) -> bool:
    """Whether column 0 of the built triangle is log-convex.

    For any triangle whose window is TP2 this must come out True, because
    the two-column matrix of consecutive column-0 terms factors through
    the triangle with a nonnegative right factor.
    """
    return is_log_convex(build_triangle(spec, n_rows).column(0))


@dataclass(frozen=True)
class RowLogConcavityReport:
    holds: bool
    first_failing_row: int | None = None


def rows_logconcave_check(spec: RiordanSpec, n_rows: int) -> RowLogConcavityReport:
    """Whether every row of the built triangle is log-concave."""
    triangle = build_triangle(spec, n_rows)
    for n in range(triangle.n_rows):
        if not is_log_concave(triangle.row(n)):
            return RowLogConcavityReport(False, n)
    return RowLogConcavityReport(True, None)
