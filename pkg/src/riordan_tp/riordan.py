"""Riordan triangles: construction, extraction, and the classical registry.

A triangle can be built three ways: from its two column-recurrence
sequences, from a pair of truncated power series, or as a recursive
(Catalan-like) matrix with a tridiagonal production rule.  The inverse
direction recovers the leading recurrence coefficients from a numeric
triangle and detects triangles that satisfy no such recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import Matrix, as_scalar
from .sequences import SequenceSpec, Tail


class NotRiordanError(ValueError):
    """The triangle entries are inconsistent with any column recurrence."""

    def __init__(self, n: int, k: int):
        super().__init__(f"entry ({n},{k}) is inconsistent with the column recurrence")
        self.n = n
        self.k = k


class Triangle:
    """Lower-triangular array r[n][k] for 0 <= k <= n, with r[0][0] = 1."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int | str | Fraction]]):
        data = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        if not data:
            raise ValueError("a triangle needs at least one row")
        for n, row in enumerate(data):
            if len(row) != n + 1:
                raise ValueError(f"row {n} must have {n + 1} entries, got {len(row)}")
        if data[0][0] != 1:
            raise ValueError("the top entry must be 1")
        self.rows: tuple[tuple[Fraction, ...], ...] = data

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def entry(self, n: int, k: int) -> Fraction:
        """r[n][k]; entries outside 0 <= k <= n are zero."""
        if not 0 <= n < self.n_rows:
            raise ValueError(f"row {n} is not part of this {self.n_rows}-row triangle")
        if 0 <= k <= n:
            return self.rows[n][k]
        return Fraction(0)

    def row(self, n: int) -> tuple[Fraction, ...]:
        return self.rows[n]

    def column(self, k: int, count: int | None = None) -> tuple[Fraction, ...]:
        count = self.n_rows if count is None else count
        if count > self.n_rows:
            raise ValueError("not enough rows for the requested column length")
        return tuple(self.entry(n, k) for n in range(count))

    def window(self, n: int) -> Matrix:
        """Leading n x n principal submatrix, zeros above the diagonal."""
        if n > self.n_rows:
            raise ValueError(f"window {n} exceeds the {self.n_rows} built rows")
        return Matrix([[self.entry(i, j) for j in range(n)] for i in range(n)])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Triangle) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Triangle({[list(map(str, row)) for row in self.rows]!r})"


@dataclass(frozen=True)
class RiordanSpec:
    """A Riordan triangle described by its two recurrence sequences.

    ``a_seq`` produces the entries of columns >= 1 of each new row,
    ``z_seq`` produces column 0.  Properness requires a nonzero leading
    a-term.
    """

    a_seq: SequenceSpec
    z_seq: SequenceSpec

    def __post_init__(self) -> None:
        if self.a_seq.term(0) == 0:
            raise ValueError("the leading a-sequence term must be nonzero")


def build_triangle(spec: RiordanSpec, n_rows: int) -> Triangle:
    """Build rows 0..n_rows-1 by the two-sequence recurrence.

    Row n+1 entry 0 is sum_j z_j r[n][j]; entry k+1 is sum_j a_j r[n][k+j].
    Both sums stop at the triangle boundary since r[n][j] = 0 for j > n.
    """
    if n_rows < 1:
        raise ValueError("n_rows must be >= 1")
    rows: list[list[Fraction]] = [[Fraction(1)]]
    for n in range(n_rows - 1):
        prev = rows[-1]
        nxt = [sum((spec.z_seq.term(j) * prev[j] for j in range(n + 1)), Fraction(0))]
        for k in range(n + 1):
            nxt.append(
                sum((spec.a_seq.term(j) * prev[k + j] for j in range(n - k + 1)), Fraction(0))
            )
        rows.append(nxt)
    return Triangle(rows)


def coefficient_matrix(spec: RiordanSpec, n: int) -> Matrix:
    """Leading n x n window of the coefficient matrix.

    Column 0 holds the z-sequence; column j >= 1 holds the a-sequence
    shifted down by j - 1, so the non-z part is the a-sequence Toeplitz
    matrix.
    """
    if n < 1:
        raise ValueError("window size must be >= 1")
    rows = []
    for i in range(n):
        row = [spec.z_seq.term(i)]
        row.extend(
            spec.a_seq.term(i - j + 1) if i - j + 1 >= 0 else Fraction(0)
            for j in range(1, n)
        )
        rows.append(row)
    return Matrix(rows)


@dataclass(frozen=True)
class RecursiveMatrixParams:
    """Nonnegative parameters (a, b; s, t) of a recursive triangle."""

    a: Fraction
    b: Fraction
    s: Fraction
    t: Fraction

    def __post_init__(self) -> None:
        for name in ("a", "b", "s", "t"):
            value = as_scalar(getattr(self, name))
            if value < 0:
                raise ValueError(f"parameter {name} must be nonnegative")
            object.__setattr__(self, name, value)

    def to_riordan_spec(self) -> RiordanSpec:
        """The equivalent two-sequence description: z = (a, b), a = (1, s, t)."""
        return RiordanSpec(
            a_seq=SequenceSpec((Fraction(1), self.s, self.t)),
            z_seq=SequenceSpec((self.a, self.b)),
        )


def build_recursive_matrix(params: RecursiveMatrixParams, n_rows: int) -> Triangle:
    """Triangle with row rule r[n+1][0] = a r[n][0] + b r[n][1] and
    r[n+1][k] = r[n][k-1] + s r[n][k] + t r[n][k+1].

    This is a direct implementation of the tridiagonal production rule; it
    must agree entrywise with ``build_triangle`` on the equivalent
    two-sequence description.
    """
    if n_rows < 1:
        raise ValueError("n_rows must be >= 1")

    def at(row: Sequence[Fraction], k: int) -> Fraction:
        return row[k] if 0 <= k < len(row) else Fraction(0)

    rows: list[list[Fraction]] = [[Fraction(1)]]
    for n in range(n_rows - 1):
        prev = rows[-1]
        nxt = [params.a * prev[0] + params.b * at(prev, 1)]
        for k in range(1, n + 2):
            nxt.append(at(prev, k - 1) + params.s * at(prev, k) + params.t * at(prev, k + 1))
        rows.append(nxt)
    return Triangle(rows)


def catalan_like_numbers(params: RecursiveMatrixParams, count: int) -> tuple[Fraction, ...]:
    """First ``count`` entries of column 0 of the recursive triangle."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return build_recursive_matrix(params, count).column(0)


@dataclass(frozen=True)
class SeriesPair:
    """Truncated power series pair (g, f) with g(0) = 1 and f(0) != 0.

    ``order`` is the number of trustworthy coefficients; it defaults to
    the shorter of the two coefficient lists.
    """

    g_coeffs: tuple[Fraction, ...]
    f_coeffs: tuple[Fraction, ...]
    order: int = 0

    def __post_init__(self) -> None:
        g = tuple(as_scalar(x) for x in self.g_coeffs)
        f = tuple(as_scalar(x) for x in self.f_coeffs)
        object.__setattr__(self, "g_coeffs", g)
        object.__setattr__(self, "f_coeffs", f)
        if not g or g[0] != 1:
            raise ValueError("g must have constant term 1")
        if not f or f[0] == 0:
            raise ValueError("f must have a nonzero constant term")
        order = self.order or min(len(g), len(f))
        if order < 1 or order > min(len(g), len(f)):
            raise ValueError("order must lie within both coefficient lists")
        object.__setattr__(self, "order", order)


def _convolve(p: Sequence[Fraction], q: Sequence[Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * n
    for i, a in enumerate(p[:n]):
        if a:
            for j, b in enumerate(q[: n - i]):
                out[i + j] += a * b
    return out


def triangle_from_gf(series: SeriesPair, n_rows: int) -> Triangle:
    """Triangle whose column k generates x^k f(x)^k g(x).

    Entry (n, k) is the x^(n-k) coefficient of f^k g, computed by plain
    truncated convolution; exact rational arithmetic dominates the cost at
    these sizes, so nothing fancier is warranted.
    """
    if n_rows < 1:
        raise ValueError("n_rows must be >= 1")
    if series.order < n_rows:
        raise ValueError(
            f"series are trustworthy to order {series.order}, need {n_rows}"
        )
    f = list(series.f_coeffs[:n_rows])
    column = list(series.g_coeffs[:n_rows])
    columns = [column]
    for _ in range(n_rows - 1):
        column = _convolve(column, f, n_rows)
        columns.append(column)
    return Triangle([[columns[k][n - k] for k in range(n + 1)] for n in range(n_rows)])


def extract_az(
    triangle: Triangle,
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Recover the leading z- and a-coefficients from a triangle.

    With m rows, the first m - 2 terms of each sequence are returned; the
    tail rule is never extrapolated.  Every recurrence equation the rows
    provide is checked by forward substitution, and the first inconsistent
    entry raises :class:`NotRiordanError` with its (n, k) position.  The
    z-system is triangular, so inconsistency can only surface on the
    a-side.
    """
    m = triangle.n_rows
    if m < 3:
        raise ValueError("need at least 3 rows to determine any coefficients")
    for n in range(m):
        if triangle.entry(n, n) == 0:
            raise ValueError(f"zero diagonal entry at row {n}; the system is singular")
    a_terms: list[Fraction] = []
    z_terms: list[Fraction] = []
    for n in range(m - 1):
        row, nxt = triangle.rows[n], triangle.rows[n + 1]
        # Equation i of this row pair involves a_0..a_i, with a_i multiplied
        # by the diagonal entry row[n]; i == len(a_terms) introduces a_i.
        for i in range(n + 1):
            k = n - i
            known = sum((a_terms[j] * row[k + j] for j in range(i)), Fraction(0))
            if i < len(a_terms):
                if known + a_terms[i] * row[n] != nxt[k + 1]:
                    raise NotRiordanError(n + 1, k + 1)
            else:
                a_terms.append((nxt[k + 1] - known) / row[n])
        known = sum((z_terms[j] * row[j] for j in range(len(z_terms))), Fraction(0))
        z_terms.append((nxt[0] - known) / row[n])
    return tuple(z_terms[: m - 2]), tuple(a_terms[: m - 2])


NAMED_TRIANGLES: dict[str, RiordanSpec] = {
    "pascal": RiordanSpec(
        a_seq=SequenceSpec((1, 1)), z_seq=SequenceSpec((1,))
    ),
    "catalan": RiordanSpec(
        a_seq=SequenceSpec((1, 2, 1)), z_seq=SequenceSpec((2, 1))
    ),
    "motzkin": RiordanSpec(
        a_seq=SequenceSpec((1, 1, 1)), z_seq=SequenceSpec((1, 1))
    ),
    "ballot": RiordanSpec(
        a_seq=SequenceSpec((1,), Tail.REPEAT_LAST),
        z_seq=SequenceSpec((1,), Tail.REPEAT_LAST),
    ),
    "schroder-large": RiordanSpec(
        a_seq=SequenceSpec((1, 2), Tail.REPEAT_LAST),
        z_seq=SequenceSpec((2,), Tail.REPEAT_LAST),
    ),
    "schroder-little": RiordanSpec(
        a_seq=SequenceSpec((1, 2), Tail.REPEAT_LAST),
        z_seq=SequenceSpec((1, 2), Tail.REPEAT_LAST),
    ),
}


def named_triangle(name: str) -> RiordanSpec:
    """Look up a classical triangle by name (case-insensitive)."""
    key = name.strip().lower().replace("_", "-")
    try:
        return NAMED_TRIANGLES[key]
    except KeyError:
        known = ", ".join(sorted(NAMED_TRIANGLES))
        raise ValueError(f"unknown triangle {name!r}; known names: {known}") from None
