"""Exact rational linear algebra and polynomial utilities.

Every scalar in this package is a ``fractions.Fraction``: arithmetic is
exact, results are stored in lowest terms with a positive denominator,
and floats are rejected at the boundary so no rounding can sneak in.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction


def as_scalar(value: int | str | Fraction) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Accepts integers, Fractions, and strings such as ``"5"`` or ``"-3/7"``.
    Floats are rejected: their binary value is almost never the decimal the
    caller had in mind.
    """
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass an int, a string, or a Fraction")
    return Fraction(value)


class Matrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("entries",)

    def __init__(self, rows: Iterable[Iterable[int | str | Fraction]]):
        data = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("all rows must have the same length")
        self.entries: tuple[tuple[Fraction, ...], ...] = data

    @property
    def n_rows(self) -> int:
        return len(self.entries)

    @property
    def n_cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence[int | str | Fraction]) -> "Matrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.entries)) if self.entries else Matrix([])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix([[self.entries[i][j] for j in cols] for i in rows])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.n_cols != other.n_rows:
            raise ValueError(
                f"cannot multiply {self.n_rows}x{self.n_cols} by {other.n_rows}x{other.n_cols}"
            )
        cols = other.transpose().entries
        return Matrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.entries]
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Matrix({self.n_rows}x{self.n_cols}: {body})"


def determinant_exact(m: Matrix) -> Fraction:
    """Exact determinant via fraction-free Bareiss elimination.

    Denominators are cleared row by row first (multilinearity keeps the
    bookkeeping to one integer per row), so elimination runs entirely over
    integers and the division at each step is exact.  This avoids the
    intermediate-fraction blowup of naive Gaussian elimination.
    """
    if m.n_rows != m.n_cols:
        raise ValueError(f"determinant needs a square matrix, got {m.n_rows}x{m.n_cols}")
    n = m.n_rows
    if n == 0:
        return Fraction(1)
    scale = 1
    a: list[list[int]] = []
    for row in m.entries:
        mult = math.lcm(*(e.denominator for e in row))
        scale *= mult
        a.append([(e * mult).numerator for e in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1], scale)


def _check_index_set(indices: tuple[int, ...], bound: int, what: str) -> None:
    for lo, hi in itertools.pairwise(indices):
        if lo >= hi:
            raise ValueError(f"{what} indices must be strictly increasing")
    if indices and (indices[0] < 0 or indices[-1] >= bound):
        raise ValueError(f"{what} index out of range 0..{bound - 1}")


def minor(m: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Fraction:
    """Determinant of the submatrix selected by ``rows`` and ``cols``.

    Both index sets must be strictly increasing, of equal length, and in
    bounds.
    """
    rows = tuple(rows)
    cols = tuple(cols)
    if len(rows) != len(cols):
        raise ValueError("row and column sets must have equal size")
    _check_index_set(rows, m.n_rows, "row")
    _check_index_set(cols, m.n_cols, "column")
    return determinant_exact(m.submatrix(rows, cols))


def first_negative_minor(
    m: Matrix, max_order: int
) -> tuple[tuple[int, ...], tuple[int, ...], Fraction] | None:
    """Return the first negative minor of order <= ``max_order``, or None.

    Minors are visited by increasing order, then lexicographically by row
    set and by column set, so the returned witness is deterministic.  Each
    order is computed from the previous one by Laplace expansion along the
    first selected row, which shares all sub-determinants and skips zero
    entries; only two layers are kept in memory.
    """
    n_rows, n_cols = m.n_rows, m.n_cols
    top = min(max_order, n_rows, n_cols)
    if top <= 0:
        return None
    grid = [
        [e.numerator if e.denominator == 1 else e for e in row] for row in m.entries
    ]
    prev: dict[int, int | Fraction] = {}
    for k in range(1, top + 1):
        cur: dict[int, int | Fraction] = {}
        col_choices = []
        for cols in itertools.combinations(range(n_cols), k):
            cmask = 0
            for c in cols:
                cmask |= 1 << c
            col_choices.append((cols, cmask, tuple(cmask ^ (1 << c) for c in cols)))
        for rows in itertools.combinations(range(n_rows), k):
            rmask = 0
            for r in rows:
                rmask |= 1 << r
            row_key = rmask << n_cols
            top_row = grid[rows[0]]
            if k == 1:
                for cols, cmask, _subs in col_choices:
                    d = top_row[cols[0]]
                    if d < 0:
                        return rows, cols, Fraction(d)
                    cur[row_key | cmask] = d
            else:
                rest_key = (rmask ^ (1 << rows[0])) << n_cols
                for cols, cmask, subs in col_choices:
                    d = 0
                    sign = 1
                    for idx in range(k):
                        a = top_row[cols[idx]]
                        if a:
                            d += sign * a * prev[rest_key | subs[idx]]
                        sign = -sign
                    if d < 0:
                        return rows, cols, Fraction(d)
                    cur[row_key | cmask] = d
        prev = cur
    return None


class Polynomial:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of x**i.  Trailing zeros are trimmed;
    the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int | str | Fraction] = ()):
        data = [as_scalar(c) for c in coeffs]
        while data and data[-1] == 0:
            data.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(data)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x: int | str | Fraction) -> Fraction:
        x = as_scalar(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial | int | Fraction") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Polynomial(), self
        lead = other.coeffs[-1]
        dd = other.degree
        rem = list(self.coeffs)
        quo = [Fraction(0)] * (self.degree - dd + 1)
        for i in range(len(rem) - 1, dd - 1, -1):
            if rem[i]:
                f = rem[i] / lead
                quo[i - dd] = f
                for j, c in enumerate(other.coeffs):
                    rem[i - dd + j] -= f * c
        return Polynomial(quo), Polynomial(rem)

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def primitive(self) -> "Polynomial":
        """Divide by the positive content, giving coprime integer coefficients.

        The scaling factor is always positive, so signs (and hence Sturm
        sign counts) are preserved.
        """
        if not self.coeffs:
            return self
        num_gcd = math.gcd(*(c.numerator for c in self.coeffs))
        den_lcm = math.lcm(*(c.denominator for c in self.coeffs))
        return Polynomial([c * Fraction(den_lcm, num_gcd) for c in self.coeffs])

    @staticmethod
    def gcd(p: "Polynomial", q: "Polynomial") -> "Polynomial":
        """Euclidean gcd with content normalization at every remainder step.

        Normalizing keeps coefficient growth polynomial instead of
        exponential.  The result is primitive with a positive leading
        coefficient (or zero if both inputs are zero).
        """
        a, b = p.primitive(), q.primitive()
        while not b.is_zero():
            a, b = b, (a % b).primitive()
        if not a.is_zero() and a.leading_coefficient() < 0:
            a = -a
        return a

    def squarefree_part(self) -> "Polynomial":
        """self divided by gcd(self, self'), which strips multiplicities."""
        if self.is_zero():
            raise ValueError("zero polynomial has no squarefree part")
        g = Polynomial.gcd(self, self.derivative())
        quo, rem = divmod(self, g)
        if not rem.is_zero():  # cannot happen: g divides self
            raise ArithmeticError("inexact division by gcd")
        return quo

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"


def _sturm_chain(q: Polynomial) -> list[Polynomial]:
    # q must be squarefree of degree >= 1; the chain then ends in a nonzero
    # constant and is a genuine Sturm chain.
    chain = [q.primitive(), q.derivative().primitive()]
    while not chain[-1].is_zero():
        rem = chain[-2] % chain[-1]
        if rem.is_zero():
            break
        chain.append((-rem).primitive())
    return [c for c in chain if not c.is_zero()]


def _sign_variations_at_infinity(chain: list[Polynomial], negative_side: bool) -> int:
    signs = []
    for c in chain:
        s = 1 if c.leading_coefficient() > 0 else -1
        if negative_side and c.degree % 2 == 1:
            s = -s
        signs.append(s)
    return sum(1 for a, b in itertools.pairwise(signs) if a != b)


def count_distinct_real_roots(p: Polynomial) -> int:
    """Number of distinct real roots of ``p``.

    The polynomial is replaced by its squarefree part (multiplicities do
    not change the root set), then a Sturm chain is evaluated in the limit
    at minus and plus infinity via leading-coefficient signs.
    """
    if p.is_zero():
        raise ValueError("root count of the zero polynomial is undefined")
    q = p.squarefree_part()
    if q.degree == 0:
        return 0
    chain = _sturm_chain(q)
    return _sign_variations_at_infinity(chain, True) - _sign_variations_at_infinity(chain, False)
