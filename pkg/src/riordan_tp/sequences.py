"""Nonnegative sequences described finitely, and their positivity predicates.

A :class:`SequenceSpec` is a finite prefix plus a tail rule (pad with
zeros, or repeat the last entry forever).  That is enough to describe the
column-recurrence sequences of every classical combinatorial triangle.
The predicates here decide log-concavity and log-convexity by the full
pairwise definition, and Polya frequency exactly (finite case) or up to a
Toeplitz window (general case).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import (
    Matrix,
    Polynomial,
    as_scalar,
    count_distinct_real_roots,
    first_negative_minor,
)


class Tail(enum.Enum):
    """Rule extending a finite prefix to an infinite sequence."""

    ZERO = "zero"
    REPEAT_LAST = "repeat"


@dataclass(frozen=True)
class SequenceSpec:
    """An infinite nonnegative sequence: finite prefix plus tail rule."""

    prefix: tuple[Fraction, ...]
    tail: Tail = Tail.ZERO

    def __post_init__(self) -> None:
        coerced = tuple(as_scalar(x) for x in self.prefix)
        object.__setattr__(self, "prefix", coerced)
        if any(x < 0 for x in coerced):
            raise ValueError("sequence entries must be nonnegative")
        if self.tail is Tail.REPEAT_LAST and not coerced:
            raise ValueError("a repeating tail needs a nonempty prefix")

    def term(self, n: int) -> Fraction:
        """The nth term (0-based) under the tail rule."""
        if n < 0:
            raise ValueError("sequence index must be nonnegative")
        if n < len(self.prefix):
            return self.prefix[n]
        if self.tail is Tail.REPEAT_LAST:
            return self.prefix[-1]
        return Fraction(0)

    def terms(self, count: int) -> tuple[Fraction, ...]:
        return tuple(self.term(i) for i in range(count))


@dataclass(frozen=True)
class MinorWitness:
    """A negative minor certifying failure: row set, column set, value."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    value: Fraction


@dataclass(frozen=True)
class RootCountWitness:
    """Failing root count from the generating-polynomial test."""

    distinct_real_roots: int
    squarefree_degree: int


@dataclass(frozen=True)
class PFVerdict:
    """Outcome of a Polya-frequency test; a witness accompanies failure."""

    holds: bool
    witness: MinorWitness | RootCountWitness | None = None


def toeplitz_window(spec: SequenceSpec, n: int) -> Matrix:
    """Leading n x n window of the Toeplitz matrix: entry (i, j) is term i-j."""
    if n < 1:
        raise ValueError("window size must be >= 1")
    return Matrix(
        [[spec.term(i - j) if i >= j else 0 for j in range(n)] for i in range(n)]
    )


def _validated(seq: Iterable[int | str | Fraction]) -> list[Fraction]:
    values = [as_scalar(x) for x in seq]
    if any(v < 0 for v in values):
        raise ValueError("sequence entries must be nonnegative")
    return values


def is_log_concave(seq: Iterable[int | str | Fraction]) -> bool:
    """True when a_i * a_{j+1} <= a_{i+1} * a_j for all i < j.

    This is the full pairwise condition, not the adjacent-triples
    shortcut: the two differ for sequences with internal zeros.
    """
    a = _validated(seq)
    n = len(a)
    return all(
        a[i] * a[j + 1] <= a[i + 1] * a[j] for j in range(1, n - 1) for i in range(j)
    )


def is_log_convex(seq: Iterable[int | str | Fraction]) -> bool:
    """True when a_i * a_{j+1} >= a_{i+1} * a_j for all i < j."""
    a = _validated(seq)
    n = len(a)
    return all(
        a[i] * a[j + 1] >= a[i + 1] * a[j] for j in range(1, n - 1) for i in range(j)
    )


def is_pf_finite(seq: Iterable[int | str | Fraction]) -> PFVerdict:
    """Exact Polya-frequency test for a finite nonnegative sequence.

    A finite nonnegative sequence is PF exactly when its generating
    polynomial has only real zeros.  After removing the power-of-x factor,
    the polynomial has only real zeros iff the distinct-real-root count of
    its squarefree part equals that part's degree.
    """
    a = _validated(seq)
    if all(v == 0 for v in a):
        raise ValueError("the all-zero sequence has no generating polynomial to test")
    start = next(i for i, v in enumerate(a) if v != 0)
    poly = Polynomial(a[start:])
    squarefree = poly.squarefree_part()
    count = count_distinct_real_roots(squarefree)
    if count == squarefree.degree:
        return PFVerdict(True, None)
    return PFVerdict(False, RootCountWitness(count, squarefree.degree))


def is_pf_r_window(spec: SequenceSpec, order: int, window: int) -> PFVerdict:
    """Check all Toeplitz minors of order <= ``order`` inside a window.

    A True verdict means "PF of this order as far as the window shows";
    for repeating tails this is a bounded certificate, not a proof about
    the infinite sequence.  Failure comes with the first negative minor.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if window < order:
        raise ValueError("window must be at least the tested order")
    hit = first_negative_minor(toeplitz_window(spec, window), order)
    if hit is None:
        return PFVerdict(True, None)
    return PFVerdict(False, MinorWitness(*hit))
