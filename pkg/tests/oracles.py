"""Independent oracles used to cross-check the library.

Everything here is deliberately naive: cofactor determinants, direct
minor enumeration, and closed-form combinatorial numbers.  None of it
shares code with the package, so agreement is meaningful.
"""

import itertools
import math
from fractions import Fraction


def cofactor_det(rows):
    """Determinant by first-row cofactor expansion."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    sign = 1
    for j in range(n):
        if rows[0][j]:
            sub = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
            total += sign * rows[0][j] * cofactor_det(sub)
        sign = -sign
    return total


def brute_first_negative_minor(rows, max_order):
    """First negative minor by direct enumeration with cofactor_det."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    for k in range(1, min(max_order, n_rows, n_cols) + 1):
        for rs in itertools.combinations(range(n_rows), k):
            for cs in itertools.combinations(range(n_cols), k):
                value = cofactor_det([[rows[i][j] for j in cs] for i in rs])
                if value < 0:
                    return rs, cs, value
    return None


def brute_all_minors_nonneg(rows, max_order):
    return brute_first_negative_minor(rows, max_order) is None


def catalan_number(n):
    return math.comb(2 * n, n) // (n + 1)


def motzkin_number(n):
    return sum(math.comb(n, 2 * k) * catalan_number(k) for k in range(n // 2 + 1))


def central_binomial(n):
    return math.comb(2 * n, n)


def large_schroder_number(n):
    return sum(catalan_number(k) * math.comb(n + k, n - k) for k in range(n + 1))


def convolve(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += Fraction(a) * Fraction(b)
    return out
