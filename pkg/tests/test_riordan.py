import itertools
from fractions import Fraction

import pytest

from riordan_tp.exact import Matrix
from riordan_tp.riordan import (
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
from riordan_tp.sequences import SequenceSpec, Tail

from oracles import catalan_number, convolve

CATALAN_SERIES = (1, 1, 2, 5, 14, 42, 132, 429)


def rows_of(triangle):
    return [[int(x) for x in row] for row in triangle.rows]


def test_build_triangle_pascal():
    spec = RiordanSpec(a_seq=SequenceSpec((1, 1)), z_seq=SequenceSpec((1,)))
    assert rows_of(build_triangle(spec, 5)) == [
        [1],
        [1, 1],
        [1, 2, 1],
        [1, 3, 3, 1],
        [1, 4, 6, 4, 1],
    ]


def test_build_triangle_ballot():
    spec = named_triangle("ballot")
    assert rows_of(build_triangle(spec, 4)) == [[1], [1, 1], [2, 2, 1], [5, 5, 3, 1]]


def test_build_triangle_motzkin():
    spec = named_triangle("motzkin")
    assert rows_of(build_triangle(spec, 5)) == [
        [1],
        [1, 1],
        [2, 2, 1],
        [4, 5, 3, 1],
        [9, 12, 9, 4, 1],
    ]


def test_properness_requires_nonzero_leading_a():
    with pytest.raises(ValueError):
        RiordanSpec(a_seq=SequenceSpec((0, 1)), z_seq=SequenceSpec((1,)))


def test_coefficient_matrix_pascal():
    spec = named_triangle("pascal")
    assert coefficient_matrix(spec, 3) == Matrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]])


def test_coefficient_matrix_recursive_params():
    spec = RecursiveMatrixParams("a", 0, 0, 0)  # placeholder; windows below use symbols
    # with symbolic values unavailable, use concrete ones: a=3, b=5, s=7, t=11
    params = RecursiveMatrixParams(3, 5, 7, 11)
    window = coefficient_matrix(params.to_riordan_spec(), 4)
    assert window == Matrix(
        [[3, 1, 0, 0], [5, 7, 1, 0], [0, 11, 7, 1], [0, 0, 11, 7]]
    )


def test_coefficient_matrix_ballot():
    assert coefficient_matrix(named_triangle("ballot"), 2) == Matrix([[1, 1], [1, 1]])


def test_build_recursive_matrix_examples():
    assert rows_of(build_recursive_matrix(RecursiveMatrixParams(2, 1, 2, 1), 4)) == [
        [1],
        [2, 1],
        [5, 4, 1],
        [14, 14, 6, 1],
    ]
    pascal = build_triangle(named_triangle("pascal"), 4)
    assert build_recursive_matrix(RecursiveMatrixParams(1, 0, 1, 0), 4) == pascal
    motzkin = build_triangle(named_triangle("motzkin"), 4)
    assert build_recursive_matrix(RecursiveMatrixParams(1, 1, 1, 1), 4) == motzkin


def test_recursive_matrix_agrees_with_sequence_route_exhaustive():
    for combo in itertools.product(range(4), repeat=4):
        params = RecursiveMatrixParams(*combo)
        direct = build_recursive_matrix(params, 8)
        via_sequences = build_triangle(params.to_riordan_spec(), 8)
        assert direct == via_sequences, combo


def test_recursive_params_reject_negatives():
    with pytest.raises(ValueError):
        RecursiveMatrixParams(1, -1, 1, 1)


@pytest.mark.parametrize(
    "params,expected",
    [
        ((2, 1, 2, 1), (1, 2, 5, 14, 42)),
        ((1, 1, 1, 1), (1, 1, 2, 4, 9, 21)),
        ((2, 2, 3, 2), (1, 2, 6, 22, 90)),
        ((2, 2, 2, 1), (1, 2, 6, 20, 70)),
    ],
)
def test_catalan_like_numbers(params, expected):
    values = catalan_like_numbers(RecursiveMatrixParams(*params), len(expected))
    assert tuple(int(x) for x in values) == expected


def test_triangle_from_gf_pascal():
    series = SeriesPair((1,) * 5, (1,) * 5)
    assert triangle_from_gf(series, 5) == build_triangle(named_triangle("pascal"), 5)


def test_triangle_from_gf_ballot():
    series = SeriesPair(CATALAN_SERIES[:5], CATALAN_SERIES[:5])
    assert rows_of(triangle_from_gf(series, 4)) == [[1], [1, 1], [2, 2, 1], [5, 5, 3, 1]]


def test_triangle_from_gf_identity():
    series = SeriesPair((1, 0, 0, 0), (1, 0, 0, 0))
    triangle = triangle_from_gf(series, 4)
    assert triangle.window(4) == Matrix.identity(4)


def test_triangle_from_gf_matches_convolution_oracle():
    g = (1, 1, 1, 1, 1, 1)
    f = (1, 2, 1, 0, 0, 0)
    triangle = triangle_from_gf(SeriesPair(g, f), 6)
    column = list(g)
    for k in range(6):
        for n in range(k, 6):
            assert triangle.entry(n, k) == column[n - k], (n, k)
        column = convolve(column, f)[:6]


def test_series_pair_validation():
    with pytest.raises(ValueError):
        SeriesPair((2, 1), (1, 1))  # g(0) != 1
    with pytest.raises(ValueError):
        SeriesPair((1, 1), (0, 1))  # f(0) == 0
    with pytest.raises(ValueError):
        triangle_from_gf(SeriesPair((1, 1), (1, 1)), 5)  # too few coefficients


def test_gf_and_recurrence_agree_to_8_rows():
    pascal_series = SeriesPair((1,) * 8, (1,) * 8)
    assert triangle_from_gf(pascal_series, 8) == build_triangle(named_triangle("pascal"), 8)
    ballot_series = SeriesPair(CATALAN_SERIES, CATALAN_SERIES)
    assert triangle_from_gf(ballot_series, 8) == build_triangle(named_triangle("ballot"), 8)


def test_extract_az_pascal():
    z, a = extract_az(build_triangle(named_triangle("pascal"), 5))
    assert z == (1, 0, 0)
    assert a == (1, 1, 0)


def test_extract_az_ballot():
    z, a = extract_az(build_triangle(named_triangle("ballot"), 5))
    assert z == (1, 1, 1)
    assert a == (1, 1, 1)


def test_extract_az_round_trips_every_named_triangle():
    for name in NAMED_TRIANGLES:
        spec = named_triangle(name)
        z, a = extract_az(build_triangle(spec, 8))
        assert z == spec.z_seq.terms(6), name
        assert a == spec.a_seq.terms(6), name


def test_extract_az_detects_inconsistent_triangle():
    with pytest.raises(NotRiordanError) as info:
        extract_az(Triangle([[1], [1, 1], [1, 2, 2]]))
    assert (info.value.n, info.value.k) == (2, 2)


def test_extract_az_accepts_any_three_rows_with_nonzero_diagonal():
    # three rows only pin down (z0, a0); the remaining freedom means this
    # triangle is consistent even though its z1 would be negative
    z, a = extract_az(Triangle([[1], [2, 1], [3, 5, 1]]))
    assert z == (2,)
    assert a == (1,)


def test_extract_az_requires_three_rows_and_nonzero_diagonal():
    with pytest.raises(ValueError):
        extract_az(Triangle([[1], [1, 1]]))
    with pytest.raises(ValueError):
        extract_az(Triangle([[1], [1, 0], [1, 1, 1]]))


def test_named_triangle_registry():
    pascal = named_triangle("pascal")
    assert pascal.z_seq.terms(3) == (1, 0, 0)
    assert pascal.a_seq.terms(3) == (1, 1, 0)
    little = named_triangle("SCHRODER_LITTLE")
    assert little.z_seq.terms(4) == (1, 2, 2, 2)
    assert little.a_seq.terms(4) == (1, 2, 2, 2)
    ballot = named_triangle("ballot")
    assert ballot.z_seq.terms(3) == (1, 1, 1) == ballot.a_seq.terms(3)
    with pytest.raises(ValueError):
        named_triangle("fibonacci")


def test_ballot_column0_is_catalan():
    column = build_triangle(named_triangle("ballot"), 8).column(0)
    assert [int(x) for x in column] == [catalan_number(n) for n in range(8)]


def test_little_schroder_column0():
    column = build_triangle(named_triangle("schroder-little"), 5).column(0)
    assert [int(x) for x in column] == [1, 1, 3, 11, 45]


def test_block_factorization_identity_for_named_triangles():
    # the (n+2)-row window factors as [[1,0],[0,R_n]] times the bordered
    # Toeplitz block of the two sequences
    for name in NAMED_TRIANGLES:
        spec = named_triangle(name)
        for n in range(7):
            triangle = build_triangle(spec, n + 2)
            top = [[1] + [0] * (n + 1)]
            left = Matrix(
                top + [[0] + list(triangle.window(n + 1).entries[i]) for i in range(n + 1)]
            )
            right = Matrix(
                top
                + [
                    [spec.z_seq.term(i)]
                    + [spec.a_seq.term(i - j) if i >= j else 0 for j in range(n + 1)]
                    for i in range(n + 1)
                ]
            )
            assert left @ right == triangle.window(n + 2), (name, n)


def test_triangle_validation():
    with pytest.raises(ValueError):
        Triangle([])
    with pytest.raises(ValueError):
        Triangle([[2]])
    with pytest.raises(ValueError):
        Triangle([[1], [1, 1, 1]])
    t = Triangle([[1], [1, 2]])
    assert t.entry(1, 5) == 0
    with pytest.raises(ValueError):
        t.entry(2, 0)
    with pytest.raises(ValueError):
        t.window(3)
