import itertools
from fractions import Fraction

import pytest

from riordan_tp.exact import Matrix, minor
from riordan_tp.sequences import (
    MinorWitness,
    RootCountWitness,
    SequenceSpec,
    Tail,
    is_log_concave,
    is_log_convex,
    is_pf_finite,
    is_pf_r_window,
    toeplitz_window,
)

from oracles import brute_first_negative_minor


def test_term_tail_rules():
    assert SequenceSpec((1, 2)).term(5) == 0
    assert SequenceSpec((1, 2), Tail.REPEAT_LAST).term(5) == 2
    assert SequenceSpec((1, 2, 1)).term(1) == 2


def test_spec_validation():
    with pytest.raises(ValueError):
        SequenceSpec((1, -1))
    with pytest.raises(ValueError):
        SequenceSpec((), Tail.REPEAT_LAST)
    with pytest.raises(ValueError):
        SequenceSpec((1,)).term(-1)
    assert SequenceSpec(()).term(3) == 0


def test_toeplitz_window_examples():
    assert toeplitz_window(SequenceSpec((1, 2, 1)), 3) == Matrix(
        [[1, 0, 0], [2, 1, 0], [1, 2, 1]]
    )
    assert toeplitz_window(SequenceSpec((1,), Tail.REPEAT_LAST), 2) == Matrix(
        [[1, 0], [1, 1]]
    )
    assert toeplitz_window(SequenceSpec((0,)), 2) == Matrix([[0, 0], [0, 0]])


def test_log_concave_examples():
    assert is_log_concave((1, 3, 3, 1))
    assert is_log_concave((1, 4, 6, 4, 1))
    assert not is_log_concave((1, 1, 2))


def test_log_convex_examples():
    assert is_log_convex((1, 1, 2, 5, 14, 42))
    assert is_log_convex((1, 2, 4, 8))
    assert not is_log_convex((1, 2, 3))


def test_log_predicates_reject_negative_entries():
    with pytest.raises(ValueError):
        is_log_concave((1, -1, 1))
    with pytest.raises(ValueError):
        is_log_convex((1, -1, 1))


def test_internal_zero_needs_the_pairwise_definition():
    # adjacent triples alone would accept (1, 0, 1): 0*0 <= 1*1 twice,
    # but the i < j condition with (i, j) = (0, 1) gives 1*1 > 0*0
    assert not is_log_concave((1, 0, 1))
    assert is_log_convex((1, 0, 1))


def test_pf_finite_examples():
    assert is_pf_finite((1, 2, 1)).holds
    verdict = is_pf_finite((1, 1, 1))
    assert not verdict.holds
    assert isinstance(verdict.witness, RootCountWitness)
    assert verdict.witness == RootCountWitness(0, 2)
    assert is_pf_finite((1, 3, 3, 1)).holds


def test_pf_finite_rejects_all_zero():
    with pytest.raises(ValueError):
        is_pf_finite((0, 0, 0))


def test_pf_finite_strips_power_of_x():
    assert is_pf_finite((0, 0, 3)).holds
    assert not is_pf_finite((0, 1, 1, 1)).holds


def test_pf_window_examples():
    assert is_pf_r_window(SequenceSpec((1,), Tail.REPEAT_LAST), 3, 6).holds
    assert is_pf_r_window(SequenceSpec((1, 2), Tail.REPEAT_LAST), 2, 8).holds
    verdict = is_pf_r_window(SequenceSpec((1, 1, 1)), 3, 6)
    assert not verdict.holds
    assert verdict.witness == MinorWitness((1, 2, 3), (0, 1, 2), Fraction(-1))


def test_pf_window_witness_recomputes():
    spec = SequenceSpec((1, 1, 1))
    verdict = is_pf_r_window(spec, 3, 6)
    w = verdict.witness
    assert minor(toeplitz_window(spec, 6), w.rows, w.cols) == w.value < 0


def test_pf_window_matches_brute_force():
    spec = SequenceSpec((1, 2), Tail.REPEAT_LAST)
    window = toeplitz_window(spec, 8)
    assert brute_first_negative_minor([list(r) for r in window.entries], 2) is None


def test_pf_window_validates_arguments():
    with pytest.raises(ValueError):
        is_pf_r_window(SequenceSpec((1,)), 0, 5)
    with pytest.raises(ValueError):
        is_pf_r_window(SequenceSpec((1,)), 3, 2)


def _small_sequences(max_len, max_entry):
    for length in range(1, max_len + 1):
        yield from itertools.product(range(max_entry + 1), repeat=length)


def test_log_concavity_equals_windowed_order2_exhaustive():
    for seq in _small_sequences(5, 3):
        spec = SequenceSpec(seq)
        window = is_pf_r_window(spec, 2, len(seq) + 2).holds
        assert is_log_concave(seq) == window, seq


def test_pf_finite_implies_windowed_order4_exhaustive():
    for seq in _small_sequences(5, 3):
        if all(v == 0 for v in seq):
            continue
        if is_pf_finite(seq).holds:
            assert is_pf_r_window(SequenceSpec(seq), 4, len(seq) + 4).holds, seq


def test_log_concavity_is_reversal_invariant():
    for seq in _small_sequences(5, 3):
        assert is_log_concave(seq) == is_log_concave(tuple(reversed(seq))), seq


def _is_geometric_or_final_spike(seq):
    # the sequences that are simultaneously log-concave and log-convex:
    # all mass on the last entry, or a geometric progression from index 0
    if all(v == 0 for v in seq[:-1]):
        return True
    if seq[0] == 0:
        return False
    if len(seq) == 1:
        return True
    ratio = Fraction(seq[1], seq[0])
    return all(Fraction(seq[i]) == Fraction(seq[0]) * ratio**i for i in range(len(seq)))


def test_both_log_properties_exactly_for_geometric_shapes():
    for seq in _small_sequences(5, 3):
        both = is_log_concave(seq) and is_log_convex(seq)
        assert both == _is_geometric_or_final_spike(seq), seq
