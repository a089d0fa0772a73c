import pytest
from hypothesis import given, strategies as st

from hamchain import (
    DisconnectedSequenceError,
    GeneratingSequence,
    Graph,
    RecognitionError,
    SequenceError,
    enumerate_sequences,
    parse_sequence,
    parse_with_isolated,
    recover_sequence,
    sequence_from_bit_runs,
)
from hamchain.graph import materialize

run_lists = st.lists(
    st.tuples(st.integers(1, 6), st.integers(1, 6)), min_size=1, max_size=5
)


def test_parse_run_length_notation():
    assert parse_sequence("0^2 1^2 0^2 1^3").runs == ((2, 2), (2, 3))


def test_parse_minimal_word():
    assert parse_sequence("01").runs == ((1, 1),)


def test_parse_raw_equals_run_length():
    assert parse_sequence("0011") == parse_sequence("0^2 1^2")


@pytest.mark.parametrize(
    "text",
    [
        "(0^2 1^2)(0^2 1^3)",
        "0^2 1^2 0^2 1^3",
        "  0^2\t1^2 (0^2) (1^3)",
        "0 0 1 1 0 0 1 1 1",
        "001100111",
    ],
)
def test_parse_notations_agree(text):
    assert parse_sequence(text).runs == ((2, 2), (2, 3))


def test_parse_multi_digit_exponents():
    seq = parse_sequence("0^3 1^4 0^10 1^6 0^5 1^11 0^3 1^8")
    assert seq.runs == ((3, 4), (10, 6), (5, 11), (3, 8))
    assert seq.zeros == 21 and seq.ones == 29 and seq.n == 50


def test_leading_one_is_flipped():
    # the generated graph does not depend on the first symbol
    assert parse_sequence("11").runs == ((1, 1),)
    assert parse_sequence("110011").runs == ((1, 1), (2, 2))
    assert parse_sequence("1^3 0 1").runs == ((1, 2), (1, 1))


@pytest.mark.parametrize(
    "text",
    ["", "   ", "012", "0^0 1", "0^ 1", "^3", "0^2", "(0 1", "0 1)", "0", "1", "10"],
)
def test_parse_rejects_bad_input(text):
    with pytest.raises(SequenceError):
        parse_sequence(text)


def test_trailing_zeros_rejected_by_default():
    with pytest.raises(DisconnectedSequenceError) as exc:
        parse_sequence("0 1 0")
    assert exc.value.isolated == 1


def test_trailing_zeros_permissive():
    assert parse_sequence("0 1 0^3", allow_isolated=True).runs == ((1, 1),)
    seq, isolated = parse_with_isolated("0011000")
    assert seq.runs == ((2, 2),) and isolated == 3


def test_adjacent_runs_merge():
    assert parse_sequence("0^2 0^3 1 1^4").runs == ((5, 5),)


def test_sequence_from_bit_runs():
    assert sequence_from_bit_runs([(0, 2), (1, 0), (0, 1), (1, 3)]).runs == ((3, 3),)
    with pytest.raises(DisconnectedSequenceError):
        sequence_from_bit_runs([(0, 1), (1, 1), (0, 2)])


def test_invalid_run_values():
    with pytest.raises(SequenceError):
        GeneratingSequence(())
    with pytest.raises(SequenceError):
        GeneratingSequence(((0, 1),))
    with pytest.raises(SequenceError):
        GeneratingSequence(((1, -2),))


def test_totals():
    seq = GeneratingSequence(((3, 4), (10, 6), (5, 3), (3, 8)))
    assert (seq.h, seq.zeros, seq.ones, seq.n) == (4, 21, 21, 42)


def test_str_omits_unit_exponents():
    assert str(GeneratingSequence(((2, 1), (1, 2)))) == "0^2 1 0 1^2"


@given(run_lists)
def test_str_roundtrip(runs):
    seq = GeneratingSequence(tuple(runs))
    assert parse_sequence(str(seq)) == seq


@given(run_lists)
def test_word_roundtrip(runs):
    seq = GeneratingSequence(tuple(runs))
    assert parse_sequence(seq.word()) == seq


@given(run_lists)
def test_mirror_is_an_involution(runs):
    seq = GeneratingSequence(tuple(runs))
    assert seq.mirror().mirror() == seq
    assert seq.mirror().n == seq.n


def test_mirror_swaps_and_reverses():
    assert GeneratingSequence(((3, 1), (2, 4))).mirror().runs == ((4, 2), (1, 3))


def test_roundtrip_all_small_sequences():
    # recover inverts materialization exactly, for both kinds
    for n in range(2, 13):
        for seq in enumerate_sequences(n):
            assert recover_sequence(materialize(seq, "chain")) == seq
            assert recover_sequence(materialize(seq, "threshold")) == seq


def test_roundtrip_large_runs():
    seq = GeneratingSequence(((3, 4), (10, 6), (5, 3), (3, 8)))
    assert recover_sequence(materialize(seq, "chain")) == seq
    assert recover_sequence(materialize(seq, "threshold")) == seq


def test_recover_c4_from_raw_edges():
    c4 = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)], "chain")
    assert recover_sequence(c4).runs == ((2, 2),)


def test_recover_without_cells_picks_lexicographic_orientation():
    # K_{1,3} is the chain graph of both (1,3) and (3,1); ties break low
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)], "chain")
    assert recover_sequence(star).runs == ((1, 3),)


def test_recover_rejects_non_threshold():
    p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)], "threshold")
    with pytest.raises(RecognitionError):
        recover_sequence(p4)
    two_k2 = Graph.from_edges(4, [(0, 1), (2, 3)], "threshold")
    with pytest.raises(RecognitionError):
        recover_sequence(two_k2)


def test_recover_rejects_non_chain():
    triangle = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)], "chain")
    with pytest.raises(RecognitionError):
        recover_sequence(triangle)
    c6 = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)], "chain")
    with pytest.raises(RecognitionError):
        recover_sequence(c6)
    disconnected = Graph.from_edges(4, [(0, 1), (2, 3)], "chain")
    with pytest.raises(RecognitionError):
        recover_sequence(disconnected)
