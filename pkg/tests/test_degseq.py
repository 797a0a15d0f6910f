import pytest
from hypothesis import given, settings, strategies as st

from twotrees.degseq import (
    SequenceError,
    check_sequence,
    erdos_gallai_violation,
    format_sequence,
    is_graphic,
    layoff,
    layoff_tracked,
    min_order,
    parse_sequence,
    realize,
    realize_edges,
    sigma,
    thresholds,
    yin_li_sufficient,
)

from oracles import bounded_sequences, labeled_counts


@st.composite
def sequences(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    terms = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    return tuple(sorted(terms, reverse=True))


def test_parse_run_length_and_sorting():
    assert parse_sequence("6,2^6") == (6, 2, 2, 2, 2, 2, 2)
    assert parse_sequence(" 1, 3 ,2^2") == (3, 2, 2, 1)
    assert format_sequence((3, 2, 1)) == "3,2,1"


@pytest.mark.parametrize("text", ["", "a,1", "2^", "1,,2", "-1"])
def test_parse_rejects_garbage(text):
    with pytest.raises(SequenceError):
        parse_sequence(text)


@pytest.mark.parametrize("bad", [(), (1, 2), (3, 1, 1), (1, -1)])
def test_check_sequence_rejects(bad):
    with pytest.raises(SequenceError):
        check_sequence(bad)


def test_sigma():
    assert sigma((6, 2, 2, 2, 2, 2, 2)) == 18


def test_erdos_gallai_hand_cases():
    # t=2: 3+3 > 2 + min(2,1) + min(2,1)
    assert erdos_gallai_violation((3, 3, 1, 1)) == 2
    assert erdos_gallai_violation((2, 2, 2)) is None
    assert not is_graphic((3, 3, 1, 1))
    assert not is_graphic((2, 2, 1))  # odd
    assert is_graphic(())
    assert not is_graphic((5, 1))  # out of range is a plain False


@pytest.mark.parametrize("n", range(1, 7))
def test_is_graphic_matches_enumeration(n):
    realizable = set(labeled_counts(n))
    for seq in bounded_sequences(n):
        assert is_graphic(seq) == (seq in realizable), seq


def test_layoff_example():
    # remove d_3 = 3 and decrement 4, 3, 2 -> (3, 2, 1, 2, 2), then sort
    assert layoff((4, 3, 3, 2, 2, 2), 3) == (3, 2, 2, 2, 1)
    with pytest.raises(SequenceError):
        layoff((1, 1), 3)


def test_layoff_tracked_bookkeeping():
    res, origin, dec = layoff_tracked((3, 3, 2, 2, 2), 1)
    assert dec == [0, 2, 3]
    assert sorted(origin) == [0, 2, 3, 4]
    assert res == (2, 2, 1, 1)
    assert [(3, 3, 2, 2, 2)[p] - (p in dec) for p in origin] == list(res)


@settings(max_examples=300, deadline=None)
@given(sequences(), st.data())
def test_layoff_preserves_graphicity(seq, data):
    if len(seq) < 2:
        return
    k = data.draw(st.integers(1, len(seq)))
    assert is_graphic(seq) == is_graphic(layoff(seq, k))


@settings(max_examples=300, deadline=None)
@given(sequences(max_n=12))
def test_yin_li_is_sufficient(seq):
    if sum(seq) % 2:
        with pytest.raises(SequenceError):
            yin_li_sufficient(seq)
    elif yin_li_sufficient(seq):
        assert is_graphic(seq)


def test_yin_li_regular_sequences():
    # d-regular on n >= d+1 vertices with nd even is graphic and detected
    assert yin_li_sufficient((3,) * 8)
    assert not yin_li_sufficient((3, 3, 1, 1))


@pytest.mark.parametrize(
    "k,n,a,b,eff",
    [
        (6, 78, 385, 456, 456),     # 6n - 12
        (7, 93, 552, 548, 552),     # 6(n-1) wins
        (8, 154, 1071, 1212, 1212),  # 8n - 20
        (3, 7, 12, 12, 12),
        (4, 7, 18, 14, 18),
    ],
)
def test_thresholds_by_hand(k, n, a, b, eff):
    th = thresholds(k, n)
    assert (th.bound_a, th.bound_b, th.effective) == (a, b, eff)
    assert th.residue == k % 3
    assert th.as_dict()["effective"] == eff


def test_threshold_applies_flag():
    assert thresholds(7, 100).applies == "a"
    assert thresholds(8, 200).applies == "b"


@pytest.mark.parametrize("k,expected", [(3, 6), (4, 7), (5, 24), (6, 78), (7, 93), (8, 154), (9, 177), (10, 254)])
def test_min_order(k, expected):
    assert min_order(k) == expected


def test_thresholds_reject_small_k():
    with pytest.raises(SequenceError):
        thresholds(2, 10)
    with pytest.raises(SequenceError):
        min_order(1)


@settings(max_examples=200, deadline=None)
@given(sequences(max_n=14))
def test_realize_has_the_right_degrees(seq):
    if not is_graphic(seq):
        with pytest.raises(SequenceError):
            realize(seq)
        return
    g = realize(seq)
    assert tuple(g.degrees()) == seq
    assert len(realize_edges(seq)) == sum(seq) // 2


def test_realize_edges_accepts_unsorted_input():
    edges = realize_edges((1, 3, 1, 1))
    deg = [0] * 4
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    assert deg == [1, 3, 1, 1]


def test_more_layoff_examples():
    assert layoff((2, 2, 2), 1) == (1, 1)
    assert layoff((1, 1, 0), 3) == (1, 1)
    # the residual loses exactly twice the removed term
    seq = (4, 3, 3, 2, 2, 2)
    assert sum(layoff(seq, 3)) == sum(seq) - 2 * seq[2]


def test_small_graphic_examples():
    assert is_graphic((3, 3, 3, 3))
    assert is_graphic((5, 5, 4, 4, 4, 2))
    assert sigma((0,)) == 0 and sigma((3, 3, 2, 2, 2)) == 12


def test_yin_li_examples():
    assert yin_li_sufficient((3,) * 14)
    assert not yin_li_sufficient((2, 1, 1))  # graphic, but the condition misses it
    assert yin_li_sufficient((1, 1))


def test_yin_li_exhaustive_small():
    for n in range(1, 11):
        for seq in bounded_sequences(n):
            if sum(seq) % 2 == 0 and yin_li_sufficient(seq):
                assert is_graphic(seq), seq


@pytest.mark.parametrize("t", range(2, 31))
def test_threshold_closed_forms(t):
    for k, form in [
        (3 * t, lambda n: 4 * t * n - 2 * n - 4 * t * t + 2 * t),
        (3 * t + 1, lambda n: 4 * t * n - 2 * n - 4 * t * t + 2 * t + 2),
        (3 * t + 2, lambda n: 4 * t * n - 4 * t * t - 2 * t),
    ]:
        if k == 3 * t + 1 and t < 3:
            continue
        n0 = min_order(k)
        for n in range(n0, n0 + 51):
            assert thresholds(k, n).bound_b == form(n)


def test_threshold_example_k6_n100():
    assert thresholds(6, 100).bound_b == 588
