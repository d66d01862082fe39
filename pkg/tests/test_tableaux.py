from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from oracles import (
    all_partitions,
    brute_king,
    brute_ssyt,
    brute_syt_count,
    hook_count,
    naive_column_insert,
    naive_row_insert,
)
from updown.partitions import Box, cells, conjugate
from updown.tableaux import (
    SkewTableau,
    column_delete,
    column_insert,
    descents_partial,
    enumerate_king,
    enumerate_ssyt,
    enumerate_syt,
    is_partial_tableau,
    is_yamanouchi,
    reading_word,
    remove_entry,
    reverse_reading_word,
    row_delete,
    row_insert,
    shape,
    transpose,
    word_weight,
)

I_RUN = ((1, 8), (2, 9), (4,), (5,))
S_RUN = SkewTableau.from_rows((2, 1), [(None, None, 1), (None, 2), (1, 3), (2, 4)])


def relabel(t, labels):
    return tuple(tuple(labels[x - 1] for x in row) for row in t)


def partial_tableaux(max_entry):
    """Every partial tableau with entries drawn from ``1..max_entry``."""
    for k in range(max_entry + 1):
        for subset in combinations(range(1, max_entry + 1), k):
            for lam in all_partitions(k):
                for t in enumerate_syt(lam):
                    yield relabel(t, subset)


def test_column_insert_examples():
    assert column_insert(((3, 6), (7,)), 8) == (((3, 6), (7,), (8,)), Box(3, 1))
    assert column_insert(((3, 6), (7,), (8,)), 1) == (((1, 3, 6), (7,), (8,)), Box(1, 3))
    assert column_insert((), 1) == (((1,),), Box(1, 1))
    with pytest.raises(ValueError):
        column_insert(((1, 2),), 2)


def test_column_delete_examples():
    # the letter ejected here is 2; this is the k=4 step of the running example
    assert column_delete(((1, 3), (2,)), Box(2, 1)) == (2, ((1, 3),))
    assert column_delete(((5,),), Box(1, 1)) == (5, ())
    with pytest.raises(ValueError):
        column_delete(((1, 3), (2,)), Box(1, 1))


def test_row_insert_examples():
    assert row_insert(((1, 3),), 2) == (((1, 2), (3,)), Box(2, 1))
    assert row_insert(((1, 8), (2,)), 9) == (((1, 8, 9), (2,)), Box(1, 3))
    assert row_insert((), 1) == (((1,),), Box(1, 1))


def test_insertion_against_naive_oracles():
    for t in partial_tableaux(5):
        for x in range(1, 7):
            if any(x in row for row in t):
                continue
            p, box = column_insert(t, x)
            assert (p, tuple(box)) == naive_column_insert(t, x)
            p, box = row_insert(t, x)
            assert (p, tuple(box)) == naive_row_insert(t, x)
            assert row_insert(t, x)[0] == transpose(column_insert(transpose(t), x)[0])


def test_column_insert_delete_round_trip_exhaustive():
    count = 0
    for t in partial_tableaux(6):
        for x in range(1, 7):
            if any(x in row for row in t):
                continue
            p, box = column_insert(t, x)
            assert column_delete(p, box) == (x, t)
            count += 1
        lam = shape(t)
        for i in range(1, len(lam) + 1):
            if i == len(lam) or lam[i] < lam[i - 1]:
                box = Box(i, lam[i - 1])
                x, smaller = column_delete(t, box)
                assert column_insert(smaller, x) == (t, box)
                y, smaller = row_delete(t, box)
                assert row_insert(smaller, y) == (t, box)
    assert count > 0


@given(st.permutations(range(1, 9)))
def test_column_inserting_reverse_reading_word_rebuilds(perm):
    t = ()
    for x in perm:
        t, _ = row_insert(t, x)
    rebuilt = ()
    for x in reverse_reading_word(t):
        rebuilt, _ = column_insert(rebuilt, x)
    assert rebuilt == t


def test_reading_words():
    assert reading_word(I_RUN) == (5, 4, 2, 9, 1, 8)
    assert reverse_reading_word(I_RUN) == (8, 1, 9, 2, 4, 5)
    assert reading_word(((1, 2),)) == (1, 2)
    assert reading_word(S_RUN) == (2, 4, 1, 3, 2, 1)
    assert reverse_reading_word(S_RUN) == (1, 2, 3, 1, 4, 2)


def test_descents_partial():
    assert descents_partial(((3, 6), (7,))) == {6}
    assert descents_partial(((1, 3, 6), (2, 7), (4, 8), (5, 9))) == {1, 3, 4, 6, 7, 8}
    assert descents_partial(((1, 2, 3),)) == set()


def test_yamanouchi():
    assert is_yamanouchi((1, 2, 1, 2)) and word_weight((1, 2, 1, 2)) == (2, 2)
    assert not is_yamanouchi((2, 1))
    assert is_yamanouchi((1, 2, 3, 1, 4, 2)) and word_weight((1, 2, 3, 1, 4, 2)) == (2, 2, 1, 1)


@pytest.mark.parametrize("n", range(7))
def test_enumerate_syt_counts(n):
    for lam in all_partitions(n):
        tabs = list(enumerate_syt(lam))
        assert len(tabs) == hook_count(lam) == len(set(tabs))
        assert all(is_partial_tableau(t) and shape(t) == lam for t in tabs)
        assert tabs == sorted(tabs, key=lambda t: [x for row in t for x in row])
    if n <= 5:
        for lam in all_partitions(n):
            assert hook_count(lam) == brute_syt_count(lam)


def test_enumerate_syt_examples():
    assert len(list(enumerate_syt((2, 1)))) == 2
    assert len(list(enumerate_syt((1, 1, 1)))) == 1
    assert len(list(enumerate_syt((3, 1)))) == 3


def test_enumerate_ssyt_against_brute_force():
    assert sorted(enumerate_ssyt((1,), 2)) == [((1,),), ((2,),)]
    for n in range(5):
        for lam in all_partitions(n):
            for k in range(1, 4):
                assert sorted(enumerate_ssyt(lam, k)) == sorted(brute_ssyt(lam, k))


def test_enumerate_king():
    assert sorted(enumerate_king((1,), 1)) == [((-1,),), ((1,),)]
    assert list(enumerate_king((3,), 1)) == [((1, 1, 1),), ((1, 1, -1),), ((1, -1, -1),), ((-1, -1, -1),)]
    for n in range(5):
        for lam in all_partitions(n):
            for k in (1, 2):
                assert sorted(enumerate_king(lam, k)) == sorted(brute_king(lam, k))


def test_skew_tableau_basics():
    assert S_RUN.outer == (3, 2, 2, 2)
    assert S_RUN.weight() == (2, 2, 1, 1)
    assert S_RUN.is_valid()
    assert SkewTableau.from_json(S_RUN.to_json()) == S_RUN
    assert SkewTableau.from_filled((2, 1), [(1,), (2,), (1, 3), (2, 4)]) == S_RUN
    assert SkewTableau.from_rows((1,), [(None, 1), (1,)]).is_valid()
    assert not SkewTableau.from_rows((1,), [(None, 1), (1, 1)]).is_valid()
    assert not SkewTableau.from_rows((1,), [(None, 2), (1,), (1,)]).is_valid()


def test_transpose_and_remove():
    t = ((1, 3, 6), (2, 7), (4, 8), (5, 9))
    assert transpose(transpose(t)) == t
    assert shape(transpose(t)) == conjugate(shape(t))
    assert remove_entry(t, 9) == ((1, 3, 6), (2, 7), (4, 8), (5,))
    with pytest.raises(ValueError):
        remove_entry(t, 1)
    assert len(list(cells(shape(t)))) == 9
