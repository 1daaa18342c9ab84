import pytest
from hypothesis import given, strategies as st

from catmoves import errors
from catmoves.core import make_tableau
from catmoves.enumeration import (
    CAP_ENV,
    TreeIndex,
    count_trees,
    dyck_words,
    enumerate_syt,
    enumerate_trees,
    hook_length_count,
    rank_tree,
    rank_word,
    unrank_tree,
    unrank_word,
)
from catmoves.verify import partitions_up_to

import oracles


@pytest.mark.parametrize("n", range(1, 12))
def test_count_matches_recurrence(n):
    assert count_trees(n) == oracles.catalan_by_recurrence(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_enumeration_complete_and_distinct(n):
    trees = list(enumerate_trees(n))
    assert len(trees) == count_trees(n) == len(set(trees))
    words = [t.word for t in trees]
    assert words == sorted(words)
    if n <= 5:
        assert {t.pairs for t in trees} == {tuple(m) for m in oracles.noncrossing_matchings(n)}


def test_order_at_two():
    path, star = enumerate_trees(2)
    assert path.pairs == ((1, 4), (2, 3))
    assert star.pairs == ((1, 2), (3, 4))
    assert rank_tree(path) == TreeIndex(2, 0)
    assert rank_tree(star) == TreeIndex(2, 1)


def test_five_gives_42():
    assert len(set(enumerate_trees(5))) == 42


@pytest.mark.parametrize("n", range(1, 8))
def test_rank_is_position(n):
    for k, t in enumerate(enumerate_trees(n)):
        assert rank_tree(t).rank == k
        assert unrank_tree(TreeIndex(n, k)) == t


@given(st.integers(1, 30).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, count_trees(n) - 1))))
def test_rank_unrank_roundtrip_large(nk):
    n, k = nk
    word = unrank_word(n, k)
    assert len(word) == 2 * n
    assert rank_word(word) == k


def test_unrank_out_of_range():
    with pytest.raises(errors.RankOutOfRange):
        unrank_tree(TreeIndex(3, 5))
    with pytest.raises(errors.RankOutOfRange):
        unrank_tree(TreeIndex(3, -1))


def test_restartable():
    assert list(enumerate_trees(4)) == list(enumerate_trees(4))
    assert list(enumerate_syt((3, 2))) == list(enumerate_syt((3, 2)))


def test_tree_cap(monkeypatch):
    with pytest.raises(errors.SizeExceedsCap):
        enumerate_trees(17)
    with pytest.raises(errors.SizeExceedsCap):
        enumerate_trees(5, cap=4)
    monkeypatch.setenv(CAP_ENV, "3")
    with pytest.raises(errors.SizeExceedsCap):
        enumerate_trees(4)
    assert len(list(enumerate_trees(3))) == 5
    with pytest.raises(errors.LabelOutOfRange):
        enumerate_trees(0)


def test_dyck_words_small():
    assert list(dyck_words(3)) == ["((()))", "(()())", "(())()", "()(())", "()()()"]


@pytest.mark.parametrize("cells", range(1, 9))
def test_syt_counts(cells):
    for shape in partitions_up_to(cells):
        if sum(shape) != cells:
            continue
        found = list(enumerate_syt(shape))
        assert len(found) == len(set(found)) == hook_length_count(shape)
        for t in found:
            make_tableau(t.shape, t.rows)
        if cells <= 7:
            assert {t.rows for t in found} == set(oracles.syt_by_permutation(shape))
        keys = [tuple(x for row in t.rows for x in row) for t in found]
        assert keys == sorted(keys)


def test_syt_examples():
    assert [t.rows for t in enumerate_syt((2, 2))] == [((1, 2), (3, 4)), ((1, 3), (2, 4))]
    assert hook_length_count((3, 3)) == 5
    assert hook_length_count((4, 4)) == 14


@pytest.mark.parametrize("n", range(1, 8))
def test_two_row_count_is_catalan(n):
    assert hook_length_count((n, n)) == count_trees(n)


def test_syt_cap(monkeypatch):
    with pytest.raises(errors.ShapeTooLarge):
        enumerate_syt((11, 10))
    with pytest.raises(errors.ShapeTooLarge):
        enumerate_syt((3, 3), cap=5)
    monkeypatch.setenv(CAP_ENV, "2")
    with pytest.raises(errors.ShapeTooLarge):
        enumerate_syt((3, 2))
    with pytest.raises(errors.BadShape):
        enumerate_syt((2, 3))
