import pytest
from hypothesis import given, strategies as st

from catmoves import errors
from catmoves.core import make_tableau, make_tree, is_symmetric, phi, phi_inverse, total_distance
from catmoves.enumeration import enumerate_syt, enumerate_trees
from catmoves.moves import (
    LocalMoveRecord,
    PairTag,
    apply_move,
    apply_word,
    classify_pair,
    enumerate_local_moves,
    is_si_local_move,
    local_move,
    s_i_C,
    s_i_C_tableau,
    s_i_tableau,
    s_i_tree,
)
from catmoves.verify import partitions_up_to

import oracles
from test_core import trees

STAR3 = make_tree(3, [(1, 2), (3, 4), (5, 6)])
PATH3 = make_tree(3, [(1, 6), (2, 5), (3, 4)])
Y12_34 = make_tableau((2, 2), [[1, 2], [3, 4]])
Y13_24 = make_tableau((2, 2), [[1, 3], [2, 4]])


@pytest.mark.parametrize(
    "tree, i, tag, partner",
    [
        (PATH3, 3, PairTag.LEAF, (2, 5)),
        (STAR3, 2, PairTag.PEAK, (1, 4)),
        (STAR3, 1, PairTag.SAME_COLUMN_ROOT_LEAF, None),
        (PATH3, 1, PairTag.SAME_ROW_TOP, None),
        (PATH3, 5, PairTag.SAME_ROW_BOTTOM, None),
    ],
)
def test_classify_examples(tree, i, tag, partner):
    kind = classify_pair(tree, i)
    assert kind.tag is tag
    assert kind.partner == partner


@pytest.mark.parametrize("n", range(1, 7))
def test_classify_matches_tableau_relation(n):
    for t in enumerate_trees(n):
        rows = oracles.two_row_tableau(t.pairs)
        where = {x: (r, c) for r, row in enumerate(rows) for c, x in enumerate(row)}
        for i in range(1, 2 * n):
            kind = classify_pair(t, i)
            (r1, c1), (r2, c2) = where[i], where[i + 1]
            if r1 == r2:
                assert kind.tag is (PairTag.SAME_ROW_TOP if r1 == 0 else PairTag.SAME_ROW_BOTTOM)
            elif c1 == c2:
                assert kind.tag is PairTag.SAME_COLUMN_ROOT_LEAF
            else:
                assert kind.movable
                j, jp = kind.partner
                assert j < i < i + 1 < jp
                if kind.tag is PairTag.LEAF:
                    assert oracles.minimal_enclosing(t.pairs, (i, i + 1)) == (j, jp)
                else:
                    assert (j, i) in t and (i + 1, jp) in t


def test_classify_range():
    with pytest.raises(errors.LabelOutOfRange):
        classify_pair(STAR3, 6)
    with pytest.raises(errors.LabelOutOfRange):
        classify_pair(STAR3, 0)


def test_s_i_tableau_examples():
    assert s_i_tableau(Y12_34, 2) == Y13_24
    assert s_i_tableau(Y12_34, 1) == Y12_34
    assert s_i_tableau(Y13_24, 1) == Y13_24
    with pytest.raises(errors.LabelOutOfRange):
        s_i_tableau(Y12_34, 4)


def test_s_i_tree_examples():
    assert s_i_tree(make_tree(2, [(1, 4), (2, 3)]), 2).pairs == ((1, 2), (3, 4))
    assert s_i_tree(STAR3, 4).pairs == ((1, 2), (3, 6), (4, 5))
    assert s_i_tree(PATH3, 1) == PATH3


@pytest.mark.parametrize("cells", range(1, 9))
def test_s_i_tableau_involution_and_oracle(cells):
    for shape in partitions_up_to(cells):
        if sum(shape) != cells:
            continue
        for y in enumerate_syt(shape):
            for i in range(1, cells):
                img = s_i_tableau(y, i)
                assert img.rows == oracles.tableau_swap_oracle(y.rows, i)
                make_tableau(img.shape, img.rows)
                assert s_i_tableau(img, i) == y


@pytest.mark.parametrize("n", range(1, 8))
def test_tree_maps_conjugate_to_tableau_maps(n):
    for t in enumerate_trees(n):
        rows = oracles.two_row_tableau(t.pairs)
        for i in range(1, 2 * n):
            img = s_i_tree(t, i)
            if n <= 4:
                assert img.pairs == oracles.tree_from_rows(oracles.tableau_swap_oracle(rows, i), n)
            assert img == phi_inverse(s_i_tableau(phi(t), i))
            assert s_i_tree(img, i) == t


def test_local_move_examples():
    rec, out = local_move(PATH3, (2, 5), (3, 4))
    assert rec.move_type == 1 and rec.rank_delta == -1
    assert out.pairs == ((1, 6), (2, 3), (4, 5))
    assert total_distance(PATH3) - total_distance(out) == 1
    tree = make_tree(3, [(1, 6), (2, 3), (4, 5)])
    rec, out = local_move(tree, (2, 3), (4, 5))
    assert rec.move_type == 2 and rec.rank_delta == 1
    assert out == PATH3


def test_local_move_errors():
    tree = make_tree(3, [(1, 2), (3, 6), (4, 5)])
    with pytest.raises(errors.NotAdjacent):
        local_move(tree, (1, 2), (4, 5))
    with pytest.raises(errors.NotEdgesOfTree):
        local_move(tree, (1, 2), (3, 4))
    with pytest.raises(errors.NotAdjacent):
        local_move(tree, (1, 2), (1, 2))


def test_enumerate_local_moves_counts():
    star2 = make_tree(2, [(1, 2), (3, 4)])
    path2 = make_tree(2, [(1, 4), (2, 3)])
    assert [r.move_type for r in enumerate_local_moves(star2)] == [2]
    assert [r.move_type for r in enumerate_local_moves(path2)] == [1]
    moves = enumerate_local_moves(STAR3)
    assert len(moves) == 3
    assert [r.removed for r in moves] == sorted(r.removed for r in moves)


@given(trees(max_n=7))
def test_local_moves_direction_and_size(t):
    for rec in enumerate_local_moves(t):
        out = apply_move(t, rec)
        change = oracles.distance_by_nesting(out.pairs) - oracles.distance_by_nesting(t.pairs)
        assert change == rec.distance_change
        assert (rec.move_type == 1) == (rec.rank_delta == -1)
        assert change * rec.rank_delta > 0 and change % 2 == 1
        labels = sorted(x for p in rec.removed for x in p)
        assert labels == sorted(x for p in rec.added for x in p)
        # unit steps are exactly the moves realising some s_i
        assert (abs(change) == 1) == (is_si_local_move(t, rec) is not None)
        # every move is undone by a move on the image
        back = [r for r in enumerate_local_moves(out) if apply_move(out, r) == t]
        assert len(back) == 1


def test_is_si_local_move_examples():
    for pairs in ([(1, 2), (3, 4)], [(1, 4), (2, 3)]):
        t = make_tree(2, pairs)
        (rec,) = enumerate_local_moves(t)
        assert is_si_local_move(t, rec) == 2
    rec, _ = local_move(STAR3, (1, 2), (5, 6))
    assert is_si_local_move(STAR3, rec) is None


@pytest.mark.parametrize("n", range(1, 7))
def test_non_si_moves_match_no_generator(n):
    for t in enumerate_trees(n):
        images = {s_i_tree(t, i) for i in range(1, 2 * n)}
        for rec in enumerate_local_moves(t):
            i = is_si_local_move(t, rec)
            out = apply_move(t, rec)
            if i is None:
                assert out not in images
            else:
                assert out == s_i_tree(t, i)


def test_record_json_roundtrip():
    rec, _ = local_move(STAR3, (1, 2), (5, 6))
    assert LocalMoveRecord.from_json(rec.to_json()) == rec
    assert rec.distance_change == 3


def test_s_i_C_examples():
    assert s_i_C(make_tree(3, [(1, 4), (2, 3), (5, 6)]), 2).pairs == ((1, 2), (3, 6), (4, 5))
    assert s_i_C(STAR3, 2).pairs == ((1, 6), (2, 3), (4, 5))
    assert s_i_C(PATH3, 3).pairs == ((1, 6), (2, 3), (4, 5))
    with pytest.raises(errors.IndexOutOfRange):
        s_i_C(STAR3, 4)


@pytest.mark.parametrize("n", range(1, 8))
def test_s_i_C_properties(n):
    for t in enumerate_trees(n):
        for i in range(1, n + 1):
            img = s_i_C(t, i)
            assert s_i_C(img, i) == t
            if i < n:
                assert img == s_i_tree(s_i_tree(t, 2 * n - i), i)
            if is_symmetric(t):
                assert is_symmetric(img)
            assert phi(img) == s_i_C_tableau(phi(t), i)


def test_apply_word_examples():
    assert apply_word(Y12_34, [2, 3, 2]) == Y12_34
    assert apply_word(Y12_34, [3, 2, 3]) == Y13_24
    assert apply_word(Y13_24, []) == Y13_24
    # rightmost letter acts first
    assert apply_word(Y12_34, [1, 2]) == s_i_tableau(s_i_tableau(Y12_34, 2), 1)
    with pytest.raises(errors.LabelOutOfRange):
        apply_word(Y12_34, [7])
