"""The maps s_i on tableaux and trees, local moves, and the type-C composites."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import (
    ROOT,
    Pair,
    PlaneTree,
    YoungTableau,
    make_tree,
    tree_view,
    total_distance,
)
from .errors import IndexOutOfRange, LabelOutOfRange, NotAdjacent, NotEdgesOfTree


class PairTag(enum.Enum):
    SAME_ROW_TOP = "same_row_top"
    SAME_ROW_BOTTOM = "same_row_bottom"
    SAME_COLUMN_ROOT_LEAF = "same_column_root_leaf"
    LEAF = "leaf"
    PEAK = "peak"


@dataclass(frozen=True)
class MoveKind:
    """How the half-edges ``i`` and ``i+1`` sit in a tree.

    ``partner`` is the pair ``(j, j')`` with ``j < i < i+1 < j'`` that takes
    part in the move; it is set only for LEAF and PEAK.
    """

    tag: PairTag
    partner: Optional[Pair] = None

    @property
    def movable(self) -> bool:
        return self.tag in (PairTag.LEAF, PairTag.PEAK)


@dataclass(frozen=True)
class LocalMoveRecord:
    """One local move.

    ``rank_delta`` is the direction of the move (-1 for nested to sequential,
    +1 for the reverse).  ``distance_change`` is the actual change of total
    distance, which equals ``rank_delta`` only when the two edges enclose no
    other edge between them.
    """

    removed: tuple[Pair, Pair]
    added: tuple[Pair, Pair]
    move_type: int
    rank_delta: int
    distance_change: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "removed": [list(p) for p in self.removed],
                "added": [list(p) for p in self.added],
                "type": self.move_type,
                "delta": self.rank_delta,
                "distance_change": self.distance_change,
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> LocalMoveRecord:
        d = json.loads(text)
        return cls(
            removed=tuple(tuple(p) for p in d["removed"]),
            added=tuple(tuple(p) for p in d["added"]),
            move_type=d["type"],
            rank_delta=d["delta"],
            distance_change=d["distance_change"],
        )


def _check_label(i: int, top: int) -> None:
    if not 1 <= i < top:
        raise LabelOutOfRange(f"label {i} outside 1..{top - 1}")


def _enclosing(tree: PlaneTree, pair: Pair) -> Optional[Pair]:
    """Minimal pair strictly enclosing ``pair``, scanning left from its opener."""
    depth = 0
    for x in range(pair[0] - 1, 0, -1):
        if tree.is_opener(x):
            if depth == 0:
                return (x, tree.partner[x])
            depth -= 1
        else:
            depth += 1
    return None


def classify_pair(tree: PlaneTree, i: int) -> MoveKind:
    _check_label(i, 2 * tree.n)
    first, second = tree.is_opener(i), tree.is_opener(i + 1)
    if first and second:
        return MoveKind(PairTag.SAME_ROW_TOP)
    if not first and not second:
        return MoveKind(PairTag.SAME_ROW_BOTTOM)
    if first:
        # i opens and i+1 closes, so (i, i+1) is a leaf edge
        up = _enclosing(tree, (i, i + 1))
        if up is None:
            return MoveKind(PairTag.SAME_COLUMN_ROOT_LEAF)
        return MoveKind(PairTag.LEAF, up)
    return MoveKind(PairTag.PEAK, (tree.partner[i], tree.partner[i + 1]))


def _replace(tree: PlaneTree, removed: Sequence[Pair], added: Sequence[Pair]) -> PlaneTree:
    kept = [p for p in tree.pairs if p not in removed]
    return PlaneTree(tree.n, tuple(sorted(kept + list(added))))


def s_i_tableau(tableau: YoungTableau, i: int) -> YoungTableau:
    """Swap ``i`` and ``i+1`` unless they share a row or a column."""
    _check_label(i, tableau.N)
    (r1, c1), (r2, c2) = tableau.position(i), tableau.position(i + 1)
    if r1 == r2 or c1 == c2:
        return tableau
    swap = {i: i + 1, i + 1: i}
    rows = tuple(tuple(swap.get(x, x) for x in row) for row in tableau.rows)
    return YoungTableau(tableau.shape, rows)


def s_i_tree(tree: PlaneTree, i: int) -> PlaneTree:
    kind = classify_pair(tree, i)
    if kind.tag is PairTag.LEAF:
        j, jp = kind.partner
        return _replace(tree, [(j, jp), (i, i + 1)], [(j, i), (i + 1, jp)])
    if kind.tag is PairTag.PEAK:
        j, jp = kind.partner
        return _replace(tree, [(j, i), (i + 1, jp)], [(j, jp), (i, i + 1)])
    return tree


def s_i_C(tree: PlaneTree, i: int) -> PlaneTree:
    """Type-C generator: ``s_i s_{2n-i}`` for ``i < n`` and ``s_n`` for ``i = n``."""
    n = tree.n
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"type-C index {i} outside 1..{n}")
    if i == n:
        return s_i_tree(tree, n)
    return s_i_tree(s_i_tree(tree, i), 2 * n - i)


def s_i_C_tableau(tableau: YoungTableau, i: int) -> YoungTableau:
    parts = tableau.shape.parts
    n = tableau.N // 2
    if len(parts) != 2 or parts[0] != parts[1]:
        raise IndexOutOfRange(f"type-C maps need shape (n,n), got {parts}")
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"type-C index {i} outside 1..{n}")
    if i == n:
        return s_i_tableau(tableau, n)
    return s_i_tableau(s_i_tableau(tableau, i), 2 * n - i)


def apply_word(tableau: YoungTableau, word: Sequence[int]) -> YoungTableau:
    """Apply ``s_{w[0]} s_{w[1]} ... s_{w[-1]}``; the rightmost letter acts first."""
    for i in reversed(word):
        tableau = s_i_tableau(tableau, i)
    return tableau


def apply_tree_word(tree: PlaneTree, word: Sequence[int]) -> PlaneTree:
    for i in reversed(word):
        tree = s_i_tree(tree, i)
    return tree


def _rewrite(e1: Pair, e2: Pair) -> tuple[tuple[Pair, Pair], int]:
    (i, j), (ip, jp) = sorted((e1, e2))
    if jp < j:
        return ((i, ip), (jp, j)), 1
    return ((i, jp), (j, ip)), 2


def local_move(tree: PlaneTree, e1: Pair, e2: Pair) -> tuple[LocalMoveRecord, PlaneTree]:
    e1, e2 = tuple(e1), tuple(e2)
    for e in (e1, e2):
        if e not in tree:
            raise NotEdgesOfTree(f"{e} is not an edge of {tree}")
    if e1 == e2:
        raise NotAdjacent("a local move needs two distinct edges")
    view = tree_view(tree)
    nested = view.parent[e1] == e2 or view.parent[e2] == e1
    if not nested and view.parent[e1] != view.parent[e2]:
        raise NotAdjacent(f"{e1} and {e2} share no vertex")
    removed = tuple(sorted((e1, e2)))
    added, move_type = _rewrite(e1, e2)
    result = _replace(tree, removed, added)
    record = LocalMoveRecord(
        removed=removed,
        added=tuple(sorted(added)),
        move_type=move_type,
        rank_delta=-1 if move_type == 1 else 1,
        distance_change=total_distance(result) - total_distance(tree),
    )
    return record, result


def apply_move(tree: PlaneTree, record: LocalMoveRecord) -> PlaneTree:
    return make_tree(tree.n, [p for p in tree.pairs if p not in record.removed] + list(record.added))


def enumerate_local_moves(tree: PlaneTree) -> list[LocalMoveRecord]:
    """Every move on a parent-child or sibling pair of edges, sorted by the removed pairs."""
    view = tree_view(tree)
    candidates = []
    for up, kids in view.children.items():
        if up is not ROOT:
            candidates.extend((up, kid) for kid in kids)
        candidates.extend((a, b) for k, a in enumerate(kids) for b in kids[k + 1:])
    records = [local_move(tree, a, b)[0] for a, b in candidates]
    records.sort(key=lambda r: r.removed)
    return records


def is_si_local_move(tree: PlaneTree, record: LocalMoveRecord) -> Optional[int]:
    """Label ``i`` when the move realises ``s_i`` on ``tree``, else ``None``."""
    first, second = record.removed
    # type 1: first = (a, d) encloses second = (b, c); type 2: first closes before second opens
    lo, hi = (second[0], second[1]) if record.move_type == 1 else (first[1], second[0])
    if hi != lo + 1 or not classify_pair(tree, lo).movable:
        return None
    if apply_move(tree, record) != s_i_tree(tree, lo):
        return None
    return lo
