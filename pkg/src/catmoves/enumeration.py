"""Exhaustive generation and ranking of plane trees and standard Young tableaux.

Trees are ordered by their Dyck word, lexicographically with ``(`` before
``)``; tree ranks are positions in that order.  Tableaux are ordered by their
rows read top to bottom.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .core import PlaneTree, ShapeLike, YoungTableau, make_partition
from .errors import LabelOutOfRange, RankOutOfRange, ShapeTooLarge, SizeExceedsCap

DEFAULT_TREE_CAP = 16
DEFAULT_SYT_CAP = 20
CAP_ENV = "CATMOVES_MAX_N"


def tree_cap(override: Optional[int] = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(CAP_ENV)
    return int(env) if env else DEFAULT_TREE_CAP


def syt_cap(override: Optional[int] = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(CAP_ENV)
    # the override is an edge count; (n, n) tableaux have 2n cells
    return 2 * int(env) if env else DEFAULT_SYT_CAP


def check_tree_size(n: int, cap: Optional[int] = None) -> None:
    if n < 1:
        raise LabelOutOfRange(f"n must be positive, got {n}")
    limit = tree_cap(cap)
    if n > limit:
        raise SizeExceedsCap(f"n={n} exceeds the enumeration cap {limit} (set {CAP_ENV} to raise it)")


@dataclass(frozen=True)
class TreeIndex:
    n: int
    rank: int


def count_trees(n: int) -> int:
    """Catalan number C_n, exact."""
    if n < 1:
        raise LabelOutOfRange(f"n must be positive, got {n}")
    return math.comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _suffix_counts(n: int) -> tuple[tuple[int, ...], ...]:
    """``table[r][h]``: Dyck suffixes of length ``r`` starting at height ``h``."""
    size = 2 * n
    table = [[0] * (size + 2) for _ in range(size + 1)]
    table[0][0] = 1
    for r in range(1, size + 1):
        for h in range(0, size + 1):
            table[r][h] = table[r - 1][h + 1] + (table[r - 1][h - 1] if h > 0 else 0)
    return tuple(tuple(row) for row in table)


def dyck_words(n: int) -> Iterator[str]:
    """All Dyck words of semilength ``n`` in lexicographic order."""
    buf = [""] * (2 * n)

    def rec(pos: int, opened: int, height: int) -> Iterator[str]:
        if pos == 2 * n:
            yield "".join(buf)
            return
        if opened < n:
            buf[pos] = "("
            yield from rec(pos + 1, opened + 1, height + 1)
        if height > 0:
            buf[pos] = ")"
            yield from rec(pos + 1, opened, height - 1)

    yield from rec(0, 0, 0)


def enumerate_trees(n: int, cap: Optional[int] = None) -> Iterator[PlaneTree]:
    check_tree_size(n, cap)
    return (PlaneTree.from_word(word) for word in dyck_words(n))


def rank_word(word: str) -> int:
    n = len(word) // 2
    table = _suffix_counts(n)
    rank = 0
    height = 0
    for pos, ch in enumerate(word):
        remaining = 2 * n - pos - 1
        if ch == "(":
            height += 1
        else:
            # all words with '(' here come first
            rank += table[remaining][height + 1]
            height -= 1
    return rank


def unrank_word(n: int, rank: int) -> str:
    table = _suffix_counts(n)
    if not 0 <= rank < table[2 * n][0]:
        raise RankOutOfRange(f"rank {rank} outside [0, {table[2 * n][0]})")
    out = []
    height = 0
    for pos in range(2 * n):
        remaining = 2 * n - pos - 1
        with_open = table[remaining][height + 1]
        if rank < with_open:
            out.append("(")
            height += 1
        else:
            rank -= with_open
            out.append(")")
            height -= 1
    return "".join(out)


def rank_tree(tree: PlaneTree) -> TreeIndex:
    return TreeIndex(tree.n, rank_word(tree.word))


def unrank_tree(index: TreeIndex) -> PlaneTree:
    if index.n < 1:
        raise RankOutOfRange(f"n must be positive, got {index.n}")
    return PlaneTree.from_word(unrank_word(index.n, index.rank))


def hook_length_count(shape: ShapeLike) -> int:
    """Number of standard Young tableaux of ``shape`` by the hook length formula."""
    parts = make_partition(shape).parts
    conj = [sum(1 for p in parts if p > c) for c in range(parts[0])]
    hooks = 1
    for r, p in enumerate(parts):
        for c in range(p):
            hooks *= (p - c - 1) + (conj[c] - r - 1) + 1
    return math.factorial(sum(parts)) // hooks


def enumerate_syt(shape: ShapeLike, cap: Optional[int] = None) -> Iterator[YoungTableau]:
    """Every standard Young tableau of ``shape`` exactly once, ordered by reading word.

    Tableaux are produced by backtracking over the row receiving each of
    ``1..N`` and then sorted, so the whole set is materialised.
    """
    part = make_partition(shape)
    limit = syt_cap(cap)
    if part.N > limit:
        raise ShapeTooLarge(f"shape {part.parts} has {part.N} cells, cap is {limit}")
    rows: list[list[int]] = [[] for _ in part.parts]
    found: list[tuple[tuple[int, ...], ...]] = []

    def rec(k: int) -> None:
        if k > part.N:
            found.append(tuple(tuple(r) for r in rows))
            return
        for r, p in enumerate(part.parts):
            length = len(rows[r])
            if length < p and (r == 0 or len(rows[r - 1]) > length):
                rows[r].append(k)
                rec(k + 1)
                rows[r].pop()

    def stream() -> Iterator[YoungTableau]:
        rec(1)
        found.sort(key=lambda t: tuple(x for row in t for x in row))
        for t in found:
            yield YoungTableau(part, t)

    return stream()
