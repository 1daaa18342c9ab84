"""Plane trees, Young tableaux and the bijection between two-row tableaux and trees.

A plane tree with ``n`` edges is stored as its noncrossing perfect matching of
the half-edge labels ``1..2n``: edge ``e(i, j)`` is the pair ``(i, j)`` with
``i`` the left (opening) half-edge and ``j`` the right (closing) one.  The
rooted structure is derived on demand by :func:`tree_view`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union

from .errors import (
    BadShape,
    ColumnNotIncreasing,
    CrossingPair,
    DuplicateEntry,
    DuplicateLabel,
    LabelOutOfRange,
    PairCountMismatch,
    ParseError,
    ReversedPair,
    RowNotIncreasing,
    ShapeNotTwoRow,
)

Pair = tuple[int, int]


class _Root:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ROOT"

    def __reduce__(self):
        return (_Root, ())


ROOT = _Root()


@dataclass(frozen=True)
class PlaneTree:
    """Canonical noncrossing matching; build through :func:`make_tree` to validate."""

    n: int
    pairs: tuple[Pair, ...]

    @cached_property
    def partner(self) -> tuple[int, ...]:
        """``partner[k]`` is the label matched with ``k``; index 0 is unused."""
        out = [0] * (2 * self.n + 1)
        for a, b in self.pairs:
            out[a] = b
            out[b] = a
        return tuple(out)

    @cached_property
    def word(self) -> str:
        """Dyck word: ``(`` at openers, ``)`` at closers."""
        return "".join("(" if self.partner[k] > k else ")" for k in range(1, 2 * self.n + 1))

    def is_opener(self, label: int) -> bool:
        return self.partner[label] > label

    def __contains__(self, pair: object) -> bool:
        if not (isinstance(pair, tuple) and len(pair) == 2):
            return False
        a, b = pair
        return 1 <= a <= 2 * self.n and self.partner[a] == b and a < b

    def __str__(self) -> str:
        return format_tree(self)

    @classmethod
    def from_word(cls, word: str) -> PlaneTree:
        """Build the tree of a Dyck word.  The word is assumed valid."""
        stack: list[int] = []
        pairs = []
        for k, ch in enumerate(word, start=1):
            if ch == "(":
                stack.append(k)
            else:
                pairs.append((stack.pop(), k))
        pairs.sort()
        return cls(len(word) // 2, tuple(pairs))


@dataclass(frozen=True)
class RootedTreeView:
    """Nesting forest of a matching.  Pairs act as edge identifiers."""

    parent: dict
    children: dict
    depth: dict


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    @property
    def N(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


ShapeLike = Union[Partition, Sequence[int]]


@dataclass(frozen=True)
class YoungTableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    @property
    def N(self) -> int:
        return self.shape.N

    @cached_property
    def positions(self) -> dict[int, tuple[int, int]]:
        return {x: (r, c) for r, row in enumerate(self.rows) for c, x in enumerate(row)}

    def position(self, entry: int) -> tuple[int, int]:
        """(row, column), both 0-based."""
        return self.positions[entry]

    def reading_word(self) -> tuple[int, ...]:
        """Rows concatenated top to bottom."""
        return tuple(x for row in self.rows for x in row)

    def __str__(self) -> str:
        return format_tableau(self)


def make_partition(parts: ShapeLike) -> Partition:
    if isinstance(parts, Partition):
        parts = parts.parts
    parts = tuple(int(p) for p in parts)
    if not parts:
        raise BadShape("partition must have at least one part")
    if any(p < 1 for p in parts):
        raise BadShape(f"parts must be positive: {parts}")
    if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
        raise BadShape(f"parts must be weakly decreasing: {parts}")
    return Partition(parts)


def make_tree(n: int, pairs: Iterable[Sequence[int]]) -> PlaneTree:
    """Validate ``pairs`` as a noncrossing perfect matching of ``1..2n``."""
    if n < 1:
        raise LabelOutOfRange(f"a plane tree needs at least one edge, got n={n}")
    pairs = [(int(a), int(b)) for a, b in pairs]
    if len(pairs) != n:
        raise PairCountMismatch(f"expected {n} pairs, got {len(pairs)}")
    owner: dict[int, Pair] = {}
    for a, b in pairs:
        for x in (a, b):
            if not 1 <= x <= 2 * n:
                raise LabelOutOfRange(f"label {x} of pair {(a, b)} outside 1..{2 * n}")
        if a >= b:
            raise ReversedPair(f"pair {(a, b)} must have opener < closer")
        for x in (a, b):
            if x in owner:
                raise DuplicateLabel(f"label {x} used by {owner[x]} and {(a, b)}")
            owner[x] = (a, b)
    # every label is used exactly once, so a stack scan detects crossings
    stack: list[Pair] = []
    for x in range(1, 2 * n + 1):
        pair = owner[x]
        if pair[0] == x:
            stack.append(pair)
        elif stack[-1] != pair:
            raise CrossingPair(stack[-1], pair)
        else:
            stack.pop()
    return PlaneTree(n, tuple(sorted(pairs)))


def tree_view(tree: PlaneTree) -> RootedTreeView:
    parent: dict = {}
    children: dict = {ROOT: []}
    depth: dict = {}
    stack: list[Pair] = []
    for x in range(1, 2 * tree.n + 1):
        if tree.is_opener(x):
            pair = (x, tree.partner[x])
            up = stack[-1] if stack else ROOT
            parent[pair] = up
            children[up].append(pair)
            children[pair] = []
            depth[pair] = len(stack) + 1
            stack.append(pair)
        else:
            stack.pop()
    return RootedTreeView(
        parent=parent,
        children={k: tuple(v) for k, v in children.items()},
        depth=depth,
    )


def phi(tree: PlaneTree) -> YoungTableau:
    """Openers on the top row, closers on the bottom row."""
    top = tuple(a for a, _ in tree.pairs)
    bottom = tuple(sorted(b for _, b in tree.pairs))
    return YoungTableau(Partition((tree.n, tree.n)), (top, bottom))


def phi_inverse(tableau: YoungTableau) -> PlaneTree:
    parts = tableau.shape.parts
    if len(parts) != 2 or parts[0] != parts[1]:
        raise ShapeNotTwoRow(f"expected shape (n,n), got {parts}")
    top = set(tableau.rows[0])
    word = "".join("(" if k in top else ")" for k in range(1, tableau.N + 1))
    return PlaneTree.from_word(word)


def total_distance(tree: PlaneTree) -> int:
    """Sum of root distances over all vertices; each edge contributes the depth of its lower end."""
    total = 0
    height = 0
    for ch in tree.word:
        if ch == "(":
            height += 1
            total += height
        else:
            height -= 1
    return total


def total_descendants(tree: PlaneTree) -> int:
    """Sum over all vertices of the number of proper descendants."""
    # the root sees all n edges; below e(a, b) hang (b - a - 1) / 2 edges
    return tree.n + sum((b - a - 1) // 2 for a, b in tree.pairs)


def mirror(tree: PlaneTree) -> PlaneTree:
    m = 2 * tree.n + 1
    return PlaneTree(tree.n, tuple(sorted((m - b, m - a) for a, b in tree.pairs)))


def is_symmetric(tree: PlaneTree) -> bool:
    return mirror(tree) == tree


def make_tableau(shape: ShapeLike, rows: Sequence[Sequence[int]]) -> YoungTableau:
    part = make_partition(shape)
    rows = tuple(tuple(int(x) for x in row) for row in rows)
    if len(rows) != len(part.parts) or any(len(r) != p for r, p in zip(rows, part.parts)):
        raise BadShape(f"row lengths {[len(r) for r in rows]} do not match shape {part.parts}")
    seen: set[int] = set()
    for row in rows:
        for x in row:
            if not 1 <= x <= part.N:
                raise LabelOutOfRange(f"entry {x} outside 1..{part.N}")
            if x in seen:
                raise DuplicateEntry(f"entry {x} appears twice")
            seen.add(x)
    for r, row in enumerate(rows):
        for c in range(len(row) - 1):
            if row[c] >= row[c + 1]:
                raise RowNotIncreasing(f"row {r}: {row[c]} is left of {row[c + 1]}")
    for r in range(1, len(rows)):
        for c, x in enumerate(rows[r]):
            if rows[r - 1][c] >= x:
                raise ColumnNotIncreasing(f"column {c}: {rows[r - 1][c]} is above {x}")
    return YoungTableau(part, rows)


def format_tree(tree: PlaneTree) -> str:
    return f"{tree.n};" + "".join(f"({a},{b})" for a, b in tree.pairs)


_TREE_RE = re.compile(r"^\s*(\d+)\s*;\s*((?:\(\s*\d+\s*,\s*\d+\s*\)\s*)+)$")
_PAIR_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_tree(text: str) -> PlaneTree:
    """Inverse of :func:`format_tree`; pairs must already be in canonical order."""
    m = _TREE_RE.match(text)
    if not m:
        raise ParseError(f"not a tree encoding: {text!r}")
    n = int(m.group(1))
    pairs = [(int(a), int(b)) for a, b in _PAIR_RE.findall(m.group(2))]
    tree = make_tree(n, pairs)
    if list(tree.pairs) != pairs:
        raise ParseError(f"pairs not in canonical opener order: {text!r}")
    return tree


def format_tableau(tableau: YoungTableau) -> str:
    return "/".join(",".join(map(str, row)) for row in tableau.rows)


def parse_tableau(text: str) -> YoungTableau:
    try:
        rows = [[int(x) for x in chunk.split(",")] for chunk in text.strip().split("/")]
    except ValueError as exc:
        raise ParseError(f"not a tableau encoding: {text!r}") from exc
    return make_tableau([len(r) for r in rows], rows)
