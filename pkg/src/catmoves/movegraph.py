"""Move graphs on plane trees and tableaux, and the analyses run over them.

Tree graphs use Dyck-word ranks (see :mod:`catmoves.enumeration`) as vertex
ids.  Adjacency is kept in CSR form: ``indptr``, ``neighbors``,
``generators`` and ``deltas`` are flat arrays, and the row of vertex ``v`` is
``indptr[v]:indptr[v + 1]`` sorted by ``(neighbor, generator)``.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import logging
import math
import os
from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional, Sequence, TextIO, Union

import numpy as np

from .core import (
    Partition,
    PlaneTree,
    ShapeLike,
    YoungTableau,
    format_tableau,
    format_tree,
    make_partition,
    parse_tableau,
    parse_tree,
)
from .enumeration import (
    check_tree_size,
    enumerate_syt,
    rank_word,
    unrank_word,
    count_trees,
)
from .errors import (
    IoFailure,
    ParseError,
    ShapeMismatch,
    SizeExceedsCap,
    ShapeTooLarge,
    VertexOutOfRange,
    WrongGraphKind,
)
from .moves import apply_word, enumerate_local_moves, s_i_tableau

log = logging.getLogger(__name__)


class GeneratorKind(enum.Enum):
    TYPE_A = "typeA"
    TYPE_C = "typeC"
    ALL_LOCAL_MOVES = "all"
    TABLEAU_SHAPE = "tableau"


@dataclass(frozen=True)
class GeneratorSet:
    kind: GeneratorKind
    shape: Optional[Partition] = None

    @classmethod
    def type_a(cls) -> GeneratorSet:
        return cls(GeneratorKind.TYPE_A)

    @classmethod
    def type_c(cls) -> GeneratorSet:
        return cls(GeneratorKind.TYPE_C)

    @classmethod
    def all_local_moves(cls) -> GeneratorSet:
        return cls(GeneratorKind.ALL_LOCAL_MOVES)

    @classmethod
    def tableau(cls, shape: ShapeLike) -> GeneratorSet:
        return cls(GeneratorKind.TABLEAU_SHAPE, make_partition(shape))

    @property
    def on_trees(self) -> bool:
        return self.kind is not GeneratorKind.TABLEAU_SHAPE

    def label(self, code: int) -> str:
        if self.kind is GeneratorKind.ALL_LOCAL_MOVES:
            return "local"
        if self.kind is GeneratorKind.TYPE_C:
            return f"s{code}C"
        return f"s{code}"

    def code(self, label: str) -> int:
        if label == "local":
            return 0
        return int(label.rstrip("C")[1:])


# word kernels: label i sits at string index i - 1

_MIRROR = str.maketrans("()", ")(")


def _heights(word: str) -> list[int]:
    """``h[k]`` is the height after the first ``k`` letters."""
    out = [0]
    for ch in word:
        out.append(out[-1] + (1 if ch == "(" else -1))
    return out


def _s_word(word: str, heights: Sequence[int], i: int) -> str:
    a, b = word[i - 1], word[i]
    if a == b or (a == "(" and heights[i - 1] == 0):
        return word
    return word[: i - 1] + b + a + word[i + 1:]


def _word_distance(word: str, heights: Sequence[int]) -> int:
    return sum(heights[k + 1] for k, ch in enumerate(word) if ch == "(")


def _word_symmetric(word: str) -> bool:
    return word == word[::-1].translate(_MIRROR)


def _tree_images(kind: GeneratorKind, word: str) -> list[tuple[str, int]]:
    """Images of ``word`` under every generator, fixed points included."""
    n = len(word) // 2
    h = _heights(word)
    if kind is GeneratorKind.TYPE_A:
        return [(_s_word(word, h, i), i) for i in range(1, 2 * n)]
    if kind is GeneratorKind.TYPE_C:
        out = []
        for i in range(1, n + 1):
            img = _s_word(word, h, i)
            if i < n:
                # i + 1 < 2n - i, so the prefix heights still hold for the second swap
                img = _s_word(img, h, 2 * n - i)
            out.append((img, i))
        return out
    tree = PlaneTree.from_word(word)
    out = []
    for rec in enumerate_local_moves(tree):
        kept = [p for p in tree.pairs if p not in rec.removed]
        out.append((PlaneTree(n, tuple(sorted(kept + list(rec.added)))).word, 0))
    return out


def _tree_rows(kind_value: str, n: int, lo: int, hi: int):
    """Adjacency rows and metadata for tree ids ``lo..hi-1``; pure in its arguments."""
    kind = GeneratorKind(kind_value)
    rows, ranks, sym = [], [], []
    for v in range(lo, hi):
        word = unrank_word(n, v)
        d = _word_distance(word, _heights(word))
        row = []
        for img, code in _tree_images(kind, word):
            if img == word:
                continue
            h = _heights(img)
            row.append((rank_word(img), code, _word_distance(img, h) - d))
        row.sort()
        rows.append(row)
        ranks.append(d)
        sym.append(_word_symmetric(word))
    return rows, ranks, sym


@dataclass(eq=False)
class MoveGraph:
    kind: GeneratorSet
    n: Optional[int]
    vertex_labels: tuple[str, ...]
    indptr: np.ndarray
    neighbors: np.ndarray
    generators: np.ndarray
    deltas: Optional[np.ndarray]
    ranks: Optional[np.ndarray]
    symmetric: Optional[np.ndarray]

    @property
    def shape(self) -> Optional[Partition]:
        return self.kind.shape

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_labels)

    @property
    def edge_count(self) -> int:
        """Undirected labelled edges."""
        return len(self.neighbors) // 2

    def adjacency(self, v: int) -> list[tuple[int, str, Optional[int]]]:
        lo, hi = self.indptr[v], self.indptr[v + 1]
        return [
            (
                int(self.neighbors[k]),
                self.kind.label(int(self.generators[k])),
                None if self.deltas is None else int(self.deltas[k]),
            )
            for k in range(lo, hi)
        ]

    def neighbor_ids(self, v: int) -> np.ndarray:
        return self.neighbors[self.indptr[v]: self.indptr[v + 1]]

    def edges(self) -> Iterator[tuple[int, int, str, Optional[int]]]:
        """Each undirected edge once as ``(u, v, generator, delta)`` with ``u < v``."""
        for u in range(self.vertex_count):
            for v, gen, delta in self.adjacency(u):
                if u < v:
                    yield u, v, gen, delta

    def endpoint_pairs(self) -> set[tuple[int, int]]:
        """Edges with labels forgotten and parallel edges merged."""
        return {(u, v) for u, v, _, _ in self.edges()}

    def tree(self, v: int) -> PlaneTree:
        return parse_tree(self.vertex_labels[v])

    def tableau(self, v: int) -> YoungTableau:
        return parse_tableau(self.vertex_labels[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MoveGraph):
            return NotImplemented

        def same(a, b):
            if a is None or b is None:
                return a is b
            return np.array_equal(a, b)

        return (
            self.kind == other.kind
            and self.n == other.n
            and self.vertex_labels == other.vertex_labels
            and all(
                same(getattr(self, f), getattr(other, f))
                for f in ("indptr", "neighbors", "generators", "deltas", "ranks", "symmetric")
            )
        )


def _assemble(rows) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    indptr = np.zeros(len(rows) + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(r) for r in rows])
    flat = [e for r in rows for e in r]
    nbr = np.fromiter((e[0] for e in flat), dtype=np.int64, count=len(flat))
    gen = np.fromiter((e[1] for e in flat), dtype=np.int32, count=len(flat))
    delta = np.fromiter((e[2] if e[2] is not None else 0 for e in flat), dtype=np.int32, count=len(flat))
    return indptr, nbr, gen, delta


def _shards(total: int, workers: int) -> list[tuple[int, int]]:
    pieces = max(1, min(total, workers * 4))
    step = math.ceil(total / pieces)
    return [(lo, min(total, lo + step)) for lo in range(0, total, step)]


def build_graph(
    gens: Union[GeneratorSet, str],
    n: Optional[int] = None,
    *,
    workers: int = 1,
    cap: Optional[int] = None,
) -> MoveGraph:
    """Build the move graph of ``gens`` on trees with ``n`` edges (or on the tableau shape).

    Fixed points are dropped.  With ``workers > 1`` the id range is split
    into shards computed in separate processes; the merged result does not
    depend on the worker count.
    """
    if isinstance(gens, str):
        gens = GeneratorSet(GeneratorKind(gens))
    if workers < 1:
        raise ValueError("workers must be at least 1")
    if gens.kind is GeneratorKind.TABLEAU_SHAPE:
        return _build_tableau_graph(gens, cap)
    if n is None:
        raise ValueError("tree graphs need n")
    check_tree_size(n, cap)
    total = count_trees(n)
    shards = _shards(total, workers)
    if workers == 1:
        parts = [_tree_rows(gens.kind.value, n, lo, hi) for lo, hi in shards]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(
                    _tree_rows,
                    [gens.kind.value] * len(shards),
                    [n] * len(shards),
                    [lo for lo, _ in shards],
                    [hi for _, hi in shards],
                )
            )
    rows = [r for part in parts for r in part[0]]
    ranks = np.array([x for part in parts for x in part[1]], dtype=np.int64)
    sym = np.array([x for part in parts for x in part[2]], dtype=bool)
    indptr, nbr, gen, delta = _assemble(rows)
    labels = tuple(format_tree(PlaneTree.from_word(unrank_word(n, v))) for v in range(total))
    graph = MoveGraph(gens, n, labels, indptr, nbr, gen, delta, ranks, sym)
    log.debug("built %s n=%d: %d vertices, %d edges", gens.kind.value, n, graph.vertex_count, graph.edge_count)
    return graph


def _build_tableau_graph(gens: GeneratorSet, cap: Optional[int]) -> MoveGraph:
    try:
        tableaux = list(enumerate_syt(gens.shape, cap))
    except ShapeTooLarge as exc:
        raise SizeExceedsCap(str(exc)) from exc
    ids = {t.rows: k for k, t in enumerate(tableaux)}
    rows = []
    for t in tableaux:
        row = []
        for i in range(1, t.N):
            img = s_i_tableau(t, i)
            if img is not t:
                row.append((ids[img.rows], i, None))
        row.sort()
        rows.append(row)
    indptr, nbr, gen, _ = _assemble(rows)
    labels = tuple(format_tableau(t) for t in tableaux)
    return MoveGraph(gens, None, labels, indptr, nbr, gen, None, None, None)


@dataclass(frozen=True)
class Component:
    size: int
    representative: int
    all_symmetric: Optional[bool]
    all_asymmetric: Optional[bool]


@dataclass(frozen=True)
class ComponentReport:
    component_count: int
    components: tuple[Component, ...]
    membership: tuple[int, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.components)


def connected_components(graph: MoveGraph) -> ComponentReport:
    """Breadth-first labelling; components are listed by their smallest vertex."""
    count = graph.vertex_count
    membership = [-1] * count
    components = []
    for start in range(count):
        if membership[start] != -1:
            continue
        label = len(components)
        membership[start] = label
        queue = deque([start])
        members = [start]
        while queue:
            u = queue.popleft()
            for w in graph.neighbor_ids(u):
                w = int(w)
                if membership[w] == -1:
                    membership[w] = label
                    members.append(w)
                    queue.append(w)
        if graph.symmetric is not None:
            flags = graph.symmetric[members]
            all_sym, all_asym = bool(flags.all()), bool((~flags).all())
        else:
            all_sym = all_asym = None
        components.append(Component(len(members), start, all_sym, all_asym))
    return ComponentReport(len(components), tuple(components), tuple(membership))


def _is_unimodal(seq: Sequence[int]) -> bool:
    k = 0
    while k + 1 < len(seq) and seq[k] <= seq[k + 1]:
        k += 1
    while k + 1 < len(seq) and seq[k] >= seq[k + 1]:
        k += 1
    return k == len(seq) - 1


@dataclass(frozen=True)
class GradingReport:
    """Rank structure of a tree graph under total distance.

    ``nominal_min_rank`` is ``n - 1``, the minimum sometimes quoted for the
    star; ``min_rank`` is what was measured.  Both are kept so a gap between
    them shows up in every report.
    """

    n: int
    min_rank: int
    max_rank: int
    rank_counts: tuple[int, ...]
    min_elements: tuple[int, ...]
    max_elements: tuple[int, ...]
    all_edges_unit_step: bool
    is_unimodal: bool
    edge_deltas: dict[int, int] = field(default_factory=dict)

    @property
    def rank_count(self) -> int:
        return self.max_rank - self.min_rank + 1

    @property
    def expected_rank_count(self) -> int:
        return math.comb(self.n + 1, 2) - self.n + 1

    @property
    def nominal_min_rank(self) -> int:
        return self.n - 1

    @property
    def min_rank_deviation(self) -> int:
        return self.min_rank - self.nominal_min_rank

    def rank_sequence(self) -> list[tuple[int, int]]:
        return [(self.min_rank + k, c) for k, c in enumerate(self.rank_counts)]


def grading_report(graph: MoveGraph) -> GradingReport:
    if graph.kind.kind not in (GeneratorKind.TYPE_A, GeneratorKind.ALL_LOCAL_MOVES):
        raise WrongGraphKind(f"grading needs a typeA or all-moves graph, got {graph.kind.kind.value}")
    ranks = graph.ranks
    lo, hi = int(ranks.min()), int(ranks.max())
    counts = np.bincount(ranks - lo, minlength=hi - lo + 1)
    # a rank step must match the stored delta and be a unit step
    sources = np.repeat(np.arange(graph.vertex_count), np.diff(graph.indptr))
    measured = ranks[graph.neighbors] - ranks[sources]
    consistent = bool(np.array_equal(measured, graph.deltas))
    deltas = Counter(int(x) for x in measured)
    return GradingReport(
        n=graph.n,
        min_rank=lo,
        max_rank=hi,
        rank_counts=tuple(int(c) for c in counts),
        min_elements=tuple(int(v) for v in np.flatnonzero(ranks == lo)),
        max_elements=tuple(int(v) for v in np.flatnonzero(ranks == hi)),
        all_edges_unit_step=consistent and bool(np.all(np.abs(measured) == 1)),
        is_unimodal=_is_unimodal([int(c) for c in counts]),
        edge_deltas=dict(sorted(deltas.items())),
    )


def _row_of(tableau: YoungTableau) -> dict[int, int]:
    return {x: r for r, row in enumerate(tableau.rows) for x in row}


def connecting_word(source: YoungTableau, target: YoungTableau) -> list[int]:
    """Word ``w`` with ``apply_word(source, w) == target`` for two-row rectangular tableaux.

    Repeatedly takes the smallest entry ``i`` whose row differs, the run
    ``i..i+k`` sharing its row and ``i+k+1`` on the other row, and applies
    ``s_i s_{i+1} ... s_{i+k}``, which moves ``i`` to the other row and leaves
    ``1..i-1`` in place.
    """
    if source.shape != target.shape:
        raise ShapeMismatch(f"shapes {source.shape.parts} and {target.shape.parts} differ")
    parts = source.shape.parts
    if len(parts) != 2 or parts[0] != parts[1]:
        raise ShapeMismatch(f"connecting words need shape (n,n), got {parts}")
    word: list[int] = []
    current = source
    goal = _row_of(target)
    while current != target:
        rows = _row_of(current)
        i = next(x for x in range(1, current.N + 1) if rows[x] != goal[x])
        end = i
        while end + 1 <= current.N and rows[end + 1] == rows[i]:
            end += 1
        step = list(range(i, end + 1))
        current = apply_word(current, step)
        if _row_of(current)[i] == rows[i]:
            raise RuntimeError(f"step {step} did not move entry {i}")
        word = step + word
    return word


def witness_path(graph: MoveGraph, u: int, v: int) -> Optional[list[tuple[int, int, str]]]:
    """Shortest path from ``u`` to ``v`` as ``(from, to, generator)`` steps, or ``None``."""
    for x in (u, v):
        if not 0 <= x < graph.vertex_count:
            raise VertexOutOfRange(f"vertex {x} outside 0..{graph.vertex_count - 1}")
    if u == v:
        return []
    back: dict[int, tuple[int, int]] = {u: (-1, -1)}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        lo, hi = graph.indptr[a], graph.indptr[a + 1]
        for k in range(lo, hi):
            b = int(graph.neighbors[k])
            if b in back:
                continue
            back[b] = (a, int(graph.generators[k]))
            if b == v:
                path = []
                while b != u:
                    a, code = back[b]
                    path.append((a, b, graph.kind.label(code)))
                    b = a
                return path[::-1]
            queue.append(b)
    return None


@dataclass(frozen=True)
class CoverageReport:
    """Local moves versus s_i-local moves, per tree and in total."""

    n: int
    per_tree: tuple[tuple[int, int, int], ...]  # (tree id, local moves, s_i-local moves)
    local_edge_count: int
    type_a_edge_count: int

    @property
    def total_local_moves(self) -> int:
        return sum(t[1] for t in self.per_tree)

    @property
    def total_si_moves(self) -> int:
        return sum(t[2] for t in self.per_tree)

    @property
    def trees_with_other_moves(self) -> tuple[int, ...]:
        return tuple(t[0] for t in self.per_tree if t[1] > t[2])

    @property
    def strict_somewhere(self) -> bool:
        return bool(self.trees_with_other_moves)


def si_move_coverage(n: int, cap: Optional[int] = None) -> CoverageReport:
    from .enumeration import enumerate_trees
    from .moves import is_si_local_move

    per_tree = []
    for k, tree in enumerate(enumerate_trees(n, cap)):
        moves = enumerate_local_moves(tree)
        si = sum(1 for rec in moves if is_si_local_move(tree, rec) is not None)
        per_tree.append((k, len(moves), si))
    return CoverageReport(
        n=n,
        per_tree=tuple(per_tree),
        local_edge_count=build_graph(GeneratorSet.all_local_moves(), n, cap=cap).edge_count,
        type_a_edge_count=build_graph(GeneratorSet.type_a(), n, cap=cap).edge_count,
    )


# export


def _fixed_points(graph: MoveGraph) -> list[tuple[int, int]]:
    """``(vertex, generator code)`` for every generator fixing a vertex."""
    out = []
    kind = graph.kind.kind
    for v, label in enumerate(graph.vertex_labels):
        if kind is GeneratorKind.TABLEAU_SHAPE:
            t = parse_tableau(label)
            out.extend((v, i) for i in range(1, t.N) if s_i_tableau(t, i) is t)
        elif kind is not GeneratorKind.ALL_LOCAL_MOVES:
            word = parse_tree(label).word
            out.extend((v, code) for img, code in _tree_images(kind, word) if img == word)
    return out


def _edge_rows(graph: MoveGraph, loops: bool) -> list[tuple[int, int, str, Optional[int]]]:
    rows = list(graph.edges())
    if loops:
        rows.extend((v, v, graph.kind.label(c), 0 if graph.deltas is not None else None) for v, c in _fixed_points(graph))
        rows.sort(key=lambda r: (r[0], r[1], graph.kind.code(r[2])))
    return rows


def _graph_name(graph: MoveGraph) -> str:
    if graph.kind.kind is GeneratorKind.TABLEAU_SHAPE:
        return "tableau_" + "_".join(map(str, graph.shape.parts))
    return f"{graph.kind.kind.value}_n{graph.n}"


def to_dot(graph: MoveGraph, loops: bool = False) -> str:
    out = [f"graph {_graph_name(graph)} {{"]
    for v, label in enumerate(graph.vertex_labels):
        out.append(f'  {v} [label="{label}"];')
    for u, v, gen, _ in _edge_rows(graph, loops):
        out.append(f'  {u} -- {v} [label="{gen}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def to_csv(graph: MoveGraph, loops: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["u", "v", "generator", "delta"])
    for u, v, gen, delta in _edge_rows(graph, loops):
        writer.writerow([u, v, gen, "" if delta is None else delta])
    return buf.getvalue()


def to_json(graph: MoveGraph) -> str:
    tableau = graph.kind.kind is GeneratorKind.TABLEAU_SHAPE
    vertices = []
    for v, label in enumerate(graph.vertex_labels):
        entry = {"id": v, "tableau" if tableau else "tree": label}
        entry["rank"] = None if graph.ranks is None else int(graph.ranks[v])
        entry["symmetric"] = None if graph.symmetric is None else bool(graph.symmetric[v])
        vertices.append(entry)
    doc = {
        "kind": graph.kind.kind.value,
        "n": graph.n,
        "vertices": vertices,
        "edges": [{"u": u, "v": v, "gen": g, "delta": d} for u, v, g, d in graph.edges()],
    }
    if tableau:
        doc["shape"] = list(graph.shape.parts)
    return json.dumps(doc, indent=1) + "\n"


def read_graph_json(source: Union[str, Path, TextIO]) -> MoveGraph:
    """Rebuild a :class:`MoveGraph` from :func:`to_json` output (a path, file, or JSON text)."""
    if hasattr(source, "read"):
        text = source.read()
    elif isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        text = Path(source).read_text()
    else:
        text = source
    try:
        doc = json.loads(text)
        kind = GeneratorKind(doc["kind"])
    except (ValueError, KeyError) as exc:
        raise ParseError(f"not a move graph document: {exc}") from exc
    gens = GeneratorSet(kind, make_partition(doc["shape"]) if kind is GeneratorKind.TABLEAU_SHAPE else None)
    key = "tableau" if kind is GeneratorKind.TABLEAU_SHAPE else "tree"
    vertices = sorted(doc["vertices"], key=lambda x: x["id"])
    labels = tuple(x[key] for x in vertices)
    rows: list[list] = [[] for _ in vertices]
    for e in doc["edges"]:
        code = gens.code(e["gen"])
        d = e["delta"]
        rows[e["u"]].append((e["v"], code, d))
        rows[e["v"]].append((e["u"], code, None if d is None else -d))
    for r in rows:
        r.sort(key=lambda t: (t[0], t[1]))
    indptr, nbr, gen, delta = _assemble(rows)
    tree_graph = kind is not GeneratorKind.TABLEAU_SHAPE
    return MoveGraph(
        gens,
        doc["n"],
        labels,
        indptr,
        nbr,
        gen,
        delta if tree_graph else None,
        np.array([x["rank"] for x in vertices], dtype=np.int64) if tree_graph else None,
        np.array([x["symmetric"] for x in vertices], dtype=bool) if tree_graph else None,
    )


def dumps_graph(graph: MoveGraph, fmt: str, loops: bool = False) -> str:
    fmt = fmt.lower()
    if fmt == "dot":
        return to_dot(graph, loops)
    if fmt == "csv":
        return to_csv(graph, loops)
    if fmt == "json":
        return to_json(graph)
    raise ValueError(f"unknown graph format {fmt!r}")


def export_graph(
    graph: MoveGraph,
    fmt: str,
    destination: Union[str, Path, TextIO],
    loops: bool = False,
) -> None:
    text = dumps_graph(graph, fmt, loops)
    if hasattr(destination, "write"):
        destination.write(text)
        return
    try:
        with open(os.fspath(destination), "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoFailure(f"cannot write {destination}: {exc}") from exc
