"""Exhaustive claim checks behind ``catmoves verify``.

Each suite takes ``max_n`` and returns a list of :class:`Claim`.  A failing
claim carries the first counterexample found.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Optional

from .core import (
    format_tableau,
    format_tree,
    is_symmetric,
    make_tableau,
    mirror,
    phi,
    phi_inverse,
    total_descendants,
    total_distance,
)
from .enumeration import count_trees, enumerate_syt, enumerate_trees, hook_length_count
from .movegraph import (
    GeneratorSet,
    build_graph,
    connected_components,
    connecting_word,
    grading_report,
)
from .moves import (
    PairTag,
    apply_word,
    classify_pair,
    enumerate_local_moves,
    s_i_C,
    s_i_tableau,
    s_i_tree,
)


@dataclass(frozen=True)
class Claim:
    name: str
    passed: bool
    detail: str = ""
    counterexample: Optional[str] = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}"
        if self.detail:
            text += f": {self.detail}"
        if self.counterexample:
            text += f" [counterexample: {self.counterexample}]"
        return text


def _first_failure(cases) -> Optional[str]:
    for ok, witness in cases:
        if not ok:
            return witness()
    return None


def _claim(name: str, cases, detail: str = "") -> Claim:
    bad = _first_failure(cases)
    return Claim(name, bad is None, detail, bad)


def partitions_up_to(total: int):
    """Partitions of 1..total, each as a weakly decreasing tuple."""

    def parts(m: int, largest: int):
        if m == 0:
            yield ()
            return
        for p in range(min(m, largest), 0, -1):
            for rest in parts(m - p, p):
                yield (p,) + rest

    for m in range(1, total + 1):
        yield from parts(m, m)


def suite_bijection(max_n: int) -> list[Claim]:
    top = min(max_n, 8)

    def cases():
        for n in range(1, top + 1):
            trees = list(enumerate_trees(n))
            for t in trees:
                yield phi_inverse(phi(t)) == t, lambda t=t: format_tree(t)
            images = {phi(t).rows for t in trees}
            tableaux = list(enumerate_syt((n, n)))
            yield images == {y.rows for y in tableaux}, lambda n=n: f"phi not onto at n={n}"
            yield len(trees) == count_trees(n) == hook_length_count((n, n)), lambda n=n: f"count mismatch n={n}"

    return [_claim("phi bijection", cases(), f"n <= {top}")]


def suite_involution(max_n: int) -> list[Claim]:
    cells = min(max_n + 1, 8)
    top = min(max_n, 7)

    def tableau_cases():
        for shape in partitions_up_to(cells):
            for y in enumerate_syt(shape):
                for i in range(1, y.N):
                    yield s_i_tableau(s_i_tableau(y, i), i) == y, lambda y=y, i=i: f"{format_tableau(y)} i={i}"

    def tree_cases():
        for n in range(1, top + 1):
            for t in enumerate_trees(n):
                for i in range(1, 2 * n):
                    yield s_i_tree(s_i_tree(t, i), i) == t, lambda t=t, i=i: f"{format_tree(t)} s{i}"
                for i in range(1, n + 1):
                    yield s_i_C(s_i_C(t, i), i) == t, lambda t=t, i=i: f"{format_tree(t)} s{i}C"

    return [
        _claim("s_i involution on tableaux", tableau_cases(), f"all shapes with N <= {cells}"),
        _claim("s_i and s_i^C involutions on trees", tree_cases(), f"n <= {top}"),
    ]


def suite_conjugation(max_n: int) -> list[Claim]:
    top = min(max_n, 7)

    def cases():
        for n in range(1, top + 1):
            for t in enumerate_trees(n):
                y = phi(t)
                for i in range(1, 2 * n):
                    yield s_i_tree(t, i) == phi_inverse(s_i_tableau(y, i)), lambda t=t, i=i: f"{format_tree(t)} s{i}"

    return [_claim("s_i on trees equals phi-conjugated s_i on tableaux", cases(), f"n <= {top}")]


def suite_classification(max_n: int) -> list[Claim]:
    top = min(max_n, 7)

    def agrees(t, i) -> bool:
        y = phi(t)
        (r1, c1), (r2, c2) = y.position(i), y.position(i + 1)
        kind = classify_pair(t, i)
        if r1 == r2:
            return kind.tag in (PairTag.SAME_ROW_TOP, PairTag.SAME_ROW_BOTTOM) and (kind.tag is PairTag.SAME_ROW_TOP) == (r1 == 0)
        if c1 == c2:
            return kind.tag is PairTag.SAME_COLUMN_ROOT_LEAF
        j, jp = kind.partner if kind.movable else (0, 0)
        return kind.movable and j < i < i + 1 < jp

    def cases():
        for n in range(1, top + 1):
            for t in enumerate_trees(n):
                for i in range(1, 2 * n):
                    yield agrees(t, i), lambda t=t, i=i: f"{format_tree(t)} i={i}"

    return [_claim("pair classification matches tableau rows and columns", cases(), f"n <= {top}")]


def suite_distance(max_n: int) -> list[Claim]:
    top = min(max_n, 8)

    def equal_cases():
        for n in range(1, top + 1):
            for t in enumerate_trees(n):
                yield total_distance(t) == total_descendants(t), lambda t=t: format_tree(t)

    def range_cases():
        for n in range(1, top + 1):
            values = [(total_distance(t), t) for t in enumerate_trees(n)]
            lo = [t for d, t in values if d == n]
            hi = [t for d, t in values if d == n * (n + 1) // 2]
            ok = min(d for d, _ in values) == n and max(d for d, _ in values) == n * (n + 1) // 2
            ok = ok and len(lo) == 1 and lo[0].word == "()" * n and len(hi) == 1 and hi[0].word == "(" * n + ")" * n
            yield ok, lambda n=n: f"extremes wrong at n={n}"

    def mirror_cases():
        for n in range(1, top + 1):
            for t in enumerate_trees(n):
                m = mirror(t)
                ok = mirror(m) == t and total_distance(m) == total_distance(t) and is_symmetric(t) == (m == t)
                yield ok, lambda t=t: format_tree(t)

    return [
        _claim("total distance equals total descendants", equal_cases(), f"n <= {top}"),
        _claim("n <= d_T <= n(n+1)/2 with unique star and path", range_cases(), f"n <= {top}"),
        _claim("mirror is a distance-preserving involution", mirror_cases(), f"n <= {top}"),
    ]


def suite_grading(max_n: int) -> list[Claim]:
    top = min(max_n, 9)
    claims = []
    sequences = []
    bad = None
    for n in range(1, top + 1):
        report = grading_report(build_graph(GeneratorSet.type_a(), n))
        sequences.append(f"n={n}: " + ",".join(map(str, report.rank_counts)))
        if not report.all_edges_unit_step and bad is None:
            bad = f"non-unit step at n={n}: {report.edge_deltas}"
    claims.append(Claim("typeA edges change total distance by +-1", bad is None, f"n <= {top}", bad))

    def sign_cases():
        for n in range(1, min(top, 7) + 1):
            for t in enumerate_trees(n):
                for rec in enumerate_local_moves(t):
                    ok = (rec.move_type == 1) == (rec.rank_delta == -1) and rec.distance_change * rec.rank_delta > 0
                    yield ok, lambda t=t, rec=rec: f"{format_tree(t)} {rec}"

    claims.append(_claim("type 1 moves lower and type 2 moves raise total distance", sign_cases(), f"n <= {min(top, 7)}"))
    claims.append(Claim("typeA rank sequences", True, "; ".join(sequences)))
    return claims


def suite_rank_count(max_n: int) -> list[Claim]:
    top = min(max_n, 10)
    bad = None
    for n in range(2, top + 1):
        report = grading_report(build_graph(GeneratorSet.type_a(), n))
        if report.rank_count != math.comb(n + 1, 2) - n + 1:
            bad = f"n={n}: {report.rank_count} ranks"
            break
    return [Claim("number of typeA ranks is C(n+1,2) - n + 1", bad is None, f"2 <= n <= {top}", bad)]


def suite_extremal(max_n: int) -> list[Claim]:
    top = min(max_n, 10)
    bad = None
    notes = []
    for n in range(1, top + 1):
        g = build_graph(GeneratorSet.type_a(), n)
        r = grading_report(g)
        star = [g.tree(v).word for v in r.min_elements]
        path = [g.tree(v).word for v in r.max_elements]
        ok = star == ["()" * n] and path == ["(" * n + ")" * n] and r.max_rank == math.comb(n + 1, 2)
        if not ok and bad is None:
            bad = f"n={n}: min {star}, max {path}"
        if r.min_rank_deviation:
            notes.append(f"n={n} min={r.min_rank} (nominal {r.nominal_min_rank})")
    detail = f"n <= {top}; measured minimum rank is n, one above the nominal n-1"
    return [
        Claim("unique star minimum and path maximum", bad is None, detail, bad),
        Claim("minimum rank deviation from n-1 reported", True, "; ".join(notes[:3]) + (" ..." if len(notes) > 3 else "")),
    ]


def suite_connectivity(max_n: int) -> list[Claim]:
    top = min(max_n, 10)
    bad = None
    for n in range(1, top + 1):
        c = connected_components(build_graph(GeneratorSet.type_a(), n))
        if c.component_count != 1:
            bad = f"n={n}: {c.component_count} components"
            break
    word_top = min(max_n, 5)

    def word_cases():
        for n in range(1, word_top + 1):
            tableaux = list(enumerate_syt((n, n)))
            for y, z in itertools.product(tableaux, repeat=2):
                yield apply_word(y, connecting_word(y, z)) == z, lambda y=y, z=z: f"{format_tableau(y)} -> {format_tableau(z)}"

    return [
        Claim("typeA graph connected", bad is None, f"n <= {top}", bad),
        _claim("connecting word replays to its target", word_cases(), f"all pairs, n <= {word_top}"),
    ]


def suite_type_c_components(max_n: int) -> list[Claim]:
    top = min(max_n, 9)
    bad = None
    notes = []
    for n in range(3, top + 1):
        c = connected_components(build_graph(GeneratorSet.type_c(), n))
        notes.append(f"n={n}: " + "+".join(map(str, c.sizes)))
        split = c.component_count == 2 and sorted((x.all_symmetric, x.all_asymmetric) for x in c.components) == [
            (False, True),
            (True, False),
        ]
        if n == 3:
            split = split and sorted(c.sizes) == [2, 3]
        if not split and bad is None:
            bad = f"n={n}: {c.components}"
    return [Claim("typeC graph has a symmetric and an asymmetric component", bad is None, "; ".join(notes), bad)]


def suite_symmetry(max_n: int) -> list[Claim]:
    top = min(max_n, 7)

    def cases():
        for n in range(1, top + 1):
            for t in enumerate_trees(n):
                if is_symmetric(t):
                    for i in range(1, n + 1):
                        yield is_symmetric(s_i_C(t, i)), lambda t=t, i=i: f"{format_tree(t)} s{i}C"

    def commute_cases():
        for n in range(2, top + 1):
            for y in enumerate_syt((n, n)):
                for i in range(1, n):
                    j = 2 * n - i
                    yield s_i_tableau(s_i_tableau(y, i), j) == s_i_tableau(s_i_tableau(y, j), i), lambda y=y, i=i: f"{format_tableau(y)} i={i}"

    return [
        _claim("s_i^C preserves symmetric trees", cases(), f"n <= {top}"),
        _claim("s_i and s_{2n-i} commute", commute_cases(), f"n <= {top}"),
    ]


def suite_type_c_deltas(max_n: int) -> list[Claim]:
    top = min(max_n, 7)
    notes = []
    ok = True
    for n in range(2, top + 1):
        g = build_graph(GeneratorSet.type_c(), n)
        seen_lo, seen_hi = set(), set()
        for _, _, gen, d in g.edges():
            (seen_hi if gen == f"s{n}C" else seen_lo).add(abs(d))
        ok = ok and seen_hi <= {1} and seen_lo <= {0, 1, 2}
        notes.append(f"n={n}: i<n |delta| in {sorted(seen_lo)}, i=n |delta| in {sorted(seen_hi)}")
    return [Claim("typeC rank changes bounded by 2 (i<n) and 1 (i=n)", ok, "; ".join(notes))]


def suite_containment(max_n: int) -> list[Claim]:
    top = min(max_n, 7)
    subset_bad = strict_bad = None
    notes = []
    for n in range(1, top + 1):
        a = build_graph(GeneratorSet.type_a(), n).endpoint_pairs()
        every = build_graph(GeneratorSet.all_local_moves(), n).endpoint_pairs()
        notes.append(f"n={n}: {len(a)} of {len(every)}")
        if not a <= every and subset_bad is None:
            subset_bad = f"n={n}: {sorted(a - every)[:3]}"
        if n >= 3 and a == every and strict_bad is None:
            strict_bad = f"n={n}: edge sets equal"
    return [
        Claim("typeA edges are local-move edges", subset_bad is None, "; ".join(notes), subset_bad),
        Claim("containment is strict", strict_bad is None, f"3 <= n <= {top} (at n=2 both graphs have the single edge)", strict_bad),
    ]


def suite_non_group(max_n: int) -> list[Claim]:
    base = make_tableau((2, 2), [[1, 2], [3, 4]])
    other = make_tableau((2, 2), [[1, 3], [2, 4]])
    first = apply_word(base, [2, 3, 2])
    second = apply_word(base, [3, 2, 3])
    ok = first == base and second == other
    detail = f"s2s3s2 -> {format_tableau(first)}, s3s2s3 -> {format_tableau(second)}"
    return [Claim("braid relation fails on (2,2) tableaux", ok, detail)]


SUITES: dict[str, Callable[[int], list[Claim]]] = {
    "bijection": suite_bijection,
    "involution": suite_involution,
    "conjugation": suite_conjugation,
    "classification": suite_classification,
    "distance": suite_distance,
    "grading": suite_grading,
    "rank-count": suite_rank_count,
    "extremal": suite_extremal,
    "connectivity": suite_connectivity,
    "typeC-components": suite_type_c_components,
    "symmetry": suite_symmetry,
    "typeC-deltas": suite_type_c_deltas,
    "containment": suite_containment,
    "non-group": suite_non_group,
}


def run_suites(names: list[str], max_n: int) -> list[Claim]:
    if "all" in names:
        names = list(SUITES)
    claims = []
    for name in names:
        claims.extend(SUITES[name](max_n))
    return claims
