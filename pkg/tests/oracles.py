"""Brute-force reference implementations used only by the tests.

None of these share code with the package: matchings come from recursive
pairing, tableaux from filtered permutations, depths from counting enclosing
arcs.
"""

from __future__ import annotations

import itertools
import math


def perfect_matchings(labels):
    labels = list(labels)
    if not labels:
        yield []
        return
    first, rest = labels[0], labels[1:]
    for k, other in enumerate(rest):
        for m in perfect_matchings(rest[:k] + rest[k + 1:]):
            yield [(first, other)] + m


def crosses(p, q):
    (a, b), (c, d) = sorted((p, q))
    return a < c < b < d


def noncrossing_matchings(n):
    """All noncrossing perfect matchings of 1..2n as sorted pair tuples."""
    out = []
    for m in perfect_matchings(range(1, 2 * n + 1)):
        if not any(crosses(p, q) for p, q in itertools.combinations(m, 2)):
            out.append(tuple(sorted(m)))
    return out


def catalan_by_recurrence(n):
    c = [1]
    for m in range(n):
        c.append(sum(c[k] * c[m - k] for k in range(m + 1)))
    return c[n]


def enclosing_count(pairs, pair):
    return sum(1 for a, b in pairs if a < pair[0] and pair[1] < b)


def distance_by_nesting(pairs):
    """Each edge's lower vertex sits one below every arc enclosing it."""
    return sum(1 + enclosing_count(pairs, p) for p in pairs)


def minimal_enclosing(pairs, pair):
    outer = [(a, b) for a, b in pairs if a < pair[0] and pair[1] < b]
    return max(outer) if outer else None


def syt_by_permutation(parts):
    """All standard fillings of a shape, by filtering every permutation."""
    total = sum(parts)
    found = []
    for perm in itertools.permutations(range(1, total + 1)):
        rows, k = [], 0
        for p in parts:
            rows.append(perm[k:k + p])
            k += p
        if any(r[c] >= r[c + 1] for r in rows for c in range(len(r) - 1)):
            continue
        if any(rows[r - 1][c] >= rows[r][c] for r in range(1, len(rows)) for c in range(len(rows[r]))):
            continue
        found.append(tuple(rows))
    return found


def hook_formula(parts):
    conj = [sum(1 for p in parts if p > c) for c in range(parts[0])]
    prod = 1
    for r, p in enumerate(parts):
        for c in range(p):
            prod *= (p - c) + (conj[c] - r) - 1
    return math.factorial(sum(parts)) // prod


def tableau_swap_oracle(rows, i):
    """s_i computed from raw rows: swap when i, i+1 share neither row nor column."""
    pos = {x: (r, c) for r, row in enumerate(rows) for c, x in enumerate(row)}
    (r1, c1), (r2, c2) = pos[i], pos[i + 1]
    if r1 == r2 or c1 == c2:
        return tuple(tuple(row) for row in rows)
    sw = {i: i + 1, i + 1: i}
    return tuple(tuple(sw.get(x, x) for x in row) for row in rows)


def two_row_tableau(pairs):
    top = sorted(a for a, _ in pairs)
    bottom = sorted(b for _, b in pairs)
    return (tuple(top), tuple(bottom))


def tree_from_rows(rows, n):
    """Unique noncrossing matching whose openers are the top row, by search."""
    hits = [m for m in noncrossing_matchings(n) if tuple(sorted(a for a, _ in m)) == tuple(rows[0])]
    assert len(hits) == 1
    return hits[0]
