"""Slow reference implementations used as independent oracles.

Nothing here shares search or closure code with the fast paths: closures are
computed by whole-set product rounds rather than a worklist, rank by full
subset enumeration without size bounds, and cube rank over all
parenthesization shapes rather than the balanced one.  Tests pit these
against the production implementations.
"""

from __future__ import annotations

from itertools import combinations, product as iproduct
from typing import Iterable

from .core import CayleyTable, Parenthesization, Shape, parenthesizations


def naive_closure(t: CayleyTable, seed: Iterable[int]) -> frozenset[int]:
    """Least fixpoint of C := C | C*C by repeated full-product rounds."""
    rows = t.rows
    current = frozenset(seed)
    while True:
        nxt = set(current)
        for x in current:
            row = rows[x]
            for y in current:
                nxt.add(row[y])
        if len(nxt) == len(current):
            return current
        current = frozenset(nxt)


def naive_rank(t: CayleyTable) -> tuple[int, tuple[int, ...]]:
    """Minimum generating-set size by unbounded subset enumeration."""
    n = t.n
    full = frozenset(range(n))
    for k in range(1, n + 1):
        for cand in combinations(range(n), k):
            if naive_closure(t, cand) == full:
                return k, cand
    raise AssertionError("the full element set always generates")


def naive_rank_decision(t: CayleyTable, k: int) -> bool:
    n = t.n
    full = frozenset(range(n))
    for size in range(1, min(k, n) + 1):
        for cand in combinations(range(n), size):
            if naive_closure(t, cand) == full:
                return True
    return False


def naive_independent(t: CayleyTable, s: Iterable[int]) -> bool:
    elems = frozenset(s)
    return all(x not in naive_closure(t, elems - {x}) for x in elems)


def products_by_length(t: CayleyTable, seed: Iterable[int], max_len: int) -> frozenset[int]:
    """Values of every parenthesized product of 1..max_len seed elements.

    Dynamic program over exact lengths: D[1] is the seed, and D[m] collects
    a*b over all splits D[i] x D[m-i], which covers every binary tree shape.
    """
    rows = t.rows
    d1 = frozenset(seed)
    if not d1:
        return frozenset()
    by_len: list[frozenset[int]] = [frozenset(), d1]
    for m in range(2, max_len + 1):
        vals = set()
        for i in range(1, m):
            for a in by_len[i]:
                row = rows[a]
                for b in by_len[m - i]:
                    vals.add(row[b])
        by_len.append(frozenset(vals))
    return frozenset().union(*by_len)


def bounded_products(t: CayleyTable, seed: Iterable[int], k: int, d: int) -> frozenset[int]:
    """Values of products of 1..k seed elements under trees of depth <= d.

    DP over (length, depth): R[1][d'] is the seed, and a tree of depth <= d'
    with m leaves splits into subtrees of depth <= d'-1.
    """
    rows = t.rows
    base = frozenset(seed)
    if not base:
        return frozenset()
    reach: list[list[frozenset[int]]] = [[frozenset()] * (d + 1)]
    reach.append([base] * (d + 1))
    for m in range(2, k + 1):
        per_depth = [frozenset()]
        for dd in range(1, d + 1):
            vals = set()
            for i in range(1, m):
                for a in reach[i][dd - 1]:
                    row = rows[a]
                    for b in reach[m - i][dd - 1]:
                        vals.add(row[b])
            per_depth.append(frozenset(vals))
        reach.append(per_depth)
    out: set[int] = set()
    for m in range(1, k + 1):
        out |= reach[m][d]
    return frozenset(out)


def enumerate_cube(t: CayleyTable, s: tuple[int, ...], p: Parenthesization) -> frozenset[int]:
    """Cube values by direct enumeration of all 2^k inclusion vectors."""
    rows = t.rows
    k = len(s) - 1
    values = set()
    for bits in range(1 << k):

        def ev(shape: Shape) -> int | None:
            if isinstance(shape, int):
                if shape == 0:
                    return s[0]
                return s[shape] if (bits >> (shape - 1)) & 1 else None
            a = ev(shape[0])
            b = ev(shape[1])
            if a is None:
                return b
            if b is None:
                return a
            return rows[a][b]

        values.add(ev(p.shape))
    return frozenset(values)


def naive_cube_rank(t: CayleyTable, max_len: int) -> tuple[int, tuple[int, ...], Parenthesization] | None:
    """Minimum covering cube sequence over ALL shapes, or None within max_len."""
    n = t.n
    full = frozenset(range(n))
    for m in range(1, max_len + 1):
        if (1 << (m - 1)) < n:
            continue  # a cube of k+1 elements has at most 2^k values
        shapes = parenthesizations(m)
        for seq in iproduct(range(n), repeat=m):
            for p in shapes:
                if enumerate_cube(t, seq, p) == full:
                    return m, seq, p
    return None
