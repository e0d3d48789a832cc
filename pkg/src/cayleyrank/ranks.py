"""Rank computations: generating-set rank per structure class, cube-sequence
rank for quasigroups, generalized rank, submagma rank and ring rank.

Subset searches enumerate candidates by size ascending and lexicographically
within a size, so the first witness found is minimal and runs are
reproducible.  Group and ring searches only need sizes up to ceil(log2 n):
a finite group of order n always has a generating set that small, and a ring
generating set need be no larger than one for its additive group.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product as iproduct
from typing import Iterable

from .core import (
    BudgetError,
    CayleyTable,
    Decision,
    ElementSet,
    ElementsLike,
    InputError,
    Parenthesization,
    RingTable,
    balanced_parenthesization,
    configured_budget,
    cube_set,
    element_set,
    group_rank_bound,
    is_associative,
    is_latin_square,
    log2_ceil,
)
from .membership import closure, subring_closure

DEFAULT_CANDIDATE_BUDGET = 500_000

#: exhaustive cube-rank search is exact up to this order; beyond it the
#: search samples randomly and reports an upper bound
EXHAUSTIVE_CUBE_LIMIT = 16


@dataclass(frozen=True)
class SearchLimits:
    """Caps for exhaustive subset searches on structures with no useful
    theoretical bound (general magmas and semigroups).

    The size cap bounds which subsets are considered at all; the candidate
    budget bounds total work on large tables.  Either truncation turns a
    would-be False into the exhausted verdict.
    """

    max_subset_size: int = 6
    max_candidates: int | None = None

    def candidate_budget(self) -> int:
        if self.max_candidates is not None:
            return self.max_candidates
        return configured_budget(DEFAULT_CANDIDATE_BUDGET)


UNLIMITED = SearchLimits(max_subset_size=10**9)


@dataclass(frozen=True)
class RankReport:
    """A rank value with its witness and search statistics.

    exact=True means the value is the true minimum and the witness has been
    re-verified to regenerate the structure.  exhausted=True means the search
    ran out of budget; rank is then None or a best-known upper bound.
    """

    rank: int | None
    witness: ElementSet | tuple[tuple[int, ...], Parenthesization] | None
    method: str
    candidates_examined: int
    exact: bool
    exhausted: bool = False


def _verified_set_report(
    t: CayleyTable,
    close,
    witness: tuple[int, ...],
    method: str,
    examined: int,
    exact: bool = True,
) -> RankReport:
    regenerated = close(t, witness)
    if not regenerated.is_full:
        raise AssertionError(f"witness {witness} does not regenerate the structure")
    return RankReport(
        rank=len(witness),
        witness=ElementSet.of(t.n, witness),
        method=method,
        candidates_examined=examined,
        exact=exact,
    )


def rank_decision(t: CayleyTable, k: int, limits: SearchLimits = SearchLimits()) -> Decision:
    """Does some set of at most k elements generate the whole table?

    k is clamped at n (the full set always generates).  Subset sizes beyond
    limits.max_subset_size and candidate counts beyond the budget produce an
    exhausted verdict instead of a definitive False.
    """
    n = t.n
    if k < 0:
        raise InputError("k must be nonnegative")
    k = min(k, n)
    if k == 0:
        return Decision(False, examined=0, note="empty set generates nothing")
    full = (1 << n) - 1
    budget = limits.candidate_budget()
    examined = 0
    top = min(k, limits.max_subset_size)
    capped = top < k
    for size in range(1, top + 1):
        for cand in combinations(range(n), size):
            examined += 1
            if examined > budget:
                return Decision(None, examined=examined - 1, note="candidate budget exhausted")
            if closure(t, cand).mask == full:
                return Decision(True, witness=ElementSet.of(n, cand), examined=examined)
    if capped:
        return Decision(None, examined=examined, note=f"no generating set of size <= {top}")
    return Decision(False, examined=examined)


def magma_rank(t: CayleyTable, limits: SearchLimits = SearchLimits()) -> RankReport:
    """Exact minimum generating-set size by size-ascending subset search."""
    n = t.n
    budget = limits.candidate_budget()
    examined = 0
    top = min(n, limits.max_subset_size)
    for size in range(1, top + 1):
        for cand in combinations(range(n), size):
            examined += 1
            if examined > budget:
                return RankReport(None, None, "exhaustive", examined - 1, exact=False, exhausted=True)
            if closure(t, cand).is_full:
                return _verified_set_report(t, closure, cand, "exhaustive", examined)
    return RankReport(None, None, "exhaustive", examined, exact=False, exhausted=True)


def group_rank(t: CayleyTable) -> RankReport:
    """Exact group rank, searching subset sizes 1..ceil(log2 n) only."""
    if not (is_associative(t) and is_latin_square(t)):
        raise InputError("table is not a group")
    n = t.n
    examined = 0
    for size in range(1, group_rank_bound(n) + 1):
        for cand in combinations(range(n), size):
            examined += 1
            if closure(t, cand).is_full:
                return _verified_set_report(t, closure, cand, "log-bounded", examined)
    raise AssertionError("a finite group must have a generating set within the log bound")


def _cube_covers(t: CayleyTable, seq: tuple[int, ...], p: Parenthesization) -> bool:
    return cube_set(t, seq, p, budget=max(len(seq), 32)).is_full


def _cube_report(
    t: CayleyTable, seq: tuple[int, ...], method: str, examined: int, exact: bool
) -> RankReport:
    p = balanced_parenthesization(len(seq))
    if not _cube_covers(t, seq, p):
        raise AssertionError(f"cube witness {seq} does not cover the structure")
    return RankReport(
        rank=len(seq),
        witness=(seq, p),
        method=method,
        candidates_examined=examined,
        exact=exact,
    )


def quasigroup_cube_rank(
    t: CayleyTable,
    max_len: int | None = None,
    tries: int = 1000,
    seed: int = 0,
    budget: int | None = None,
) -> RankReport:
    """Minimum size of a covering cube sequence, under the balanced tree.

    Orders up to EXHAUSTIVE_CUBE_LIMIT get an exact minimum by enumerating
    all element choices per length (lengths whose 2^(k) cube cardinality
    cannot reach n are skipped).  Larger orders are searched randomly with
    `tries` seeded samples per length, yielding an upper bound (exact=False).
    """
    n = t.n
    if not is_latin_square(t):
        raise InputError("table is not a Latin square")
    if budget is None:
        budget = configured_budget(DEFAULT_CANDIDATE_BUDGET * 4)
    exhaustive = n <= EXHAUSTIVE_CUBE_LIMIT
    if max_len is None:
        max_len = n + 1 if exhaustive else 4 * max(1, log2_ceil(n))
    examined = 0
    if exhaustive:
        for m in range(1, max_len + 1):
            if (1 << (m - 1)) < n:
                continue
            p = balanced_parenthesization(m)
            for seq in iproduct(range(n), repeat=m):
                examined += 1
                if examined > budget:
                    return RankReport(None, None, "exhaustive", examined - 1, exact=False, exhausted=True)
                if cube_set(t, seq, p, budget=max(m, 32)).is_full:
                    return _cube_report(t, seq, "exhaustive", examined, exact=True)
        return RankReport(None, None, "exhaustive", examined, exact=False, exhausted=True)
    rng = random.Random(seed)
    for m in range(1, max_len + 1):
        if (1 << (m - 1)) < n:
            continue
        p = balanced_parenthesization(m)
        for _ in range(tries):
            examined += 1
            if examined > budget:
                return RankReport(None, None, "randomized", examined - 1, exact=False, exhausted=True)
            seq = tuple(rng.randrange(n) for _ in range(m))
            if cube_set(t, seq, p, budget=max(m, 32)).is_full:
                return _cube_report(t, seq, "randomized", examined, exact=False)
    return RankReport(None, None, "randomized", examined, exact=False, exhausted=True)


def quasigroup_rank_decision(
    t: CayleyTable, k: int, tries: int = 1000, seed: int = 0, budget: int | None = None
) -> Decision:
    """Is there a covering cube sequence of size at most k?

    Note the quasigroup rank is a sequence size, not a set size.  Definitive
    both ways for orders within the exhaustive limit; randomized search can
    only return True or exhausted beyond it.
    """
    n = t.n
    if not is_latin_square(t):
        raise InputError("table is not a Latin square")
    if k < 0:
        raise InputError("k must be nonnegative")
    if k == 0:
        return Decision(False, examined=0, note="cube sequences are nonempty")
    if budget is None:
        budget = configured_budget(DEFAULT_CANDIDATE_BUDGET * 4)
    examined = 0
    if n <= EXHAUSTIVE_CUBE_LIMIT:
        for m in range(1, k + 1):
            if (1 << (m - 1)) < n:
                continue
            p = balanced_parenthesization(m)
            for seq in iproduct(range(n), repeat=m):
                examined += 1
                if examined > budget:
                    return Decision(None, examined=examined - 1, note="budget exhausted")
                if cube_set(t, seq, p, budget=max(m, 32)).is_full:
                    return Decision(True, witness=(seq, p), examined=examined)
        return Decision(False, examined=examined)
    rng = random.Random(seed)
    for m in range(1, k + 1):
        if (1 << (m - 1)) < n:
            continue
        p = balanced_parenthesization(m)
        for _ in range(tries):
            examined += 1
            if examined > budget:
                return Decision(None, examined=examined - 1, note="budget exhausted")
            seq = tuple(rng.randrange(n) for _ in range(m))
            if cube_set(t, seq, p, budget=max(m, 32)).is_full:
                return Decision(True, witness=(seq, p), examined=examined)
    return Decision(None, examined=examined, note="randomized search found no witness")


def generalized_rank(
    t: CayleyTable, targets: ElementsLike, k: int, limits: SearchLimits = SearchLimits()
) -> Decision:
    """Is there S of size at most k with S a subset of T and T inside <S>?"""
    n = t.n
    targets = element_set(n, targets)
    if k < 0:
        raise InputError("k must be nonnegative")
    pool = sorted(targets)
    budget = limits.candidate_budget()
    examined = 0
    top = min(k, len(pool), limits.max_subset_size)
    for size in range(0, top + 1):
        for cand in combinations(pool, size):
            examined += 1
            if examined > budget:
                return Decision(None, examined=examined - 1, note="candidate budget exhausted")
            if targets.issubset(closure(t, cand)):
                return Decision(True, witness=ElementSet.of(n, cand), examined=examined)
    if min(k, len(pool)) > limits.max_subset_size:
        return Decision(None, examined=examined, note=f"no witness of size <= {top}")
    return Decision(False, examined=examined)


def restrict_table(t: CayleyTable, elems: Iterable[int]) -> tuple[CayleyTable, list[int]]:
    """Table induced on a closed subset, with indices remapped to 0..m-1.

    Returns the subtable and the sorted original labels.
    """
    labels = sorted(set(elems))
    index = {e: i for i, e in enumerate(labels)}
    rows = []
    for a in labels:
        row = []
        for b in labels:
            c = t.rows[a][b]
            if c not in index:
                raise InputError(f"subset is not closed: {a}*{b} = {c} escapes")
            row.append(index[c])
        rows.append(tuple(row))
    return CayleyTable(tuple(rows)), labels


def submagma_rank(t: CayleyTable, gens: ElementsLike, limits: SearchLimits = UNLIMITED) -> int:
    """Rank of the substructure generated by gens (0 for the empty set)."""
    gens = element_set(t.n, gens)
    closed = closure(t, gens)
    if not len(closed):
        return 0
    sub, _ = restrict_table(t, closed)
    report = magma_rank(sub, limits)
    if report.rank is None:
        raise BudgetError("submagma rank search exhausted its budget")
    return report.rank


def membership_via_rank(t: CayleyTable, h: int, gens: ElementsLike) -> bool:
    """The two-query rank comparison: rank<S> == rank<S | {h}>.

    Exists to exercise that reduction.  It is NOT equivalent to membership:
    nested substructures can share a rank (in Z/6, <{2}> = {0,2,4} and
    <{1,2}> = Z/6 both have rank 1, yet 1 is not in <{2}>), so this can
    answer True where submagma_membership answers False.
    """
    if not (0 <= h < t.n):
        raise InputError(f"element {h} out of range 0..{t.n - 1}")
    gens = element_set(t.n, gens)
    return submagma_rank(t, gens) == submagma_rank(t, gens.add(h))


@dataclass(frozen=True)
class RingRankReport:
    """Ring rank with the two one-operation ranks reported alongside."""

    rank: int
    witness: ElementSet
    additive_group_rank: int
    multiplicative_monoid_rank: int
    candidates_examined: int
    exact: bool = True


def ring_rank(r: RingTable) -> RingRankReport:
    """Exact ring rank by subset search up to ceil(log2 n).

    The bound is inherited from the additive group: any generating set for
    the additive group generates the ring, so the minimum is found within
    sizes 1..ceil(log2 n).  The identity is not free in either side rank:
    the multiplicative monoid rank counts it as a generator when nothing
    else produces it.
    """
    n = r.n
    add_rank = group_rank(r.add)
    mul_rank = magma_rank(r.mul, UNLIMITED)
    assert mul_rank.rank is not None
    examined = 0
    for size in range(1, group_rank_bound(n) + 1):
        for cand in combinations(range(n), size):
            examined += 1
            if subring_closure(r, cand).is_full:
                return RingRankReport(
                    rank=size,
                    witness=ElementSet.of(n, cand),
                    additive_group_rank=add_rank.rank,
                    multiplicative_monoid_rank=mul_rank.rank,
                    candidates_examined=examined,
                )
    raise AssertionError("the additive group bound guarantees a ring generating set")
