"""Decision procedures for submagma, subsemigroup, cube, bounded-subquasigroup,
subgroup and subring membership.

The reference semantics throughout is closure: <S> is the least superset of S
closed under the operation (and under both operations for rings), with
<empty> = empty.  The graph-reachability variant of subring membership is a
separate, clearly-labeled operation because its semantics genuinely differ;
see subring_membership_graph.
"""

from __future__ import annotations

from itertools import product as iproduct
from typing import Sequence

from .core import (
    CayleyTable,
    Decision,
    DEFAULT_CUBE_BUDGET,
    ElementSet,
    ElementsLike,
    InputError,
    Parenthesization,
    RingTable,
    Shape,
    configured_budget,
    cube_set,
    element_set,
    identity_of,
    is_associative,
    is_latin_square,
    _shape_catalog,
)

DEFAULT_SEARCH_BUDGET = 2_000_000


def closure(t: CayleyTable, gens: ElementsLike) -> ElementSet:
    """Least fixpoint of C := C | C*C seeded with gens.

    Worklist over the element list: each element, when processed, is
    multiplied both ways against everything queued before it, so every
    ordered pair is hit exactly once.  At most n rounds, O(m^2) lookups for a
    closure of size m.
    """
    n = t.n
    gens = element_set(n, gens)
    rows = t.rows
    seen = bytearray(n)
    queue: list[int] = []
    for x in gens:
        if not seen[x]:
            seen[x] = 1
            queue.append(x)
    i = 0
    while i < len(queue):
        x = queue[i]
        rx = rows[x]
        for j in range(i + 1):
            y = queue[j]
            for z in (rx[y], rows[y][x]):
                if not seen[z]:
                    seen[z] = 1
                    queue.append(z)
        i += 1
    return ElementSet.of(n, queue)


def submagma_membership(t: CayleyTable, h: int, gens: ElementsLike) -> bool:
    """h in <gens>.  The pairwise-product fixpoint reaches every parenthesized
    product, so no tree enumeration is needed."""
    if not (0 <= h < t.n):
        raise InputError(f"element {h} out of range 0..{t.n - 1}")
    return h in closure(t, gens)


def subsemigroup_membership(
    t: CayleyTable, h: int, gens: ElementsLike, *, check: bool = True
) -> bool:
    """Same answer as submagma_membership on an associative table."""
    if check and not is_associative(t):
        raise InputError("table is not associative")
    return submagma_membership(t, h, gens)


def cube_membership(
    t: CayleyTable,
    h: int,
    s: Sequence[int],
    p: Parenthesization,
    budget: int = DEFAULT_CUBE_BUDGET,
) -> bool:
    """True iff some inclusion vector evaluates the cube of (s, p) to h."""
    if not (0 <= h < t.n):
        raise InputError(f"element {h} out of range 0..{t.n - 1}")
    return h in cube_set(t, s, p, budget=budget)


def bounded_subquasigroup_membership(
    t: CayleyTable,
    h: int,
    gens: ElementsLike,
    k: int,
    d: int,
    budget: int | None = None,
) -> Decision:
    """Is h a product of at most k generators under a tree of depth at most d?

    Sequences of length 1..k are read as "at most k": a quasigroup has no
    identity to pad with, so exact-length products cannot express shorter
    ones (in Z/3 the only length-3 product of 1s is 0, yet 1 is in <{1}>).

    Enumeration order is deterministic: length ascending, sequences in
    lexicographic order, tree shapes from the memoized depth-bounded catalog;
    the witness is therefore the canonical least one.  Every (sequence,
    shape) evaluation counts against the budget; running out yields the
    distinguished exhausted verdict rather than False.
    """
    n = t.n
    if not is_latin_square(t):
        raise InputError("table is not a Latin square")
    if not (0 <= h < n):
        raise InputError(f"element {h} out of range 0..{n - 1}")
    if k < 1 or d < 1:
        raise InputError("bounds k and d must be positive")
    if budget is None:
        budget = configured_budget(DEFAULT_SEARCH_BUDGET)
    gens = element_set(n, gens)
    pool = sorted(gens)
    if not pool:
        return Decision(False, examined=0)
    rows = t.rows
    examined = 0
    for m in range(1, k + 1):
        shapes = _shape_catalog(m, min(d, m - 1)) if m > 1 else (0,)
        if not shapes:
            continue
        for seq in iproduct(pool, repeat=m):

            def ev(shape: Shape) -> int:
                if isinstance(shape, int):
                    return seq[shape]
                return rows[ev(shape[0])][ev(shape[1])]

            for shape in shapes:
                examined += 1
                if examined > budget:
                    return Decision(None, examined=examined - 1, note="budget exhausted")
                if ev(shape) == h:
                    witness = (seq, Parenthesization(shape))
                    return Decision(True, witness=witness, examined=examined)
    return Decision(False, examined=examined)


def group_inverses(t: CayleyTable) -> tuple[int, tuple[int, ...]]:
    """(identity, inverse map) of a group table."""
    e = identity_of(t)
    if e is None or not (is_associative(t) and is_latin_square(t)):
        raise InputError("table is not a group")
    inv = tuple(t.rows[x].index(e) for x in range(t.n))
    return e, inv


def subgroup_membership(t: CayleyTable, h: int, gens: ElementsLike) -> bool:
    """Reachability of h from the identity in the Cayley graph over S and S^-1.

    Equals the closure answer: the closure of a nonempty subset of a finite
    group already contains the identity and all inverses.  An empty generator
    set yields False, matching the library-wide empty-closure convention
    (the bare identity vertex is not considered reached).
    """
    n = t.n
    if not (0 <= h < n):
        raise InputError(f"element {h} out of range 0..{n - 1}")
    e, inv = group_inverses(t)
    gens = element_set(n, gens)
    if not len(gens):
        return False
    steps = sorted(set(gens) | {inv[s] for s in gens})
    rows = t.rows
    seen = bytearray(n)
    seen[e] = 1
    stack = [e]
    while stack:
        x = stack.pop()
        rx = rows[x]
        for s in steps:
            y = rx[s]
            if not seen[y]:
                seen[y] = 1
                stack.append(y)
    return bool(seen[h])


# ---------------------------------------------------------------------------
# Rings
# ---------------------------------------------------------------------------


def subring_closure(r: RingTable, gens: ElementsLike) -> ElementSet:
    """Least fixpoint under both the additive and multiplicative tables."""
    n = r.n
    gens = element_set(n, gens)
    arows, mrows = r.add.rows, r.mul.rows
    seen = bytearray(n)
    queue: list[int] = []
    for x in gens:
        if not seen[x]:
            seen[x] = 1
            queue.append(x)
    i = 0
    while i < len(queue):
        x = queue[i]
        for j in range(i + 1):
            y = queue[j]
            for z in (arows[x][y], arows[y][x], mrows[x][y], mrows[y][x]):
                if not seen[z]:
                    seen[z] = 1
                    queue.append(z)
        i += 1
    return ElementSet.of(n, queue)


def subring_membership(r: RingTable, h: int, gens: ElementsLike) -> bool:
    """Reference semantics: h in the closure of gens under + and *."""
    if not (0 <= h < r.n):
        raise InputError(f"element {h} out of range 0..{r.n - 1}")
    return h in subring_closure(r, gens)


def subring_membership_graph(r: RingTable, h: int, gens: ElementsLike) -> bool:
    """Reachability from `one` over single-accumulator steps x -> x*a - b.

    Each step multiplies the accumulator by a generator or keeps it
    (a in S | {one}) and then adds a generator, subtracts one, or adds
    nothing (b in {zero} | S | -S).  This is NOT equivalent to two-sided
    closure in general: the accumulator can never subtract `one` unless it
    is itself a generator.  See subring_closure_with_one for the oracle this
    operation is compared against by the subring comparison experiment.
    """
    n = r.n
    if not (0 <= h < n):
        raise InputError(f"element {h} out of range 0..{n - 1}")
    gens = element_set(n, gens)
    a_labels = sorted(set(gens) | {r.one})
    b_labels = sorted({r.zero} | set(gens) | {r.neg[s] for s in gens})
    arows, mrows, neg = r.add.rows, r.mul.rows, r.neg
    seen = bytearray(n)
    seen[r.one] = 1
    stack = [r.one]
    while stack:
        x = stack.pop()
        for a in a_labels:
            xa = mrows[x][a]
            row = arows[xa]
            for b in b_labels:
                y = row[neg[b]]
                if not seen[y]:
                    seen[y] = 1
                    stack.append(y)
    return bool(seen[h])


def subring_closure_with_one(r: RingTable, gens: ElementsLike) -> ElementSet:
    """Closure of gens | {one} under subtraction and multiplication.

    The with-identity subring convention: the oracle the graph reduction is
    compared against by the subring comparison experiment.
    """
    n = r.n
    gens = element_set(n, gens)
    arows, mrows, neg = r.add.rows, r.mul.rows, r.neg
    seen = bytearray(n)
    queue: list[int] = []
    for x in sorted(set(gens) | {r.one}):
        seen[x] = 1
        queue.append(x)
    i = 0
    while i < len(queue):
        x = queue[i]
        for j in range(i + 1):
            y = queue[j]
            for z in (arows[x][neg[y]], arows[y][neg[x]], mrows[x][y], mrows[y][x]):
                if not seen[z]:
                    seen[z] = 1
                    queue.append(z)
        i += 1
    return ElementSet.of(n, queue)
