"""Cayley-table algebra: tables, classification, parenthesized products, cubes, rings.

Elements are always 0-based indices into an n x n operation table.  All types
here are immutable values; every operation is a pure function, so everything
is safe to share across threads.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union


class InputError(ValueError):
    """Malformed input: bad table, out-of-range element, mismatched tree."""


class BudgetError(RuntimeError):
    """A search space exceeds its configured budget."""


#: cube enumeration cap: sequences longer than budget+1 raise BudgetError
DEFAULT_CUBE_BUDGET = 24

_BUDGET_ENV = "CAYLEYRANK_BUDGET"


def configured_budget(default: int) -> int:
    """Default candidate budget for searches, overridable via CAYLEYRANK_BUDGET."""
    raw = os.environ.get(_BUDGET_ENV)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise InputError(f"{_BUDGET_ENV} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise InputError(f"{_BUDGET_ENV} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Decision:
    """Outcome of a bounded search: True, False, or None when the budget ran out.

    A None truth is the honest "exhausted" verdict; `examined` records the
    budget spent so callers can tell "false" from "unknown".
    """

    truth: bool | None
    witness: object = None
    examined: int = 0
    note: str = ""

    @property
    def exhausted(self) -> bool:
        return self.truth is None


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CayleyTable:
    """An n x n operation table over elements 0..n-1 (closed by construction)."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n == 0:
            raise InputError("empty Cayley table")
        for row in self.rows:
            if len(row) != n:
                raise InputError(f"table is not square: row of length {len(row)}, expected {n}")
            for entry in row:
                if not (0 <= entry < n):
                    raise InputError(f"table entry {entry} out of range 0..{n - 1}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "CayleyTable":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.n))


def product(t: CayleyTable, x: int, y: int) -> int:
    """Table lookup x*y with bounds checking."""
    n = t.n
    if not (0 <= x < n and 0 <= y < n):
        raise InputError(f"elements ({x}, {y}) out of range 0..{n - 1}")
    return t.rows[x][y]


def is_latin_square(t: CayleyTable) -> bool:
    """True iff every row and every column is a permutation of 0..n-1."""
    n = t.n
    full = frozenset(range(n))
    for row in t.rows:
        if frozenset(row) != full:
            return False
    for j in range(n):
        if frozenset(row[j] for row in t.rows) != full:
            return False
    return True


def is_associative(t: CayleyTable) -> bool:
    """Exhaustive O(n^3) triple check (Light's associativity test, naive form)."""
    rows = t.rows
    n = t.n
    for x in range(n):
        rx = rows[x]
        for y in range(n):
            xy = rx[y]
            rxy = rows[xy]
            ry = rows[y]
            for z in range(n):
                if rxy[z] != rx[ry[z]]:
                    return False
    return True


_KINDS = ("magma", "semigroup", "monoid", "quasigroup", "loop", "group")


@dataclass(frozen=True)
class StructureKind:
    """Classification flags plus the most specific kind label they support."""

    is_associative: bool
    is_latin_square: bool
    has_left_identity: bool
    has_right_identity: bool
    has_two_sided_identity: bool
    has_inverses: bool
    kind: str

    def __post_init__(self) -> None:
        assert self.kind in _KINDS


def left_identities(t: CayleyTable) -> list[int]:
    n = t.n
    return [e for e in range(n) if all(t.rows[e][x] == x for x in range(n))]


def right_identities(t: CayleyTable) -> list[int]:
    n = t.n
    return [e for e in range(n) if all(t.rows[x][e] == x for x in range(n))]


def identity_of(t: CayleyTable) -> int | None:
    """The two-sided identity, or None."""
    rights = set(right_identities(t))
    for e in left_identities(t):
        if e in rights:
            return e
    return None


def classify(t: CayleyTable) -> StructureKind:
    assoc = is_associative(t)
    latin = is_latin_square(t)
    lefts = left_identities(t)
    rights = right_identities(t)
    two_sided = identity_of(t)
    inverses = False
    if two_sided is not None:
        e = two_sided
        inverses = all(
            any(t.rows[x][y] == e and t.rows[y][x] == e for y in range(t.n))
            for x in range(t.n)
        )
    if assoc and latin:
        kind = "group"
    elif latin and two_sided is not None:
        kind = "loop"
    elif latin:
        kind = "quasigroup"
    elif assoc and two_sided is not None:
        kind = "monoid"
    elif assoc:
        kind = "semigroup"
    else:
        kind = "magma"
    return StructureKind(
        is_associative=assoc,
        is_latin_square=latin,
        has_left_identity=bool(lefts),
        has_right_identity=bool(rights),
        has_two_sided_identity=two_sided is not None,
        has_inverses=inverses,
        kind=kind,
    )


# ---------------------------------------------------------------------------
# Element sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ElementSet:
    """Dense subset of 0..n-1, stored as a bitmask."""

    n: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.n < 0 or self.mask < 0 or self.mask >> self.n:
            raise InputError(f"mask {self.mask:#x} out of range for n={self.n}")

    @classmethod
    def of(cls, n: int, elems: Iterable[int]) -> "ElementSet":
        mask = 0
        for e in elems:
            if not (0 <= e < n):
                raise InputError(f"element {e} out of range 0..{n - 1}")
            mask |= 1 << e
        return cls(n, mask)

    @classmethod
    def empty(cls, n: int) -> "ElementSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "ElementSet":
        return cls(n, (1 << n) - 1)

    def __contains__(self, e: int) -> bool:
        return 0 <= e < self.n and bool((self.mask >> e) & 1)

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __or__(self, other: "ElementSet") -> "ElementSet":
        assert self.n == other.n
        return ElementSet(self.n, self.mask | other.mask)

    def add(self, e: int) -> "ElementSet":
        return ElementSet.of(self.n, [e]) | self

    def without(self, e: int) -> "ElementSet":
        return ElementSet(self.n, self.mask & ~(1 << e))

    def issubset(self, other: "ElementSet") -> bool:
        return not (self.mask & ~other.mask)

    @property
    def is_full(self) -> bool:
        return self.mask == (1 << self.n) - 1

    def members(self) -> list[int]:
        return list(self)


ElementsLike = Union[ElementSet, Iterable[int]]


def element_set(n: int, elems: ElementsLike) -> ElementSet:
    """Normalize an ElementSet or iterable of indices to an ElementSet over n."""
    if isinstance(elems, ElementSet):
        if elems.n != n:
            raise InputError(f"element set over {elems.n} elements used with table of {n}")
        return elems
    return ElementSet.of(n, elems)


# ---------------------------------------------------------------------------
# Parenthesizations
# ---------------------------------------------------------------------------

# A shape is a leaf position (int) or a pair (left_shape, right_shape).
Shape = Union[int, tuple]


def _shape_leaves(shape: Shape, out: list[int]) -> None:
    if isinstance(shape, int):
        out.append(shape)
    else:
        _shape_leaves(shape[0], out)
        _shape_leaves(shape[1], out)


def _shape_depth(shape: Shape) -> int:
    if isinstance(shape, int):
        return 0
    return 1 + max(_shape_depth(shape[0]), _shape_depth(shape[1]))


def _shift(shape: Shape, offset: int) -> Shape:
    if isinstance(shape, int):
        return shape + offset
    return (_shift(shape[0], offset), _shift(shape[1], offset))


@dataclass(frozen=True)
class Parenthesization:
    """Binary tree over positions 0..k, leaves in left-to-right order."""

    shape: Shape

    def __post_init__(self) -> None:
        leaves: list[int] = []
        _shape_leaves(self.shape, leaves)
        if leaves != list(range(len(leaves))):
            raise InputError(f"leaves {leaves} do not enumerate positions in order")
        object.__setattr__(self, "_num_leaves", len(leaves))
        object.__setattr__(self, "_depth", _shape_depth(self.shape))

    @property
    def num_leaves(self) -> int:
        return self._num_leaves  # type: ignore[attr-defined]

    @property
    def depth(self) -> int:
        return self._depth  # type: ignore[attr-defined]

    def to_nested(self):
        """Nested-list form for serialization, e.g. [0, [[1, 2], 3]]."""

        def conv(shape: Shape):
            if isinstance(shape, int):
                return shape
            return [conv(shape[0]), conv(shape[1])]

        return conv(self.shape)

    def __str__(self) -> str:
        def fmt(shape: Shape) -> str:
            if isinstance(shape, int):
                return str(shape)
            return f"({fmt(shape[0])} {fmt(shape[1])})"

        return fmt(self.shape)


def _balanced_shape(m: int, offset: int) -> Shape:
    if m == 1:
        return offset
    left = (m + 1) // 2  # left-heavy on odd splits
    return (_balanced_shape(left, offset), _balanced_shape(m - left, offset + left))


def balanced_parenthesization(k: int) -> Parenthesization:
    """Balanced left-heavy tree with k leaves; depth is ceil(log2 k)."""
    if k < 1:
        raise InputError("a parenthesization needs at least one leaf")
    return Parenthesization(_balanced_shape(k, 0))


@lru_cache(maxsize=None)
def _shape_catalog(m: int, max_depth: int) -> tuple[Shape, ...]:
    if (1 << max_depth) < m:
        return ()
    if m == 1:
        return (0,)
    out: list[Shape] = []
    for left in range(1, m):
        for ls in _shape_catalog(left, max_depth - 1):
            for rs in _shape_catalog(m - left, max_depth - 1):
                out.append((ls, _shift(rs, left)))
    return tuple(out)


def parenthesizations(k: int, max_depth: int | None = None) -> tuple[Parenthesization, ...]:
    """All parenthesizations with k leaves and depth at most max_depth.

    The catalog is memoized; order is deterministic (by split point,
    left catalog, right catalog).
    """
    if k < 1:
        raise InputError("a parenthesization needs at least one leaf")
    if max_depth is None:
        max_depth = k - 1
    return tuple(Parenthesization(s) for s in _shape_catalog(k, max_depth))


def eval_parenthesized(t: CayleyTable, s: Sequence[int], p: Parenthesization) -> int:
    """Fold the table operation over the tree bottom-up."""
    if len(s) == 0:
        raise InputError("empty element sequence")
    if p.num_leaves != len(s):
        raise InputError(f"tree has {p.num_leaves} leaves but sequence has {len(s)} elements")
    n = t.n
    for e in s:
        if not (0 <= e < n):
            raise InputError(f"element {e} out of range 0..{n - 1}")
    rows = t.rows

    def ev(shape: Shape) -> int:
        if isinstance(shape, int):
            return s[shape]
        return rows[ev(shape[0])][ev(shape[1])]

    return ev(p.shape)


# ---------------------------------------------------------------------------
# Cubes
# ---------------------------------------------------------------------------


def cube_eval(t: CayleyTable, s: Sequence[int], p: Parenthesization, eps: Sequence[int]) -> int:
    """Evaluate p over s with positions i >= 1 having eps[i-1] == 0 deleted.

    A subtree whose leaves are all deleted contributes nothing; an internal
    node with one empty child passes through the other child's value.
    Position 0 always survives, so the result is always an element.
    """
    if len(s) == 0:
        raise InputError("empty element sequence")
    if p.num_leaves != len(s):
        raise InputError(f"tree has {p.num_leaves} leaves but sequence has {len(s)} elements")
    if len(eps) != len(s) - 1:
        raise InputError(f"cube index of length {len(eps)}, expected {len(s) - 1}")
    rows = t.rows

    def ev(shape: Shape) -> int | None:
        if isinstance(shape, int):
            if shape == 0:
                return s[0]
            return s[shape] if eps[shape - 1] else None
        a = ev(shape[0])
        b = ev(shape[1])
        if a is None:
            return b
        if b is None:
            return a
        return rows[a][b]

    value = ev(p.shape)
    assert value is not None
    return value


def cube_set(
    t: CayleyTable,
    s: Sequence[int],
    p: Parenthesization,
    budget: int = DEFAULT_CUBE_BUDGET,
) -> ElementSet:
    """The set of cube_eval values over all 2^k inclusion choices.

    Computed by a per-subtree value-set recursion: inclusion choices of
    distinct leaves are independent, so the value set of a node is exactly
    the combination of its children's value sets.  Equivalent to (and tested
    against) direct enumeration of all 2^k indices, but polynomial in n.
    """
    k = len(s) - 1
    if k > budget:
        raise BudgetError(f"cube sequence of length {len(s)} exceeds budget k <= {budget}")
    if p.num_leaves != len(s):
        raise InputError(f"tree has {p.num_leaves} leaves but sequence has {len(s)} elements")
    rows = t.rows

    def ev(shape: Shape) -> tuple[set[int], bool]:
        # returns (possible values, can the subtree be entirely deleted)
        if isinstance(shape, int):
            if shape == 0:
                return {s[0]}, False
            return {s[shape]}, True
        left_vals, left_empty = ev(shape[0])
        right_vals, right_empty = ev(shape[1])
        vals = set()
        for a in left_vals:
            row = rows[a]
            for b in right_vals:
                vals.add(row[b])
        if left_empty:
            vals |= right_vals
        if right_empty:
            vals |= left_vals
        return vals, left_empty and right_empty

    values, _ = ev(p.shape)
    return ElementSet.of(t.n, values)


# ---------------------------------------------------------------------------
# Rings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RingTable:
    """A validated ring: additive group table, multiplicative monoid table."""

    add: CayleyTable
    mul: CayleyTable
    zero: int
    one: int
    neg: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.add.n

    def sub(self, x: int, y: int) -> int:
        return self.add.rows[x][self.neg[y]]


def validate_ring(add: CayleyTable, mul: CayleyTable) -> RingTable:
    """Check the ring axioms and locate zero, one and the negation map.

    Raises InputError naming the first failed axiom (with a witness triple
    for distributivity failures).
    """
    if add.n != mul.n:
        raise InputError(f"additive table has {add.n} elements, multiplicative {mul.n}")
    n = add.n
    if not is_associative(add):
        raise InputError("additive table is not associative")
    if not is_latin_square(add):
        raise InputError("additive table is not a group (not a Latin square)")
    for x in range(n):
        for y in range(x + 1, n):
            if add.rows[x][y] != add.rows[y][x]:
                raise InputError(f"not-abelian: {x}+{y} != {y}+{x}")
    zero = identity_of(add)
    if zero is None:  # unreachable for a finite group table
        raise InputError("additive table has no identity")
    if not is_associative(mul):
        raise InputError("multiplicative table is not associative")
    one = identity_of(mul)
    if one is None:
        raise InputError("no-one: multiplicative table has no two-sided identity")
    arows, mrows = add.rows, mul.rows
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mrows[a][arows[b][c]] != arows[mrows[a][b]][mrows[a][c]]:
                    raise InputError(f"distributivity-fail: left at ({a}, {b}, {c})")
                if mrows[arows[b][c]][a] != arows[mrows[b][a]][mrows[c][a]]:
                    raise InputError(f"distributivity-fail: right at ({a}, {b}, {c})")
    neg = []
    for x in range(n):
        y = add.rows[x].index(zero)
        neg.append(y)
    return RingTable(add=add, mul=mul, zero=zero, one=one, neg=tuple(neg))


def log2_ceil(n: int) -> int:
    """Smallest d with 2^d >= n."""
    if n < 1:
        raise InputError("log2_ceil needs a positive integer")
    return (n - 1).bit_length()


def group_rank_bound(n: int) -> int:
    """Generating-set size bound for a finite group of order n, floor at 1.

    Any finite group of order n has a generating set of at most log2(n)
    elements; the floor keeps the trivial group searchable under the
    empty-closure convention (its rank is 1).
    """
    return max(1, log2_ceil(n))
