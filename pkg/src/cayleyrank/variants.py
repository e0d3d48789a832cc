"""Independence testing and the five rank variants.

For a magma G and its subsets S:

* large rank  — least k such that every k-subset generates G
* upper rank  — largest independent set size
* intermediate rank — largest independent generating set size
* lower rank  — least generating set size (the ordinary rank)
* small rank  — largest k such that every k-subset is independent

They always satisfy small <= lower <= intermediate <= upper <= large.
All five are computed exactly from one pass over the subset lattice with
memoized closures, so the exhaustive path is capped by DEFAULT_VARIANT_LIMIT.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import (
    BudgetError,
    CayleyTable,
    ElementSet,
    ElementsLike,
    InputError,
    element_set,
    group_rank_bound,
    is_associative,
    is_latin_square,
)
from .membership import closure

DEFAULT_VARIANT_LIMIT = 12

VARIANTS = ("large", "upper", "intermediate", "lower", "small")


def is_independent(t: CayleyTable, s: ElementsLike) -> bool:
    """No element of s lies in the closure of the others (vacuous for empty s)."""
    s = element_set(t.n, s)
    return all(x not in closure(t, s.without(x)) for x in s)


@dataclass(frozen=True)
class _Survey:
    n: int
    generates: dict[int, bool]
    independent: dict[int, bool]


def _survey(t: CayleyTable, max_n: int) -> _Survey:
    n = t.n
    if n > max_n:
        raise BudgetError(f"exhaustive rank variants capped at n <= {max_n}, table has {n}")
    full = (1 << n) - 1
    closures: dict[int, int] = {}
    for size in range(n + 1):
        for cand in combinations(range(n), size):
            mask = 0
            for e in cand:
                mask |= 1 << e
            closures[mask] = closure(t, cand).mask
    generates = {mask: cl == full for mask, cl in closures.items()}
    independent = {}
    for mask in closures:
        ok = True
        rest = mask
        while rest:
            low = rest & -rest
            x = low.bit_length() - 1
            rest ^= low
            if (closures[mask ^ low] >> x) & 1:
                ok = False
                break
        independent[mask] = ok
    return _Survey(n=n, generates=generates, independent=independent)


def _masks_of_size(n: int, size: int):
    for cand in combinations(range(n), size):
        mask = 0
        for e in cand:
            mask |= 1 << e
        yield mask


def rank_variant(t: CayleyTable, variant: str, max_n: int = DEFAULT_VARIANT_LIMIT) -> int:
    """Exact value of one rank variant by exhaustive subset enumeration."""
    if variant not in VARIANTS:
        raise InputError(f"unknown rank variant {variant!r}; expected one of {VARIANTS}")
    sv = _survey(t, max_n)
    n = sv.n
    if variant == "lower":
        return min(mask.bit_count() for mask, g in sv.generates.items() if g)
    if variant == "upper":
        return max(mask.bit_count() for mask, ind in sv.independent.items() if ind)
    if variant == "intermediate":
        return max(
            mask.bit_count()
            for mask in sv.generates
            if sv.generates[mask] and sv.independent[mask]
        )
    if variant == "large":
        for k in range(n + 1):
            if all(sv.generates[mask] for mask in _masks_of_size(n, k)):
                return k
        raise AssertionError("the full set always generates")
    # small: all-independent is downward monotone, so take the last good k
    best = 0
    for k in range(1, n + 1):
        if all(sv.independent[mask] for mask in _masks_of_size(n, k)):
            best = k
        else:
            break
    return best


@dataclass(frozen=True)
class ChainReport:
    """The five variants in chain order plus the verdict that they are sorted."""

    small: int
    lower: int
    intermediate: int
    upper: int
    large: int
    ok: bool

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.small, self.lower, self.intermediate, self.upper, self.large)


def check_chain(t: CayleyTable, max_n: int = DEFAULT_VARIANT_LIMIT) -> ChainReport:
    """Compute all five variants and assert small <= lower <= intermediate
    <= upper <= large."""
    values = tuple(rank_variant(t, v, max_n) for v in ("small", "lower", "intermediate", "upper", "large"))
    ok = all(values[i] <= values[i + 1] for i in range(4))
    return ChainReport(*values, ok=ok)


def upper_rank(t: CayleyTable) -> int:
    """Largest independent set size, by size-ascending search with early stop.

    Valid for any magma: a superset of a dependent set is dependent, so once
    no independent set of some size exists, none larger exists either.  On
    groups this terminates within ceil(log2 n) + 1 sizes.  Closure results
    are cached by subset mask, so overlapping independence checks are cheap.
    """
    n = t.n
    cache: dict[int, int] = {}

    def closure_mask(mask: int) -> int:
        cached = cache.get(mask)
        if cached is None:
            cached = closure(t, ElementSet(n, mask)).mask
            cache[mask] = cached
        return cached

    def independent(cand: tuple[int, ...], mask: int) -> bool:
        return not any((closure_mask(mask ^ (1 << x)) >> x) & 1 for x in cand)

    best = 0
    for size in range(1, n + 1):
        found = False
        for cand in combinations(range(n), size):
            mask = 0
            for e in cand:
                mask |= 1 << e
            if independent(cand, mask):
                found = True
                break
        if not found:
            break
        best = size
    return best


def max_independent_bound_check(t: CayleyTable) -> bool:
    """Check that the largest independent set in a group has at most
    ceil(log2 n) elements.

    For n == 1 the bound is treated as vacuously satisfied: under the
    empty-closure convention the lone element forms an independent singleton,
    which is an artifact of that convention rather than a counterexample.
    A False return would falsify the coset-doubling argument and is treated
    as a bug by the test suite.
    """
    if not (is_associative(t) and is_latin_square(t)):
        raise InputError("table is not a group")
    if t.n == 1:
        return True
    return upper_rank(t) <= group_rank_bound(t.n)
