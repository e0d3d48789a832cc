"""Deterministic generators for test structures.

All randomness flows through an explicit seed; the same family, parameters and
seed always produce byte-identical tables.  The corpus_* registries below are
the canonical structure lists used by the experiment sweeps and the
acceptance suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import CayleyTable, InputError, RingTable, validate_ring


def gen_cyclic(n: int) -> CayleyTable:
    """The cyclic group Z/nZ under addition."""
    if n < 1:
        raise InputError("order must be positive")
    return CayleyTable(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def gen_elementary_abelian(k: int) -> CayleyTable:
    """(Z/2Z)^k with element i encoding the k-bit vector of i."""
    if k < 0:
        raise InputError("exponent must be nonnegative")
    n = 1 << k
    return CayleyTable(tuple(tuple(i ^ j for j in range(n)) for i in range(n)))


def gen_right_zero(n: int) -> CayleyTable:
    """The right zero semigroup: x*y = y for all x, y."""
    if n < 1:
        raise InputError("order must be positive")
    return CayleyTable(tuple(tuple(range(n)) for _ in range(n)))


def gen_paper_quasigroup() -> CayleyTable:
    """The smallest nonempty quasigroup that is not a group (order 3).

    With elements a, b, c = 0, 1, 2 it has a left identity a but no right
    identity, and is not associative: b*(a*b) = a while (b*a)*b = c.
    """
    return CayleyTable(((0, 1, 2), (2, 0, 1), (1, 2, 0)))


def gen_direct_product(t1: CayleyTable, t2: CayleyTable) -> CayleyTable:
    """Componentwise operation; element (i, j) encoded as i * t2.n + j."""
    n1, n2 = t1.n, t2.n
    rows = []
    for i1 in range(n1):
        for i2 in range(n2):
            row = []
            for j1 in range(n1):
                for j2 in range(n2):
                    row.append(t1.rows[i1][j1] * n2 + t2.rows[i2][j2])
            rows.append(tuple(row))
    return CayleyTable(tuple(rows))


def gen_random_latin_square(n: int, seed: int = 0) -> CayleyTable:
    """Random Latin square via seeded row-by-row completion.

    Each new row is a system of distinct representatives for the symbols
    still available in each column, found with randomized augmenting paths
    (the backtracking step).  A partial Latin rectangle always extends, so
    the construction never restarts.
    """
    if n < 1:
        raise InputError("order must be positive")
    rng = random.Random(seed)
    available = [set(range(n)) for _ in range(n)]  # symbols unused per column
    rows: list[list[int]] = []
    for _ in range(n):
        row: list[int | None] = [None] * n
        used_by: dict[int, int] = {}  # symbol -> column holding it in this row

        def assign(col: int, visited: set[int]) -> bool:
            choices = [s for s in available[col] if s not in visited]
            rng.shuffle(choices)
            for sym in choices:
                visited.add(sym)
                if sym not in used_by or assign(used_by[sym], visited):
                    used_by[sym] = col
                    row[col] = sym
                    return True
            return False

        cols = list(range(n))
        rng.shuffle(cols)
        for col in cols:
            if not assign(col, set()):  # cannot happen for Latin rectangles
                raise AssertionError("row completion failed")
        for col, sym in enumerate(row):
            available[col].discard(sym)
        rows.append([int(s) for s in row])
    return CayleyTable.from_rows(rows)


def gen_shuffled(t: CayleyTable, seed: int = 0) -> CayleyTable:
    """Relabel elements by a seeded permutation; isomorphic to the input."""
    n = t.n
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rows[perm[i]][perm[j]] = perm[t.rows[i][j]]
    return CayleyTable.from_rows(rows)


def gen_ring_modular(n: int) -> RingTable:
    """Z/nZ with addition and multiplication mod n."""
    if n < 1:
        raise InputError("order must be positive")
    add = CayleyTable(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))
    mul = CayleyTable(tuple(tuple((i * j) % n for j in range(n)) for i in range(n)))
    return validate_ring(add, mul)


def gen_ring_boolean_cube(k: int) -> RingTable:
    """(Z/2Z)^k with componentwise addition (xor) and multiplication (and)."""
    if k < 0:
        raise InputError("exponent must be nonnegative")
    n = 1 << k
    add = CayleyTable(tuple(tuple(i ^ j for j in range(n)) for i in range(n)))
    mul = CayleyTable(tuple(tuple(i & j for j in range(n)) for i in range(n)))
    return validate_ring(add, mul)


def gen_field_gf4() -> RingTable:
    """The field with four elements, polynomials over GF(2) mod x^2 + x + 1."""

    def mul2(a: int, b: int) -> int:
        prod = 0
        for bit in range(2):
            if (b >> bit) & 1:
                prod ^= a << bit
        if prod & 0b100:
            prod ^= 0b111  # reduce by x^2 + x + 1
        return prod

    add = CayleyTable(tuple(tuple(i ^ j for j in range(4)) for i in range(4)))
    mul = CayleyTable(tuple(tuple(mul2(i, j) for j in range(4)) for i in range(4)))
    return validate_ring(add, mul)


@dataclass(frozen=True)
class CorpusSpec:
    """A named, reproducible structure: family, size parameters, seed."""

    family: str
    params: tuple[int, ...] = ()
    seed: int = 0

    def build(self) -> CayleyTable | RingTable:
        fam, params = self.family, self.params
        if fam == "cyclic":
            return gen_cyclic(*params)
        if fam == "elementary-abelian":
            return gen_elementary_abelian(*params)
        if fam == "right-zero":
            return gen_right_zero(*params)
        if fam == "paper-quasigroup":
            return gen_paper_quasigroup()
        if fam == "latin":
            return gen_random_latin_square(params[0], seed=self.seed)
        if fam == "ring-modular":
            return gen_ring_modular(*params)
        if fam == "ring-boolean-cube":
            return gen_ring_boolean_cube(*params)
        if fam == "gf4":
            return gen_field_gf4()
        raise InputError(f"unknown corpus family {fam!r}")

    def name(self) -> str:
        bits = [self.family] + [str(p) for p in self.params]
        if self.family == "latin":
            bits.append(f"seed{self.seed}")
        return "-".join(bits)


def corpus_groups(max_n: int) -> list[tuple[str, CayleyTable]]:
    """Named group tables with 2 <= n <= max_n: cyclics, elementary abelians,
    direct products and shuffled copies."""
    out: list[tuple[str, CayleyTable]] = []
    for n in range(2, max_n + 1):
        out.append((f"cyclic-{n}", gen_cyclic(n)))
    for k in range(1, 5):
        if (1 << k) <= max_n:
            out.append((f"elementary-abelian-{k}", gen_elementary_abelian(k)))
    products = [
        ("C2xC3", 2, 3),
        ("C2xC4", 2, 4),
        ("C3xC3", 3, 3),
        ("C2xC5", 2, 5),
        ("C2xC6", 2, 6),
        ("C3xC4", 3, 4),
        ("C3xC5", 3, 5),
        ("C4xC4", 4, 4),
        ("C2xC8", 2, 8),
    ]
    for name, a, b in products:
        if a * b <= max_n:
            out.append((name, gen_direct_product(gen_cyclic(a), gen_cyclic(b))))
    if 12 <= max_n:
        t = gen_direct_product(gen_cyclic(2), gen_direct_product(gen_cyclic(2), gen_cyclic(3)))
        out.append(("C2xC2xC3", t))
    shuffles = [("cyclic-6", gen_cyclic(6), 1), ("cyclic-8", gen_cyclic(8), 2)]
    if 16 <= max_n:
        shuffles.append(("elementary-abelian-4", gen_elementary_abelian(4), 3))
    for base_name, base, seed in shuffles:
        if base.n <= max_n:
            out.append((f"shuffled-{base_name}-s{seed}", gen_shuffled(base, seed=seed)))
    return out


def corpus_quasigroups(max_n: int) -> list[tuple[str, CayleyTable]]:
    """Named Latin-square tables with n <= max_n (groups are quasigroups)."""
    out: list[tuple[str, CayleyTable]] = []
    if max_n >= 3:
        out.append(("paper-quasigroup", gen_paper_quasigroup()))
        out.append(("shuffled-paper-quasigroup", gen_shuffled(gen_paper_quasigroup(), seed=5)))
    for n in range(1, max_n + 1):
        out.append((f"cyclic-{n}", gen_cyclic(n)))
    for k in (1, 2):
        if (1 << k) <= max_n:
            out.append((f"elementary-abelian-{k}", gen_elementary_abelian(k)))
    for n in range(3, max_n + 1):
        for seed in (0, 1, 2):
            out.append((f"latin-{n}-s{seed}", gen_random_latin_square(n, seed=seed)))
    if max_n >= 5:
        out.append(("shuffled-latin-5-s0", gen_shuffled(gen_random_latin_square(5, seed=0), seed=7)))
    return out


def corpus_structures(max_n: int) -> list[tuple[str, CayleyTable]]:
    """The full mixed corpus: groups, semigroups, quasigroups, Latin squares."""
    out: list[tuple[str, CayleyTable]] = [("trivial", gen_cyclic(1))]
    out.extend(corpus_groups(max_n))
    for n in range(1, min(max_n, 8) + 1):
        out.append((f"right-zero-{n}", gen_right_zero(n)))
    seen = {name for name, _ in out}
    for name, t in corpus_quasigroups(max_n):
        if name not in seen:
            out.append((name, t))
            seen.add(name)
    return out


def corpus_rings(max_n: int) -> list[tuple[str, RingTable]]:
    """Named rings with n <= max_n: modular rings, boolean cubes, GF(4)."""
    out: list[tuple[str, RingTable]] = []
    for n in range(1, max_n + 1):
        out.append((f"ring-modular-{n}", gen_ring_modular(n)))
    for k in range(1, 5):
        if (1 << k) <= max_n:
            out.append((f"ring-boolean-cube-{k}", gen_ring_boolean_cube(k)))
    if max_n >= 4:
        out.append(("gf4", gen_field_gf4()))
    return out
