"""Text format for Cayley tables and rings.

Table files::

    magma <n>        # or semigroup|quasigroup|group as an unchecked hint
    <n rows of n whitespace-separated indices>

Ring files::

    ring <n>
    <n rows of the additive table>
    *
    <n rows of the multiplicative table>

Lines whose first non-blank character is ``#`` are comments; blank lines are
ignored.  Element names are not part of the format; indices only.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .core import CayleyTable, InputError

TABLE_KINDS = ("magma", "semigroup", "quasigroup", "group")


@dataclass(frozen=True)
class LoadedTable:
    hint: str
    table: CayleyTable


@dataclass(frozen=True)
class LoadedRing:
    add: CayleyTable
    mul: CayleyTable


def _content_lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append(stripped)
    return out


def _parse_row(line: str, n: int, lineno: int) -> tuple[int, ...]:
    parts = line.split()
    if len(parts) != n:
        raise InputError(f"row {lineno}: expected {n} entries, got {len(parts)}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise InputError(f"row {lineno}: non-integer entry in {line!r}") from exc


def parse(text: str) -> LoadedTable | LoadedRing:
    lines = _content_lines(text)
    if not lines:
        raise InputError("empty input")
    header = lines[0].split()
    if len(header) != 2:
        raise InputError(f"bad header {lines[0]!r}: expected '<kind> <n>'")
    kind, raw_n = header
    try:
        n = int(raw_n)
    except ValueError as exc:
        raise InputError(f"bad element count {raw_n!r}") from exc
    if n < 1:
        raise InputError(f"element count must be positive, got {n}")
    body = lines[1:]
    if kind == "ring":
        if len(body) != 2 * n + 1:
            raise InputError(f"ring file needs {2 * n + 1} content lines after the header")
        if body[n] != "*":
            raise InputError("ring file: expected a '*' separator between the two tables")
        add = CayleyTable(tuple(_parse_row(body[i], n, i + 1) for i in range(n)))
        mul = CayleyTable(tuple(_parse_row(body[n + 1 + i], n, n + 2 + i) for i in range(n)))
        return LoadedRing(add=add, mul=mul)
    if kind not in TABLE_KINDS:
        raise InputError(f"unknown structure kind {kind!r}")
    if len(body) != n:
        raise InputError(f"expected {n} rows, got {len(body)}")
    table = CayleyTable(tuple(_parse_row(body[i], n, i + 1) for i in range(n)))
    return LoadedTable(hint=kind, table=table)


def load(path: str | os.PathLike) -> LoadedTable | LoadedRing:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def format_table(t: CayleyTable, hint: str = "magma", comment: str | None = None) -> str:
    if hint not in TABLE_KINDS:
        raise InputError(f"unknown structure kind {hint!r}")
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"{hint} {t.n}")
    for row in t.rows:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def format_ring(add: CayleyTable, mul: CayleyTable, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"ring {add.n}")
    for row in add.rows:
        lines.append(" ".join(str(x) for x in row))
    lines.append("*")
    for row in mul.rows:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def save(path: str | os.PathLike, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
