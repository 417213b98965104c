"""Finite quasigroups as Latin-square Cayley tables."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

MAX_QUASIGROUP_ORDER = 4


@dataclass(frozen=True)
class CayleyTable:
    order: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.table) != self.order or any(len(row) != self.order for row in self.table):
            raise ValueError(f"table is not {self.order}x{self.order}")
        if not self.is_latin():
            raise ValueError("table is not a Latin square")

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def is_latin(self) -> bool:
        symbols = set(range(self.order))
        rows_ok = all(set(row) == symbols for row in self.table)
        cols_ok = all({row[c] for row in self.table} == symbols for c in range(self.order))
        return rows_ok and cols_ok

    def is_commutative(self) -> bool:
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(self.order)
            for b in range(self.order)
        )


def enumerate_quasigroups(order: int) -> Iterator[CayleyTable]:
    """All Latin squares of the given order (row-major backtracking)."""
    if not 0 <= order <= MAX_QUASIGROUP_ORDER:
        raise ValueError(f"quasigroup enumeration supports order <= {MAX_QUASIGROUP_ORDER}")
    if order == 0:
        return
    cells = [[-1] * order for _ in range(order)]

    def fill(pos: int) -> Iterator[CayleyTable]:
        if pos == order * order:
            yield CayleyTable(order, tuple(tuple(row) for row in cells))
            return
        r, c = divmod(pos, order)
        used = set(cells[r][:c]) | {cells[i][c] for i in range(r)}
        for s in range(order):
            if s not in used:
                cells[r][c] = s
                yield from fill(pos + 1)
        cells[r][c] = -1

    yield from fill(0)


def zk_minus_table(k: int) -> CayleyTable:
    """``Z_k`` with ``a o b = (b - a) mod k``."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    return CayleyTable(k, tuple(tuple((b - a) % k for b in range(k)) for a in range(k)))
