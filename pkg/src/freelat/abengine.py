"""Enumerate closure systems as tables of disjoint compressed rows.

A row is a vector over the ground set with entries ``0``, ``1``, ``2`` (free)
and at most one linked group: one ``a`` (alpha) position and one or more
``b`` (beta) positions, meaning "if alpha is 1 then every beta is 1".
Implications are imposed one at a time; each imposition replaces a row by
disjoint rows whose union is exactly the members satisfying the implication.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterator, Sequence

from .errors import CapExceeded
from .implications import Implication, ImplicationFamily
from .order import GroundSet, SubsetFamily, bits, submasks

DEFAULT_ROW_CAP = 100_000
DEFAULT_EXPAND_CAP = 1 << 22


class Sym(IntEnum):
    ZERO = 0
    ONE = 1
    TWO = 2
    ALPHA = 3
    BETA = 4


_CHAR = {Sym.ZERO: "0", Sym.ONE: "1", Sym.TWO: "2", Sym.ALPHA: "a", Sym.BETA: "b"}
_FROM_CHAR = {v: k for k, v in _CHAR.items()} | {"α": Sym.ALPHA, "β": Sym.BETA}


@dataclass(frozen=True)
class CompressedRow:
    """One compressed row; ``alpha`` is a position or ``-1`` when there is no group."""

    width: int
    ones: int = 0
    twos: int = 0
    alpha: int = -1
    betas: int = 0

    def __post_init__(self) -> None:
        a = self.alpha_mask
        parts = (self.ones, self.twos, a, self.betas)
        if sum(p.bit_count() for p in parts) != (self.ones | self.twos | a | self.betas).bit_count():
            raise ValueError("row symbol masks overlap")
        if (self.ones | self.twos | a | self.betas) >> self.width:
            raise ValueError("row has positions outside its width")
        if (self.alpha >= 0) != bool(self.betas):
            raise ValueError("an alpha needs at least one beta and vice versa")

    @property
    def alpha_mask(self) -> int:
        return 1 << self.alpha if self.alpha >= 0 else 0

    @property
    def has_group(self) -> bool:
        return self.alpha >= 0

    @property
    def zeros(self) -> int:
        return ((1 << self.width) - 1) & ~(self.ones | self.twos | self.alpha_mask | self.betas)

    @classmethod
    def free(cls, width: int) -> CompressedRow:
        return cls(width, twos=(1 << width) - 1)

    @classmethod
    def from_symbols(cls, symbols: Sequence[Sym | str | int] | str) -> CompressedRow:
        """``CompressedRow.from_symbols("b a 0 2 b 2 2")``"""
        if isinstance(symbols, str):
            symbols = symbols.split()
        ones = twos = betas = 0
        alpha = -1
        for i, s in enumerate(symbols):
            sym = _FROM_CHAR[s] if isinstance(s, str) else Sym(s)
            if sym is Sym.ONE:
                ones |= 1 << i
            elif sym is Sym.TWO:
                twos |= 1 << i
            elif sym is Sym.BETA:
                betas |= 1 << i
            elif sym is Sym.ALPHA:
                if alpha >= 0:
                    raise ValueError("at most one alpha per row")
                alpha = i
        return cls(len(symbols), ones, twos, alpha, betas)

    @property
    def symbols(self) -> tuple[Sym, ...]:
        out = []
        for i in range(self.width):
            bit = 1 << i
            if self.ones & bit:
                out.append(Sym.ONE)
            elif self.twos & bit:
                out.append(Sym.TWO)
            elif i == self.alpha:
                out.append(Sym.ALPHA)
            elif self.betas & bit:
                out.append(Sym.BETA)
            else:
                out.append(Sym.ZERO)
        return tuple(out)

    def __str__(self) -> str:
        return " ".join(_CHAR[s] for s in self.symbols)

    def cardinality(self) -> int:
        free = 1 << self.twos.bit_count()
        if self.has_group:
            return free * ((1 << self.betas.bit_count()) + 1)
        return free

    def __iter__(self) -> Iterator[int]:
        heads = [self.ones]
        if self.has_group:
            heads = [self.ones | b for b in submasks(self.betas)]
            heads.append(self.ones | self.alpha_mask | self.betas)
        for head in heads:
            for t in submasks(self.twos):
                yield head | t

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, int):
            return False
        if x & self.ones != self.ones or x & self.zeros:
            return False
        return not (self.has_group and x & self.alpha_mask and self.betas & ~x)

    def force_one(self, mask: int) -> CompressedRow | None:
        """The subfamily of members containing ``mask`` (``None`` if empty)."""
        if mask & self.zeros:
            return None
        ones, twos, alpha, betas = self.ones, self.twos, self.alpha, self.betas
        if alpha >= 0 and mask >> alpha & 1:
            ones |= (1 << alpha) | betas
            alpha, betas = -1, 0
        hit = mask & betas
        if hit:
            betas &= ~hit
            ones |= hit
            if not betas:
                twos |= 1 << alpha
                alpha = -1
        hit = mask & twos
        twos &= ~hit
        ones |= hit
        return CompressedRow(self.width, ones, twos, alpha, betas)

    def force_zero(self, pos: int) -> CompressedRow | None:
        """The subfamily of members avoiding position ``pos`` (``None`` if empty)."""
        bit = 1 << pos
        if self.ones & bit:
            return None
        if self.twos & bit:
            return CompressedRow(self.width, self.ones, self.twos & ~bit, self.alpha, self.betas)
        if pos == self.alpha:
            return CompressedRow(self.width, self.ones, self.twos | self.betas)
        if self.betas & bit:
            return CompressedRow(self.width, self.ones, self.twos | (self.betas & ~bit))
        return self


@dataclass(frozen=True)
class RowTable:
    ground: GroundSet
    rows: tuple[CompressedRow, ...]

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[CompressedRow]:
        return iter(self.rows)

    def format(self) -> str:
        head = " ".join(self.ground.names)
        return head + "\n" + "".join(str(r) + "\n" for r in self.rows)


def impose(row: CompressedRow, imp: Implication) -> list[CompressedRow]:
    """Split ``row`` into disjoint rows covering exactly its members satisfying ``imp``."""
    need = imp.conclusion & ~imp.premise
    if not need or imp.premise & row.zeros or not need & ~row.ones:
        return [row]
    undetermined = imp.premise & ~row.ones
    if (
        not row.has_group
        and undetermined.bit_count() == 1
        and undetermined & row.twos
        and not need & row.zeros
    ):
        p = undetermined.bit_length() - 1
        betas = need & ~row.ones
        return [CompressedRow(row.width, row.ones, row.twos & ~(undetermined | betas), p, betas)]
    out = []
    cur: CompressedRow | None = row
    for u in bits(undetermined):
        assert cur is not None
        z = cur.force_zero(u)
        if z is not None:
            out.append(z)
        cur = cur.force_one(1 << u)
    assert cur is not None
    last = cur.force_one(need)
    if last is not None:
        out.append(last)
    return out


def run(sigma: ImplicationFamily, row_cap: int = DEFAULT_ROW_CAP) -> RowTable:
    """Impose the implications of ``sigma`` in order, starting from the all-free row."""
    rows = [CompressedRow.free(len(sigma.ground))]
    for imp in sigma.implications:
        nxt: list[CompressedRow] = []
        for row in rows:
            nxt.extend(impose(row, imp))
            if len(nxt) > row_cap:
                raise CapExceeded(f"more than {row_cap} rows")
        rows = nxt
    return RowTable(sigma.ground, tuple(rows))


def count(table: RowTable) -> int:
    return sum(r.cardinality() for r in table.rows)


def expand(table: RowTable, cap: int = DEFAULT_EXPAND_CAP) -> SubsetFamily:
    total = count(table)
    if total > cap:
        raise CapExceeded(f"{total} sets exceed the expansion cap {cap}")
    return SubsetFamily(table.ground, tuple(x for r in table.rows for x in r))


def parse_row_table(ground: GroundSet, text: str) -> RowTable:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            row = CompressedRow.from_symbols(line)
            if row.width != len(ground):
                raise ValueError("row width does not match the ground set")
            rows.append(row)
    return RowTable(ground, tuple(rows))
