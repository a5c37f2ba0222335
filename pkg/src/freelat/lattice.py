"""Explicit finite lattices with validated join and meet tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import NotALattice
from .order import GroundSet, Poset, SubsetFamily, bits, build_poset, parse_poset


def _least(mask: int, p: Poset) -> int | None:
    """Position of the least element of ``mask`` in ``p``, or ``None``."""
    for u in bits(mask):
        if mask & ~p.up[u] == 0:
            return u
    return None


@dataclass(frozen=True)
class FiniteLattice:
    """A finite lattice given by its order; join/meet tables are derived.

    Raises :class:`NotALattice` when some pair lacks a least upper or greatest
    lower bound.
    """

    poset: Poset
    join_table: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    meet_table: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    bottom: int = field(init=False, repr=False, compare=False)
    top: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        p = self.poset
        n = len(p)
        if n == 0:
            raise NotALattice("a lattice has at least one element")
        dual = Poset(p.ground, p.up)
        jt = [[0] * n for _ in range(n)]
        mt = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                u = _least(p.up[i] & p.up[j], p)
                d = _least(p.down[i] & p.down[j], dual)
                if u is None or d is None:
                    names = p.names
                    which = "join" if u is None else "meet"
                    raise NotALattice(f"{names[i]} and {names[j]} have no {which}")
                jt[i][j] = jt[j][i] = u
                mt[i][j] = mt[j][i] = d
        object.__setattr__(self, "join_table", tuple(map(tuple, jt)))
        object.__setattr__(self, "meet_table", tuple(map(tuple, mt)))
        object.__setattr__(self, "bottom", _least(p.ground.full, p))
        object.__setattr__(self, "top", _least(p.ground.full, dual))

    @classmethod
    def from_covers(cls, names: Sequence[str], covers: Iterable[tuple[str, str]]) -> FiniteLattice:
        return cls(build_poset(names, covers))

    @classmethod
    def from_family(cls, family: SubsetFamily, names: Sequence[str] | None = None) -> FiniteLattice:
        """The family ordered by inclusion (it must form a lattice)."""
        ms = family.members
        if names is None:
            names = [family.ground.format(m) for m in ms]
        down = [sum(1 << i for i, x in enumerate(ms) if x & y == x) for y in ms]
        return cls(Poset(GroundSet(tuple(names)), tuple(down)))

    def __len__(self) -> int:
        return len(self.poset)

    @property
    def names(self) -> tuple[str, ...]:
        return self.poset.names

    def index(self, name: str) -> int:
        return self.poset.ground.position(name)

    def leq(self, i: int, j: int) -> bool:
        return bool((self.poset.down[j] >> i) & 1)

    def join(self, i: int, j: int) -> int:
        return self.join_table[i][j]

    def meet(self, i: int, j: int) -> int:
        return self.meet_table[i][j]

    def join_all(self, mask: int) -> int:
        """Join of the elements in ``mask``; the bottom for the empty mask."""
        acc = self.bottom
        for i in bits(mask):
            acc = self.join_table[acc][i]
        return acc

    def meet_all(self, mask: int) -> int:
        acc = self.top
        for i in bits(mask):
            acc = self.meet_table[acc][i]
        return acc

    def lower_covers(self, i: int) -> list[int]:
        p = self.poset
        return list(bits(p.maximal(p.down[i] & ~(1 << i))))

    def is_distributive(self) -> bool:
        n = len(self)
        j, m = self.join_table, self.meet_table
        return all(
            m[x][j[y][z]] == j[m[x][y]][m[x][z]]
            for x in range(n)
            for y in range(n)
            for z in range(n)
        )


def parse_lattice(text: str) -> FiniteLattice:
    return FiniteLattice(parse_poset(text))


def chain_lattice(n: int, names: Sequence[str] | None = None) -> FiniteLattice:
    names = list(names) if names is not None else [str(i) for i in range(n)]
    return FiniteLattice.from_covers(names, zip(names, names[1:]))


def boolean_lattice(atoms: Sequence[str]) -> FiniteLattice:
    """Subsets of ``atoms``; the element names concatenate the atoms, ``0`` is empty."""
    k = len(atoms)

    def name(m: int) -> str:
        return "".join(atoms[i] for i in bits(m)) or "0"

    names = [name(m) for m in range(1 << k)]
    covers = [(name(m), name(m | 1 << i)) for m in range(1 << k) for i in range(k) if not m >> i & 1]
    return FiniteLattice.from_covers(names, covers)


def m3() -> FiniteLattice:
    return FiniteLattice.from_covers(
        ["0", "p", "q", "r", "1"],
        [("0", "p"), ("0", "q"), ("0", "r"), ("p", "1"), ("q", "1"), ("r", "1")],
    )


def n5() -> FiniteLattice:
    return FiniteLattice.from_covers(
        ["0", "x", "y", "z", "1"],
        [("0", "x"), ("x", "z"), ("z", "1"), ("0", "y"), ("y", "1")],
    )
