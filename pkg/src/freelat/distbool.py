"""Free distributive lattices and free Boolean algebras over finite posets."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, NamedTuple, Sequence

from .errors import NotIrreducible, ParseError, WidthOverflow
from .lattice import FiniteLattice
from .order import GroundSet, Poset, SubsetFamily, bits, enumerate_filters, enumerate_ideals

DEFAULT_FD_CAP = 100_000
WORD_WIDTH = 62


@dataclass(frozen=True)
class SetSystem:
    """Named subsets of a ground set (the rows of a 0/1 matrix)."""

    ground: GroundSet
    sets: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sets", tuple(self.sets))
        seen = set()
        for name, mask in self.sets:
            if name in seen:
                raise ValueError(f"duplicate set name {name!r}")
            seen.add(name)
            if mask & ~self.ground.full:
                raise ValueError(f"set {name!r} is not a subset of the ground set")

    @classmethod
    def from_names(cls, ground: GroundSet | Sequence[str], sets: Mapping[str, str]) -> SetSystem:
        if not isinstance(ground, GroundSet):
            ground = GroundSet(tuple(ground))
        return cls(ground, tuple((k, ground.mask(v)) for k, v in sets.items()))

    def __getitem__(self, name: str) -> int:
        for k, m in self.sets:
            if k == name:
                return m
        raise KeyError(name)

    def matrix(self) -> list[list[int]]:
        return [[(m >> j) & 1 for j in range(len(self.ground))] for _, m in self.sets]

    def format_matrix(self) -> str:
        width = max([len(n) for n in self.ground.names] + [1])
        label = max([len(k) for k, _ in self.sets] + [0]) + 3
        head = " " * label + " ".join(n.rjust(width) for n in self.ground.names)
        rows = [head]
        for (name, _), row in zip(self.sets, self.matrix()):
            rows.append(f"{name} =".ljust(label) + " ".join(str(v).rjust(width) for v in row))
        return "\n".join(rows) + "\n"


class Atoms(NamedTuple):
    count: int
    classes: tuple[frozenset[str], ...]

    @property
    def size(self) -> int:
        return 1 << self.count


def boolean_atoms_of_sets(system: SetSystem) -> Atoms:
    """Group ground elements by their membership column; one class per atom."""
    classes: dict[tuple[int, ...], list[str]] = {}
    for j, name in enumerate(system.ground.names):
        col = tuple((m >> j) & 1 for _, m in system.sets)
        classes.setdefault(col, []).append(name)
    return Atoms(len(classes), tuple(frozenset(v) for v in classes.values()))


def _filter_generators_key(p: Poset, f: int) -> tuple[int, tuple[int, ...]]:
    gens = tuple(bits(p.minimal(f)))
    return (len(gens), gens)


def filter_name(p: Poset, f: int) -> str:
    """``∅`` or the minimal elements followed by an up-arrow, e.g. ``a,e↑``."""
    if not f:
        return "∅"
    return ",".join(p.ground.names_of(p.minimal(f))) + "↑"


def fb_atom_count(p: Poset) -> int:
    """Number of order filters of ``p``, the empty filter included."""
    return len(enumerate_filters(p))


def fb_size(p: Poset, width: int = WORD_WIDTH) -> int:
    t = fb_atom_count(p)
    if t > width:
        raise WidthOverflow(f"2^{t} does not fit in {width} bits")
    return 1 << t


def realize_fb(p: Poset) -> SetSystem:
    """One set per element: the filters that contain it.

    The ground set lists every filter, ordered by number of minimal elements
    and then by their positions, so that ``x <= y`` iff ``A_x`` is a subset
    of ``A_y`` and all columns are distinct.
    """
    filters = sorted(enumerate_filters(p).members, key=lambda f: _filter_generators_key(p, f))
    ground = GroundSet(tuple(filter_name(p, f) for f in filters))
    sets = []
    for i, name in enumerate(p.names):
        sets.append((f"A_{name}", sum(1 << j for j, f in enumerate(filters) if (f >> i) & 1)))
    return SetSystem(ground, tuple(sets))


def generation_probability(r: int, s: int) -> Fraction:
    """Chance that ``s`` uniformly random subsets of an ``r``-set generate its powerset.

    Exact; use ``float()`` for a decimal rendering.
    """
    if r < 1 or s < 0:
        raise ValueError("need r >= 1 and s >= 0")
    cols = 1 << s
    prob = Fraction(1)
    for i in range(1, r):
        prob *= Fraction(cols - i, cols)
        if not prob:
            break
    return prob


@dataclass(frozen=True)
class FreeDistributiveLattice:
    """``FD(P)`` as nonempty order ideals of the poset of nonempty filters of ``P``.

    ``filters`` lists the nonempty filters (ordered by reverse inclusion they
    form the free meet-semilattice).  Element ``k`` of ``lattice`` is the
    ideal ``ideals[k]``, a bitmask over positions in ``filters``.
    """

    poset: Poset
    filters: tuple[int, ...]
    ideals: tuple[int, ...]
    lattice: FiniteLattice
    embedding: Mapping[str, int]

    def __len__(self) -> int:
        return len(self.lattice)

    @property
    def names(self) -> tuple[str, ...]:
        return self.lattice.names

    def join_irreducibles_with_bottom(self) -> list[int]:
        lat = self.lattice
        return [lat.bottom] + fd_join_irreducibles(self)


def _fd_name(p: Poset, filters: Sequence[int], ideal: int, filter_order: Poset) -> str:
    terms = []
    for k in bits(filter_order.maximal(ideal)):
        gens = p.ground.names_of(p.minimal(filters[k]))
        t = "∧".join(gens)
        terms.append(t)
    if len(terms) == 1:
        return terms[0]
    return "∨".join(f"({t})" if "∧" in t else t for t in terms)


def free_distributive(p: Poset, cap: int = DEFAULT_FD_CAP) -> FreeDistributiveLattice:
    """Build ``FD(P)``; element names are the join of meets of generators they stand for."""
    fil = sorted(enumerate_filters(p).without_empty().members, key=lambda f: _filter_generators_key(p, f))
    g = GroundSet(tuple(filter_name(p, f) for f in fil))
    # reverse inclusion: F <= G iff G is a subset of F
    down = tuple(sum(1 << i for i, f in enumerate(fil) if f & h == h) for h in fil)
    meet_semilattice = Poset(g, down)
    ideals = enumerate_ideals(meet_semilattice, cap=cap).without_empty().members
    names = [_fd_name(p, fil, m, meet_semilattice) for m in ideals]
    lat = FiniteLattice.from_family(SubsetFamily(g, ideals), names)
    index = {m: k for k, m in enumerate(ideals)}
    emb = {}
    for i, x in enumerate(p.names):
        emb[x] = index[sum(1 << k for k, f in enumerate(fil) if (f >> i) & 1)]
    return FreeDistributiveLattice(p, tuple(fil), tuple(ideals), lat, emb)


def fd_join_irreducibles(fd: FreeDistributiveLattice) -> list[int]:
    lat = fd.lattice
    return [i for i in range(len(lat)) if len(lat.lower_covers(i)) == 1]


def fd_factor(fd: FreeDistributiveLattice, q: int | str) -> frozenset[str]:
    """Generators mapped to 1 by the two-element quotient attached to join irreducible ``q``."""
    lat = fd.lattice
    qi = lat.index(q) if isinstance(q, str) else q
    if len(lat.lower_covers(qi)) != 1:
        raise NotIrreducible(f"{lat.names[qi]} is not join irreducible")
    return frozenset(x for x, e in fd.embedding.items() if lat.leq(qi, e))


def parse_set_system(text: str) -> SetSystem:
    """Parse ``ground: a b c`` followed by ``Name: a c`` lines."""
    ground: GroundSet | None = None
    sets: list[tuple[str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or not key:
            raise ParseError(f"line {lineno}: expected 'name: elements'")
        if key == "ground":
            if ground is not None:
                raise ParseError(f"line {lineno}: duplicate 'ground:' line")
            try:
                ground = GroundSet(tuple(rest.split()))
            except ValueError as exc:
                raise ParseError(f"line {lineno}: {exc}") from None
            continue
        if ground is None:
            raise ParseError(f"line {lineno}: set before 'ground:' line")
        unknown = [n for n in rest.split() if n not in ground]
        if unknown:
            raise ParseError(f"line {lineno}: unknown element {unknown[0]!r}")
        sets.append((key, ground.mask(rest.split())))
    if ground is None:
        raise ParseError("missing 'ground:' line")
    try:
        return SetSystem(ground, tuple(sets))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


__all__ = [
    "SetSystem",
    "Atoms",
    "FreeDistributiveLattice",
    "free_distributive",
    "fd_join_irreducibles",
    "fd_factor",
    "fb_atom_count",
    "fb_size",
    "realize_fb",
    "boolean_atoms_of_sets",
    "generation_probability",
    "parse_set_system",
    "filter_name",
]
