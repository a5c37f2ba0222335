"""Finitely presented semilattices, free semilattices over posets, partial semilattices."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Mapping, Sequence

from .errors import InconsistentJoins, ParseError, UnknownElement
from .implications import ClosureSystem, Implication, ImplicationFamily, closure, closure_system
from .order import (
    GroundSet,
    Poset,
    SubsetFamily,
    bits,
    enumerate_filters,
    enumerate_ideals,
)

_CHECK_LIMIT = 512


@dataclass(frozen=True)
class SemilatticePresentation:
    """Generators plus relations ``(L, R)`` read as ``join(L) >= join(R)``."""

    ground: GroundSet
    relations: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "relations", tuple(self.relations))
        for lhs, rhs in self.relations:
            if not lhs or not rhs:
                raise ValueError("both sides of a semilattice relation must be nonempty")
            if (lhs | rhs) & ~self.ground.full:
                raise UnknownElement("relation references elements outside the ground set")

    @classmethod
    def from_names(
        cls, ground: GroundSet | Sequence[str], relations: Iterable[tuple[str, str]]
    ) -> SemilatticePresentation:
        if not isinstance(ground, GroundSet):
            ground = GroundSet(tuple(ground))
        return cls(ground, tuple((ground.mask(a), ground.mask(b)) for a, b in relations))

    @classmethod
    def of_poset(cls, p: Poset) -> SemilatticePresentation:
        """All relations ``x >= y`` holding in ``p``."""
        rels = [(1 << x, 1 << y) for x in range(len(p)) for y in bits(p.down[x])]
        return cls(p.ground, tuple(rels))


@dataclass(frozen=True)
class FiniteSemilattice:
    """A semilattice realised as a family of sets.

    The operation is ``close(x | y)``.  With ``reverse=False`` the order is
    inclusion and the operation is the join; with ``reverse=True`` (filter
    model of a free meet-semilattice) the order is reverse inclusion and the
    operation is the meet.
    """

    elements: SubsetFamily
    close: Callable[[int], int] = field(compare=False, repr=False)
    generators: Mapping[str, int] = field(compare=False, default_factory=dict)
    reverse: bool = False

    def __post_init__(self) -> None:
        members = self.elements.members
        if not members:
            raise ValueError("a semilattice needs at least one element")
        if len(members) <= _CHECK_LIMIT:
            present = set(members)
            for x, y in combinations(members, 2):
                if self.op(x, y) not in present:
                    raise ValueError("family is not closed under the semilattice operation")
        if self.absorbing not in set(members):
            raise ValueError("the operation of all elements is missing from the family")

    @property
    def ground(self) -> GroundSet:
        return self.elements.ground

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def op(self, x: int, y: int) -> int:
        return self.close(x | y)

    def leq(self, x: int, y: int) -> bool:
        if self.reverse:
            return x & y == y
        return x & y == x

    @property
    def absorbing(self) -> int:
        """The operation applied to all elements: the top of a join-semilattice,
        the bottom of a meet-semilattice."""
        acc = 0
        for m in self.elements.members:
            acc |= m
        return self.close(acc)

    def order(self) -> Poset:
        """The elements as a poset; names are the set renderings."""
        ms = self.elements.members
        g = GroundSet(tuple(self.ground.format(m) for m in ms))
        down = []
        for y in ms:
            down.append(sum(1 << i for i, x in enumerate(ms) if self.leq(x, y)))
        return Poset(g, tuple(down))


@dataclass(frozen=True)
class PartialSemilattice:
    """A poset with joins defined on designated subsets.

    ``defined_joins`` maps a bitmask ``X`` (two or more elements) to the
    position of ``join(X)``.  Singleton joins are implicit.
    """

    poset: Poset
    defined_joins: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        p = self.poset
        joins = dict(self.defined_joins)
        for x_mask, s in list(joins.items()):
            if not x_mask or x_mask & ~p.ground.full or not 0 <= s < len(p):
                raise UnknownElement("defined join references elements outside the poset")
            if x_mask.bit_count() == 1:
                if x_mask != 1 << s:
                    raise InconsistentJoins("the join of a singleton must be its element")
                del joins[x_mask]
                continue
            common_up = p.ground.full
            for x in bits(x_mask):
                common_up &= p.up[x]
            if not (common_up >> s) & 1:
                raise InconsistentJoins(
                    f"{p.names[s]} is not an upper bound of {p.ground.format(x_mask)}"
                )
            if common_up & ~p.up[s]:
                raise InconsistentJoins(
                    f"{p.names[s]} is not the least upper bound of {p.ground.format(x_mask)}"
                )
        object.__setattr__(self, "defined_joins", joins)
        self._saturate()

    def join_of(self, x_mask: int) -> int | None:
        if x_mask.bit_count() == 1:
            return x_mask.bit_length() - 1
        return self.defined_joins.get(x_mask)

    def _saturate(self) -> None:
        # join(X u Y) must agree with join({join X, join Y}) whenever all are defined
        items = list(self.defined_joins.items())
        items += [(1 << i, i) for i in range(len(self.poset))]
        for (x, sx), (y, sy) in combinations(items, 2):
            whole = self.join_of(x | y)
            if whole is None:
                continue
            pair = self.join_of((1 << sx) | (1 << sy))
            if pair is not None and pair != whole:
                names = self.poset.names
                raise InconsistentJoins(
                    f"join of {self.poset.ground.format(x | y)} is {names[whole]}"
                    f" but join of {names[sx]}, {names[sy]} is {names[pair]}"
                )

    def vee_closure(self, mask: int) -> int:
        """Smallest vee-ideal containing ``mask``."""
        p = self.poset
        m = p.downset(mask)
        changed = True
        while changed:
            changed = False
            for x, s in self.defined_joins.items():
                if x & m == x and not (m >> s) & 1:
                    m |= p.down[s]
                    changed = True
        return m

    def is_vee_ideal(self, mask: int) -> bool:
        if self.poset.downset(mask) != mask:
            return False
        return all(x & ~mask or (mask >> s) & 1 for x, s in self.defined_joins.items())


def sigma_of_relations(pres: SemilatticePresentation) -> ImplicationFamily:
    return ImplicationFamily(pres.ground, tuple(Implication(l, r) for l, r in pres.relations))


def free_presented_semilattice(pres: SemilatticePresentation, backend: str = "ab") -> FiniteSemilattice:
    """Closed sets of the relation implications, minus the empty set."""
    sigma = sigma_of_relations(pres)
    system = closure_system(sigma, backend=backend)
    gens = {name: closure(1 << i, sigma) for i, name in enumerate(pres.ground.names)}
    return FiniteSemilattice(
        system.closed_sets.without_empty(), lambda m: closure(m, sigma), gens
    )


def free_join_semilattice(p: Poset) -> FiniteSemilattice:
    """Nonempty order ideals under union; ``x`` generates its principal ideal."""
    gens = {name: p.down[i] for i, name in enumerate(p.names)}
    return FiniteSemilattice(enumerate_ideals(p).without_empty(), p.downset, gens)


def free_meet_semilattice(p: Poset) -> FiniteSemilattice:
    """Nonempty order filters; the meet is filter union, the order reverse inclusion."""
    gens = {name: p.up[i] for i, name in enumerate(p.names)}
    return FiniteSemilattice(enumerate_filters(p).without_empty(), p.upset, gens, reverse=True)


def vee_ideals(ps: PartialSemilattice) -> ClosureSystem:
    p = ps.poset
    members = tuple(m for m in enumerate_ideals(p) if ps.is_vee_ideal(m))
    return ClosureSystem(p.ground, SubsetFamily(p.ground, members))


def free_partial_semilattice(ps: PartialSemilattice) -> FiniteSemilattice:
    p = ps.poset
    gens = {name: p.down[i] for i, name in enumerate(p.names)}
    return FiniteSemilattice(vee_ideals(ps).closed_sets.without_empty(), ps.vee_closure, gens)


def parse_presentation(text: str) -> SemilatticePresentation:
    """Parse an ``elements:`` line followed by ``a b >= c d`` or ``g = b f`` lines."""
    names: list[str] | None = None
    rels: list[tuple[list[str], list[str], int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("elements:"):
            if names is not None:
                raise ParseError(f"line {lineno}: duplicate 'elements:' line")
            names = line[len("elements:") :].split()
            continue
        line = line.replace(">=", " >= ")
        tokens = line.split()
        ops = [t for t in tokens if t in (">=", "=")]
        if len(ops) != 1:
            raise ParseError(f"line {lineno}: expected exactly one '>=' or '='")
        k = tokens.index(ops[0])
        lhs, rhs = tokens[:k], tokens[k + 1 :]
        if not lhs or not rhs:
            raise ParseError(f"line {lineno}: both sides must name generators")
        rels.append((lhs, rhs, lineno))
        if ops[0] == "=":
            rels.append((rhs, lhs, lineno))
    if names is None:
        raise ParseError("missing 'elements:' line")
    try:
        ground = GroundSet(tuple(names))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    out = []
    for lhs, rhs, lineno in rels:
        for n in lhs + rhs:
            if n not in ground:
                raise ParseError(f"line {lineno}: unknown element {n!r}")
        out.append((ground.mask(lhs), ground.mask(rhs)))
    return SemilatticePresentation(ground, tuple(out))
