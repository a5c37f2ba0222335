"""Join irreducibles, join-essential elements and the join core of a finite lattice."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import CapExceeded
from .implications import ClosureSystem, quasi_closure_with
from .lattice import FiniteLattice
from .order import GroundSet, SubsetFamily, bits, enumerate_ideals
from .presentations import PartialSemilattice, vee_ideals

DEFAULT_IDEAL_CAP = 1 << 20


@dataclass(frozen=True)
class JoinCoreReport:
    irreducibles: frozenset[str]
    essentials: frozenset[str]
    core: frozenset[str]
    witnesses: Mapping[str, frozenset[str]]

    def format(self, lat: FiniteLattice) -> str:
        order = {name: i for i, name in enumerate(lat.names)}

        def fmt(names: Iterable[str]) -> str:
            return "{" + ",".join(sorted(names, key=order.__getitem__)) + "}"

        lines = [
            f"join irreducibles: {fmt(self.irreducibles)}",
            f"join essentials:   {fmt(self.essentials)}",
            f"join core:         {fmt(self.core)}  ({len(self.core)} elements)",
        ]
        for a in sorted(self.witnesses, key=order.__getitem__):
            lines.append(f"  witness for {a}: {fmt(self.witnesses[a])}")
        return "\n".join(lines) + "\n"


def _irreducible_mask(lat: FiniteLattice) -> int:
    return sum(1 << i for i in range(len(lat)) if len(lat.lower_covers(i)) == 1)


def join_irreducibles(lat: FiniteLattice) -> frozenset[str]:
    """Nonzero elements with exactly one lower cover."""
    return frozenset(lat.names[i] for i in bits(_irreducible_mask(lat)))


class _JContext:
    """The closure system ``{J(a)}`` expressed over positions in ``J``."""

    def __init__(self, lat: FiniteLattice) -> None:
        self.lat = lat
        self.jpos = list(bits(_irreducible_mask(lat)))
        self.ground = GroundSet(tuple(lat.names[i] for i in self.jpos))
        self.poset = lat.poset.induced(_irreducible_mask(lat))
        # J(a) for every lattice element a, as a mask over J positions
        self.j_of = [
            sum(1 << k for k, q in enumerate(self.jpos) if lat.leq(q, a)) for a in range(len(lat))
        ]

    def sup(self, x: int) -> int:
        return self.lat.join_all(sum(1 << self.jpos[k] for k in bits(x)))

    def close(self, x: int) -> int:
        return self.j_of[self.sup(x)]

    def names(self, x: int) -> frozenset[str]:
        return frozenset(self.ground.names_of(x))


def natural_closure_system(lat: FiniteLattice) -> ClosureSystem:
    """``{J(a) : a in L}`` over the join irreducibles; closure is ``X -> J(join X)``."""
    ctx = _JContext(lat)
    return ClosureSystem(ctx.ground, SubsetFamily(ctx.ground, tuple(set(ctx.j_of))))


def _candidates(ctx: _JContext, exhaustive: bool, cap: int) -> Iterator[int]:
    if exhaustive:
        return iter(range(1 << len(ctx.jpos)))
    ideals = enumerate_ideals(ctx.poset, cap=cap)
    return iter(ideals.members)


def join_essentials(
    lat: FiniteLattice, exhaustive: bool = False, cap: int = DEFAULT_IDEAL_CAP
) -> dict[str, frozenset[str]]:
    """Map each join-essential element to one witness set ``K``.

    ``K`` is a subset of the join irreducibles below the element, quasiclosed
    but not closed, whose closure is ``J(a)``.  A non-atomic irreducible ``q``
    is witnessed by ``{q}``; for reducible elements a quasiclosed witness is
    necessarily an order ideal of ``J``, so only those are searched.  With
    ``exhaustive`` every subset of ``J`` is tried instead.
    """
    ctx = _JContext(lat)
    if exhaustive and len(ctx.jpos) > 24:
        raise CapExceeded(f"2^{len(ctx.jpos)} candidate subsets")
    found: dict[int, int] = {}
    if not exhaustive:
        # {q} is quasiclosed for every irreducible q, and not closed unless q is an atom
        for k, q in enumerate(ctx.jpos):
            if ctx.j_of[q] != 1 << k:
                found[q] = 1 << k
    irreducible = set(ctx.jpos)
    for k in _candidates(ctx, exhaustive, cap):
        a = ctx.sup(k)
        if a in found or k == ctx.j_of[a]:
            continue
        if not exhaustive and a in irreducible:
            continue
        if quasi_closure_with(k, ctx.close, cap=len(ctx.jpos)) == k:
            found[a] = k
    return {lat.names[a]: ctx.names(k) for a, k in sorted(found.items())}


def join_core(lat: FiniteLattice) -> JoinCoreReport:
    irr = join_irreducibles(lat)
    wit = join_essentials(lat)
    ess = frozenset(wit)
    return JoinCoreReport(irr, ess, irr | ess, wit)


def _antichains(poset, mask: int) -> Iterator[int]:
    elems = list(bits(mask))
    comparable = [poset.down[i] | poset.up[i] for i in range(len(poset))]
    stack = [(0, 0, mask)]
    while stack:
        k, chosen, allowed = stack.pop()
        if k == len(elems):
            yield chosen
            continue
        x = elems[k]
        stack.append((k + 1, chosen, allowed))
        if (allowed >> x) & 1:
            stack.append((k + 1, chosen | (1 << x), allowed & ~comparable[x]))


def induced_partial_semilattice(lat: FiniteLattice, q: Iterable[str] | int) -> PartialSemilattice:
    """The partial semilattice on ``Q`` whose defined joins are the suprema lying in ``Q``.

    Joins are recorded for antichains only; other subsets have the join of
    their maximal elements, which every order ideal already accounts for.
    """
    qmask = q if isinstance(q, int) else lat.poset.ground.mask(q)
    sub = lat.poset.induced(qmask)
    pos = {old: new for new, old in enumerate(bits(qmask))}
    joins = {}
    for ac in _antichains(lat.poset, qmask):
        if ac.bit_count() < 2:
            continue
        s = lat.join_all(ac)
        if (qmask >> s) & 1:
            joins[sum(1 << pos[i] for i in bits(ac))] = pos[s]
    return PartialSemilattice(sub, joins)


def presents_lattice(lat: FiniteLattice, q: Iterable[str] | int) -> bool:
    """Whether ``a -> {p in Q : p <= a}`` maps ``L`` isomorphically onto the vee-ideals of ``Q``.

    The empty vee-ideal is matched by the bottom of ``L`` when the bottom is
    not in ``Q``, and is otherwise the extra bottom that the free semilattice
    omits, so it is ignored on the ideal side.
    """
    qmask = q if isinstance(q, int) else lat.poset.ground.mask(q)
    ps = induced_partial_semilattice(lat, qmask)
    ideals = set(vee_ideals(ps).closed_sets.members)
    qpos = list(bits(qmask))

    def psi(a: int) -> int:
        return sum(1 << k for k, p in enumerate(qpos) if lat.leq(p, a))

    image = [psi(a) for a in range(len(lat))]
    if len(set(image)) != len(image):
        return False
    if set(image) | {0} != ideals | {0}:
        return False
    n = len(lat)
    return all(
        lat.leq(a, b) == (image[a] & image[b] == image[a]) for a in range(n) for b in range(n)
    )
