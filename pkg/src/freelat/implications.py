"""Implications, closure operators and closure systems."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import CapExceeded, NotClosed, ParseError
from .order import GroundSet, SubsetFamily, submasks

QUASI_CLOSURE_CAP = 20


@dataclass(frozen=True)
class Implication:
    premise: int
    conclusion: int

    def format(self, ground: GroundSet) -> str:
        lhs = " ".join(ground.names_of(self.premise)) or "()"
        rhs = " ".join(ground.names_of(self.conclusion)) or "()"
        return f"{lhs} -> {rhs}"


@dataclass(frozen=True)
class ImplicationFamily:
    ground: GroundSet
    implications: tuple[Implication, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "implications", tuple(self.implications))
        full = self.ground.full
        for imp in self.implications:
            if (imp.premise | imp.conclusion) & ~full:
                raise ValueError("implication references elements outside the ground set")

    @classmethod
    def from_names(
        cls, ground: GroundSet | Sequence[str], pairs: Iterable[tuple[Iterable[str], Iterable[str]]]
    ) -> ImplicationFamily:
        """``ImplicationFamily.from_names("abc", [("a", "b"), ("b c", "a")])``"""
        if not isinstance(ground, GroundSet):
            ground = GroundSet(tuple(ground))
        imps = tuple(Implication(ground.mask(a), ground.mask(b)) for a, b in pairs)
        return cls(ground, imps)

    def __len__(self) -> int:
        return len(self.implications)

    def __iter__(self):
        return iter(self.implications)

    def without(self, k: int) -> ImplicationFamily:
        imps = self.implications
        return ImplicationFamily(self.ground, imps[:k] + imps[k + 1 :])

    def format(self) -> str:
        return "".join(imp.format(self.ground) + "\n" for imp in self.implications)


@dataclass(frozen=True)
class ClosureSystem:
    ground: GroundSet
    closed_sets: SubsetFamily

    def __post_init__(self) -> None:
        members = set(self.closed_sets.members)
        if self.ground.full not in members:
            raise ValueError("a closure system must contain the full ground set")

    def __len__(self) -> int:
        return len(self.closed_sets)

    def __iter__(self):
        return iter(self.closed_sets)

    def closure(self, mask: int) -> int:
        """Intersection of all closed supersets of ``mask``."""
        out = self.ground.full
        for c in self.closed_sets:
            if c & mask == mask:
                out &= c
        return out


def _mask(ground: GroundSet, x) -> int:
    return x if isinstance(x, int) else ground.mask(x)


def is_sigma_closed(x, sigma: ImplicationFamily) -> bool:
    m = _mask(sigma.ground, x)
    return all(imp.premise & ~m or not imp.conclusion & ~m for imp in sigma.implications)


def closure(a, sigma: ImplicationFamily) -> int:
    """Least sigma-closed superset of ``a`` by forward chaining."""
    m = _mask(sigma.ground, a)
    pending = list(sigma.implications)
    changed = True
    while changed:
        changed = False
        rest = []
        for imp in pending:
            if imp.premise & ~m:
                rest.append(imp)
            elif imp.conclusion & ~m:
                m |= imp.conclusion
                changed = True
        pending = rest
    return m


def closure_system(sigma: ImplicationFamily, backend: str = "ab", cap: int | None = None) -> ClosureSystem:
    """All sigma-closed subsets.

    ``backend`` is ``"ab"`` (compressed rows, see :mod:`freelat.abengine`) or
    ``"brute"`` (filter all ``2^n`` subsets).
    """
    if backend == "brute":
        n = len(sigma.ground)
        if cap is not None and (1 << n) > cap:
            raise CapExceeded(f"2^{n} subsets exceed the cap {cap}")
        members = tuple(m for m in range(1 << n) if is_sigma_closed(m, sigma))
    elif backend == "ab":
        from .abengine import DEFAULT_ROW_CAP, expand, run

        table = run(sigma, row_cap=DEFAULT_ROW_CAP if cap is None else cap)
        members = expand(table).members
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return ClosureSystem(sigma.ground, SubsetFamily(sigma.ground, members))


def join_in_system(x, y, sigma: ImplicationFamily) -> int:
    mx, my = _mask(sigma.ground, x), _mask(sigma.ground, y)
    for m in (mx, my):
        if not is_sigma_closed(m, sigma):
            raise NotClosed(f"{sigma.ground.format(m)} is not closed")
    return closure(mx | my, sigma)


def quasi_closure_with(x: int, close: Callable[[int], int], cap: int = QUASI_CLOSURE_CAP) -> int:
    """Quasi-closure of ``x`` relative to an arbitrary closure operator ``close``.

    Repeats ``Y -> Y u U{close(Z) : Z <= Y, close(Z) != close(Y)}`` until stable.
    """
    y = x
    memo: dict[int, int] = {}

    def cl(z: int) -> int:
        c = memo.get(z)
        if c is None:
            c = memo[z] = close(z)
        return c

    while True:
        if y.bit_count() > cap:
            raise CapExceeded(f"quasi-closure of a {y.bit_count()}-set exceeds the cap {cap}")
        top = cl(y)
        nxt = y
        for z in submasks(y):
            c = cl(z)
            if c != top:
                nxt |= c
        if nxt == y:
            return y
        y = nxt


def quasi_closure(x, sigma: ImplicationFamily, cap: int = QUASI_CLOSURE_CAP) -> int:
    m = _mask(sigma.ground, x)
    return quasi_closure_with(m, lambda z: closure(z, sigma), cap)


def nonredundant_base(sigma: ImplicationFamily) -> ImplicationFamily:
    """Drop, in input order, every implication that the others already entail."""
    current = sigma
    k = 0
    while k < len(current):
        imp = current.implications[k]
        rest = current.without(k)
        if not imp.conclusion & ~closure(imp.premise, rest):
            current = rest
        else:
            k += 1
    return current


def essential_elements(sigma: ImplicationFamily) -> SubsetFamily:
    base = nonredundant_base(sigma)
    return SubsetFamily(sigma.ground, tuple(closure(imp.premise, base) for imp in base))


def parse_implications(text: str) -> ImplicationFamily:
    """Parse ``a b -> c d`` lines; an optional ``elements:`` line fixes the ground set.

    Without it the ground set is every name in order of first appearance.
    ``()`` denotes an empty side.
    """
    declared: list[str] | None = None
    rows: list[tuple[list[str], list[str], int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("elements:"):
            if declared is not None or rows:
                raise ParseError(f"line {lineno}: 'elements:' must come first and only once")
            declared = line[len("elements:") :].split()
            continue
        tokens = line.replace("->", " -> ").split()
        if tokens.count("->") != 1:
            raise ParseError(f"line {lineno}: expected exactly one '->'")
        k = tokens.index("->")
        lhs, rhs = tokens[:k], tokens[k + 1 :]
        sides = []
        for side in (lhs, rhs):
            if side == ["()"]:
                side = []
            elif not side:
                raise ParseError(f"line {lineno}: empty side must be written '()'")
            for name in side:
                if not name.replace("_", "").isalnum():
                    raise ParseError(f"line {lineno}: bad element name {name!r}")
            sides.append(side)
        rows.append((sides[0], sides[1], lineno))
    if declared is None:
        declared = []
        for lhs, rhs, _ in rows:
            for name in lhs + rhs:
                if name not in declared:
                    declared.append(name)
    try:
        ground = GroundSet(tuple(declared))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    imps = []
    for lhs, rhs, lineno in rows:
        unknown = [n for n in lhs + rhs if n not in ground]
        if unknown:
            raise ParseError(f"line {lineno}: unknown element {unknown[0]!r}")
        imps.append(Implication(ground.mask(lhs), ground.mask(rhs)))
    return ImplicationFamily(ground, tuple(imps))


__all__ = [
    "Implication",
    "ImplicationFamily",
    "ClosureSystem",
    "is_sigma_closed",
    "closure",
    "closure_system",
    "join_in_system",
    "quasi_closure",
    "quasi_closure_with",
    "nonredundant_base",
    "essential_elements",
    "parse_implications",
]
