"""Finite posets, order ideals and filters.

Subsets of a ground set are plain Python ints used as bit vectors: bit ``i``
is set iff the ``i``-th element of the :class:`GroundSet` is a member.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, CycleError, ParseError, UnknownElement

DEFAULT_MAX_ELEMENTS = 64

_NAME = re.compile(r"^[A-Za-z0-9_]+$")


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask``, ``mask`` itself first and ``0`` last."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class GroundSet:
    """An ordered list of distinct element names; position = bit index."""

    names: tuple[str, ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        index: dict[str, int] = {}
        for i, name in enumerate(names):
            if not isinstance(name, str) or not name:
                raise ValueError(f"element names must be nonempty strings, got {name!r}")
            if name in index:
                raise ValueError(f"duplicate element name {name!r}")
            index[name] = i
        object.__setattr__(self, "index", index)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self.index

    @property
    def full(self) -> int:
        return (1 << len(self.names)) - 1

    def position(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise UnknownElement(f"unknown element {name!r}") from None

    def mask(self, names: Iterable[str]) -> int:
        if isinstance(names, str):
            names = names.split()
        m = 0
        for name in names:
            m |= 1 << self.position(name)
        return m

    def names_of(self, mask: int) -> tuple[str, ...]:
        if mask >> len(self.names):
            raise UnknownElement(f"mask {mask:#x} has bits outside the ground set")
        return tuple(self.names[i] for i in bits(mask))

    def format(self, mask: int) -> str:
        return "{" + ",".join(self.names_of(mask)) + "}"


def canonical_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key for subsets: by size, then lexicographically by member positions."""
    return (mask.bit_count(), tuple(bits(mask)))


@dataclass(frozen=True)
class SubsetFamily:
    """A finite family of subsets of ``ground``, stored canonically sorted."""

    ground: GroundSet
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        full = self.ground.full
        ms = set(self.members)
        for m in ms:
            if m < 0 or m & ~full:
                raise UnknownElement(f"member {m:#x} is not a subset of the ground set")
        object.__setattr__(self, "members", tuple(sorted(ms, key=canonical_key)))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, mask: object) -> bool:
        return mask in set(self.members)

    def as_sets(self) -> list[frozenset[str]]:
        return [frozenset(self.ground.names_of(m)) for m in self.members]

    def complements(self) -> SubsetFamily:
        full = self.ground.full
        return SubsetFamily(self.ground, tuple(full & ~m for m in self.members))

    def without_empty(self) -> SubsetFamily:
        return SubsetFamily(self.ground, tuple(m for m in self.members if m))

    def __str__(self) -> str:
        return "{" + ", ".join(self.ground.format(m) for m in self.members) + "}"


@dataclass(frozen=True)
class Poset:
    """A finite partial order.

    ``down[i]`` is the bitmask of elements below or equal to element ``i``.
    Reflexivity, transitivity and antisymmetry are verified on construction.
    """

    ground: GroundSet
    down: tuple[int, ...]
    up: tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        n = len(self.ground)
        down = tuple(self.down)
        object.__setattr__(self, "down", down)
        if len(down) != n:
            raise ValueError("order table size does not match the ground set")
        up = [0] * n
        for i, d in enumerate(down):
            if not (d >> i) & 1:
                raise ValueError(f"order is not reflexive at {self.ground.names[i]!r}")
            if d >> n:
                raise UnknownElement("order references elements outside the ground set")
            for j in bits(d):
                if down[j] & ~d:
                    raise ValueError("order is not transitive")
                if j != i and (down[j] >> i) & 1:
                    raise CycleError(
                        f"antisymmetry violated by {self.ground.names[i]!r}"
                        f" and {self.ground.names[j]!r}"
                    )
                up[j] |= 1 << i
        object.__setattr__(self, "up", tuple(up))

    def __len__(self) -> int:
        return len(self.ground)

    @property
    def names(self) -> tuple[str, ...]:
        return self.ground.names

    def leq(self, x: str, y: str) -> bool:
        g = self.ground
        return bool((self.down[g.position(y)] >> g.position(x)) & 1)

    def leq_idx(self, i: int, j: int) -> bool:
        return bool((self.down[j] >> i) & 1)

    def downset(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.down[i]
        return out

    def upset(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.up[i]
        return out

    def minimal(self, mask: int) -> int:
        return sum(1 << i for i in bits(mask) if not (self.down[i] & mask) & ~(1 << i))

    def maximal(self, mask: int) -> int:
        return sum(1 << i for i in bits(mask) if not (self.up[i] & mask) & ~(1 << i))

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs ``(x, y)`` with ``x < y`` and nothing strictly between."""
        out = []
        for y, d in enumerate(self.down):
            for x in bits(d & ~(1 << y)):
                if (d & self.up[x]) == (1 << x) | (1 << y):
                    out.append((x, y))
        return sorted(out, key=lambda c: (c[1], c[0]))

    def linear_extension(self) -> list[int]:
        """Minimal elements first; ties broken by ground position."""
        return _topological(len(self), [(x, y) for x, y in self.covers()])

    def heights(self) -> list[int]:
        h = [0] * len(self)
        for y in self.linear_extension():
            for x in bits(self.down[y] & ~(1 << y)):
                h[y] = max(h[y], h[x] + 1)
        return h

    def induced(self, mask: int) -> Poset:
        idx = list(bits(mask))
        g = GroundSet(tuple(self.ground.names[i] for i in idx))
        pos = {old: new for new, old in enumerate(idx)}
        down = []
        for i in idx:
            down.append(sum(1 << pos[j] for j in bits(self.down[i] & mask)))
        return Poset(g, tuple(down))


def _topological(n: int, edges: Sequence[tuple[int, int]]) -> list[int]:
    succ: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    for x, y in edges:
        succ[x].append(y)
        indeg[y] += 1
    heap = [i for i in range(n) if indeg[i] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        x = heapq.heappop(heap)
        order.append(x)
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                heapq.heappush(heap, y)
    if len(order) != n:
        raise CycleError("the cover relation contains a directed cycle")
    return order


def build_poset(
    ground: GroundSet | Sequence[str],
    covers: Iterable[tuple[str, str]],
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> Poset:
    """Return the poset whose order is the reflexive-transitive closure of ``covers``.

    Each pair ``(x, y)`` states ``x < y``.  Pairs need not be irredundant.
    """
    if not isinstance(ground, GroundSet):
        ground = GroundSet(tuple(ground))
    n = len(ground)
    if n > max_elements:
        raise CapExceeded(f"{n} elements exceed the element cap {max_elements}")
    edges = []
    for x, y in covers:
        i, j = ground.position(x), ground.position(y)
        if i == j:
            raise CycleError(f"{x!r} cannot be strictly below itself")
        edges.append((i, j))
    order = _topological(n, edges)
    preds: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        preds[j].append(i)
    down = [1 << i for i in range(n)]
    for y in order:
        for x in preds[y]:
            down[y] |= down[x]
    return Poset(ground, tuple(down))


def poset_from_leq(ground: GroundSet | Sequence[str], leq) -> Poset:
    """Build a poset from a full order predicate ``leq(x, y)`` over names."""
    if not isinstance(ground, GroundSet):
        ground = GroundSet(tuple(ground))
    down = []
    for y in ground.names:
        down.append(ground.mask(x for x in ground.names if leq(x, y)))
    return Poset(ground, tuple(down))


def chain(n: int, prefix: str = "x") -> Poset:
    names = [f"{prefix}{i}" for i in range(n)]
    return build_poset(names, zip(names, names[1:]))


def antichain(n: int, prefix: str = "x") -> Poset:
    return build_poset([f"{prefix}{i}" for i in range(n)], [])


def dual(p: Poset) -> Poset:
    return Poset(p.ground, p.up)


def is_ideal(p: Poset, subset: Iterable[str] | int) -> bool:
    m = subset if isinstance(subset, int) else p.ground.mask(subset)
    if m >> len(p):
        raise UnknownElement("subset has elements outside the ground set")
    return p.downset(m) == m


def is_filter(p: Poset, subset: Iterable[str] | int) -> bool:
    m = subset if isinstance(subset, int) else p.ground.mask(subset)
    if m >> len(p):
        raise UnknownElement("subset has elements outside the ground set")
    return p.upset(m) == m


def _downsets(below: Sequence[int], ext: Sequence[int], cap: int | None) -> list[int]:
    # ``ext`` lists elements so that everything in below[x] precedes x; then
    # including x is legal iff its strict lower part is already included,
    # so every branch of the search ends in a distinct downset.
    n = len(ext)
    strict = [below[x] & ~(1 << x) for x in ext]
    out: list[int] = []
    stack = [(0, 0)]
    while stack:
        k, m = stack.pop()
        if k == n:
            out.append(m)
            if cap is not None and len(out) > cap:
                raise CapExceeded(f"more than {cap} downsets")
            continue
        stack.append((k + 1, m))
        if strict[k] & ~m == 0:
            stack.append((k + 1, m | (1 << ext[k])))
    return out


def enumerate_ideals(p: Poset, cap: int | None = None) -> SubsetFamily:
    """All order ideals of ``p``, including the empty set and ``p`` itself."""
    return SubsetFamily(p.ground, tuple(_downsets(p.down, p.linear_extension(), cap)))


def enumerate_filters(p: Poset, cap: int | None = None) -> SubsetFamily:
    """All order filters of ``p``, including the empty set and ``p`` itself."""
    ext = p.linear_extension()[::-1]
    return SubsetFamily(p.ground, tuple(_downsets(p.up, ext, cap)))


def parse_poset(text: str, max_elements: int = DEFAULT_MAX_ELEMENTS) -> Poset:
    """Parse the ``elements:`` / ``covers:`` text format."""
    names: list[str] | None = None
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("elements", "covers"):
            raise ParseError(f"line {lineno}: expected 'elements:' or 'covers:'")
        if key == "elements":
            if names is not None:
                raise ParseError(f"line {lineno}: duplicate 'elements:' line")
            names = rest.split()
            for name in names:
                if not _NAME.match(name):
                    raise ParseError(f"line {lineno}: bad element name {name!r}")
            continue
        if names is None:
            raise ParseError(f"line {lineno}: 'covers:' before 'elements:'")
        for tok in rest.split():
            parts = tok.split("<")
            if len(parts) < 2 or not all(parts):
                raise ParseError(f"line {lineno}: bad cover token {tok!r}")
            pairs.extend(zip(parts, parts[1:]))
    if names is None:
        raise ParseError("missing 'elements:' line")
    try:
        ground = GroundSet(tuple(names))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return build_poset(ground, pairs, max_elements=max_elements)


def format_poset(p: Poset) -> str:
    lines = ["elements: " + " ".join(p.names)]
    cov = [f"{p.names[x]}<{p.names[y]}" for x, y in p.covers()]
    if cov:
        lines.append("covers: " + " ".join(cov))
    return "\n".join(lines) + "\n"
