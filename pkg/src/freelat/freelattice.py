"""Lattice terms over a poset and the word problem of the free lattice they generate."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import CapExceeded, TermSyntaxError, UnknownElement
from .order import Poset

DEFAULT_FL_CAP = 10_000


class Term:
    """Base class of lattice terms; instances are immutable and hashable."""

    __slots__ = ()

    def __str__(self) -> str:
        return self.format()

    def format(self, ascii: bool = False) -> str:
        raise NotImplementedError

    def size(self) -> int:
        raise NotImplementedError

    def generators(self) -> Iterator[str]:
        raise NotImplementedError


@dataclass(frozen=True, eq=True)
class Gen(Term):
    name: str

    def __hash__(self) -> int:
        return hash(self.name)

    def format(self, ascii: bool = False) -> str:
        return self.name

    def size(self) -> int:
        return 1

    def generators(self) -> Iterator[str]:
        yield self.name


@dataclass(frozen=True, eq=True)
class _Compound(Term):
    args: tuple[Term, ...]
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.args) < 2:
            raise ValueError(f"{type(self).__name__} needs at least two arguments")
        object.__setattr__(self, "_hash", hash((type(self).__name__, self.args)))

    def __hash__(self) -> int:
        return self._hash

    def size(self) -> int:
        return 1 + sum(a.size() for a in self.args)

    def generators(self) -> Iterator[str]:
        for a in self.args:
            yield from a.generators()

    def format(self, ascii: bool = False) -> str:
        sym = self._ascii if ascii else self._symbol
        parts = []
        for a in self.args:
            s = a.format(ascii)
            parts.append(f"({s})" if isinstance(a, _Compound) else s)
        return sym.join(parts)


@dataclass(frozen=True, eq=True)
class Join(_Compound):
    _symbol = "∨"
    _ascii = " v "

    def __hash__(self) -> int:
        return self._hash


@dataclass(frozen=True, eq=True)
class Meet(_Compound):
    _symbol = "∧"
    _ascii = " ^ "

    def __hash__(self) -> int:
        return self._hash


def _flatten(kind: type, terms: Sequence[Term]) -> Term:
    out: list[Term] = []
    for t in terms:
        for a in t.args if isinstance(t, kind) else (t,):  # type: ignore[attr-defined]
            if a not in out:
                out.append(a)
    if len(out) == 1:
        return out[0]
    return kind(tuple(out))


def join(*terms: Term) -> Term:
    """Join of ``terms`` with nested joins flattened and duplicates dropped."""
    return _flatten(Join, terms)


def meet(*terms: Term) -> Term:
    return _flatten(Meet, terms)


_TOKEN = re.compile(r"\s*(?:([()])|(\^|∧|&)|(∨|\|)|([A-Za-z0-9_]+))")


def _tokenize(s: str) -> list[str]:
    tokens = []
    pos = 0
    s = s.rstrip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise TermSyntaxError(f"unexpected character {s[pos:].lstrip()[:1]!r} at {pos}")
        paren, wedge, vee, ident = m.groups()
        if paren:
            tokens.append(paren)
        elif wedge:
            tokens.append("^")
        elif vee or ident == "v":
            tokens.append("v")
        else:
            tokens.append(ident)
        pos = m.end()
    return tokens


def parse_term(s: str, p: Poset | None = None) -> Term:
    """Parse ``term := atom | term 'v' term | term '^' term | '(' term ')'``.

    ``^`` binds tighter than ``v``.  The bare token ``v`` is always the join
    operator, so it cannot name a generator.  With ``p`` given, generator
    names are checked against the poset.
    """
    tokens = _tokenize(s)
    pos = 0

    def peek() -> str | None:
        return tokens[pos] if pos < len(tokens) else None

    def take() -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise TermSyntaxError("unexpected end of term")
        pos += 1
        return tokens[pos - 1]

    def atom() -> Term:
        tok = take()
        if tok == "(":
            t = expr()
            if take() != ")":
                raise TermSyntaxError("expected ')'")
            return t
        if tok in (")", "^", "v"):
            raise TermSyntaxError(f"unexpected {tok!r}")
        if p is not None and tok not in p.ground:
            raise UnknownElement(f"unknown generator {tok!r}")
        return Gen(tok)

    def conj() -> Term:
        parts = [atom()]
        while peek() == "^":
            take()
            parts.append(atom())
        return meet(*parts)

    def expr() -> Term:
        parts = [conj()]
        while peek() == "v":
            take()
            parts.append(conj())
        return join(*parts)

    if not tokens:
        raise TermSyntaxError("empty term")
    t = expr()
    if pos != len(tokens):
        raise TermSyntaxError(f"unexpected {tokens[pos]!r}")
    return t


class WordProblem:
    """Decides ``s <= t`` in the free lattice generated by a poset.

    Join on the left splits into all joinands; meet on the right into all
    meetands; a generator is below a join iff it is below some joinand; a
    meet is below a generator iff some meetand is; and a meet is below a join
    iff some meetand is below the join or the meet is below some joinand.
    """

    def __init__(self, poset: Poset) -> None:
        self.poset = poset
        self._memo: dict[tuple[Term, Term], bool] = {}

    def _check(self, t: Term) -> None:
        for g in t.generators():
            if g not in self.poset.ground:
                raise UnknownElement(f"unknown generator {g!r}")

    def leq(self, s: Term, t: Term) -> bool:
        self._check(s)
        self._check(t)
        return self._leq(s, t)

    def equal(self, s: Term, t: Term) -> bool:
        return self.leq(s, t) and self.leq(t, s)

    def _leq(self, s: Term, t: Term) -> bool:
        key = (s, t)
        r = self._memo.get(key)
        if r is not None:
            return r
        if s is t or s == t:
            r = True
        elif isinstance(s, Join):
            r = all(self._leq(a, t) for a in s.args)
        elif isinstance(t, Meet):
            r = all(self._leq(s, b) for b in t.args)
        elif isinstance(s, Gen):
            if isinstance(t, Gen):
                r = self.poset.leq(s.name, t.name)
            else:
                r = any(self._leq(s, b) for b in t.args)  # type: ignore[attr-defined]
        elif isinstance(t, Gen):
            r = any(self._leq(a, t) for a in s.args)  # type: ignore[attr-defined]
        else:
            r = any(self._leq(a, t) for a in s.args) or any(  # type: ignore[attr-defined]
                self._leq(s, b) for b in t.args  # type: ignore[attr-defined]
            )
        self._memo[key] = r
        return r

    def explain(self, s: Term, t: Term) -> tuple[bool, list[str]]:
        """Decide ``s <= t`` and return a top-down trace of the deciding subgoals."""
        self._check(s)
        self._check(t)
        lines: list[str] = []
        ok = self._explain(s, t, 0, lines)
        return ok, lines

    def _explain(self, s: Term, t: Term, depth: int, lines: list[str]) -> bool:
        ok = self._leq(s, t)
        rel = "≤" if ok else "≰"
        pad = "  " * depth
        head = f"{pad}{s} {rel} {t}"
        sub: list[tuple[Term, Term]] = []
        if isinstance(s, Join) or isinstance(t, Meet):
            pairs = [(a, t) for a in s.args] if isinstance(s, Join) else [(s, b) for b in t.args]  # type: ignore[attr-defined]
            rule = "(i)" if isinstance(s, Join) else "(ii)"
            if ok:
                lines.append(f"{head} by {rule}: " + ", ".join(f"{x} ≤ {y}" for x, y in pairs))
                sub = [(x, y) for x, y in pairs if not (isinstance(x, Gen) and isinstance(y, Gen))]
            else:
                bad = next((x, y) for x, y in pairs if not self._leq(x, y))
                lines.append(f"{head} by {rule}: {bad[0]} ≰ {bad[1]}")
                sub = [bad] if not (isinstance(bad[0], Gen) and isinstance(bad[1], Gen)) else []
        elif isinstance(s, Gen) and isinstance(t, Gen):
            lines.append(f"{head} in the poset")
        else:
            pairs = []
            if isinstance(s, Meet):
                pairs += [(a, t) for a in s.args]
            if isinstance(t, Join):
                pairs += [(s, b) for b in t.args]
            rule = " by (W)" if isinstance(s, Meet) and isinstance(t, Join) else ""
            if ok:
                good = next((x, y) for x, y in pairs if self._leq(x, y))
                lines.append(f"{head}{rule} since {good[0]} ≤ {good[1]}")
                sub = [good] if not (isinstance(good[0], Gen) and isinstance(good[1], Gen)) else []
            else:
                lines.append(f"{head}{rule} since " + ", ".join(f"{x} ≰ {y}" for x, y in pairs))
                sub = [(x, y) for x, y in pairs if not (isinstance(x, Gen) and isinstance(y, Gen))]
        for x, y in sub:
            self._explain(x, y, depth + 1, lines)
        return ok


@lru_cache(maxsize=32)
def _solver(p: Poset) -> WordProblem:
    return WordProblem(p)


def term_leq(s: Term, t: Term, p: Poset) -> bool:
    return _solver(p).leq(s, t)


def term_equal(s: Term, t: Term, p: Poset) -> bool:
    return _solver(p).equal(s, t)


@dataclass(frozen=True)
class GeneratedLattice:
    """A finite free lattice: representative terms and their order."""

    poset: Poset
    elements: tuple[Term, ...]
    down: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, i: int, j: int) -> bool:
        return bool((self.down[j] >> i) & 1)

    def generator(self, name: str) -> int:
        return self.elements.index(Gen(name))

    def as_poset(self) -> Poset:
        from .order import GroundSet

        return Poset(GroundSet(tuple(str(t) for t in self.elements)), self.down)

    def as_lattice(self):
        from .lattice import FiniteLattice

        return FiniteLattice(self.as_poset())


def _signature(wp: WordProblem, gens: Sequence[Term], t: Term) -> tuple[bool, ...]:
    return tuple(wp._leq(g, t) for g in gens) + tuple(wp._leq(t, g) for g in gens)


def generate_fl(p: Poset, cap: int = DEFAULT_FL_CAP) -> GeneratedLattice:
    """Close the generators under binary joins and meets, identifying equal terms.

    Elements appear in discovery order: generators first, then every new
    ``x v y`` / ``x ^ y`` with ``x`` older than ``y``.  Raises
    :class:`CapExceeded` once more than ``cap`` elements exist; the free
    lattice over a poset can be infinite.
    """
    if cap < len(p):
        raise ValueError("cap must be at least the number of generators")
    wp = WordProblem(p)
    gens: list[Term] = [Gen(x) for x in p.names]
    elems: list[Term] = list(gens)
    buckets: dict[tuple[bool, ...], list[int]] = {}
    for i, g in enumerate(elems):
        buckets.setdefault(_signature(wp, gens, g), []).append(i)

    def find(t: Term) -> int | None:
        for i in buckets.get(_signature(wp, gens, t), ()):
            e = elems[i]
            if wp._leq(e, t) and wp._leq(t, e):
                return i
        return None

    k = 1
    while k < len(elems):
        y = elems[k]
        for i in range(k):
            for op in (join, meet):
                cand = op(elems[i], y)
                if find(cand) is None:
                    elems.append(cand)
                    buckets.setdefault(_signature(wp, gens, cand), []).append(len(elems) - 1)
                    if len(elems) > cap:
                        raise CapExceeded(f"free lattice has more than {cap} elements")
        k += 1
    n = len(elems)
    down = tuple(sum(1 << i for i in range(n) if wp._leq(elems[i], elems[j])) for j in range(n))
    return GeneratedLattice(p, tuple(elems), down)


def fl_to_fd(t: Term, fd) -> int:
    """Evaluate ``t`` in a free distributive lattice (see :mod:`freelat.distbool`)."""
    lat = fd.lattice
    if isinstance(t, Gen):
        return fd.embedding[t.name]
    vals = [fl_to_fd(a, fd) for a in t.args]  # type: ignore[attr-defined]
    acc = vals[0]
    f = lat.join if isinstance(t, Join) else lat.meet
    for v in vals[1:]:
        acc = f(acc, v)
    return acc
