"""Command-line front end: ``freelat <subcommand> ...``.

Exit codes: 0 success, 2 parse error, 3 cap exceeded, 4 invalid structure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from . import abengine, distbool, freelattice, implications, joincore, presentations
from .dot import hasse_dot
from .errors import CapExceeded, CycleError, InvalidStructure, ParseError, UnknownElement
from .lattice import FiniteLattice, parse_lattice
from .order import DEFAULT_MAX_ELEMENTS, Poset, parse_poset

EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_INVALID = 4

FREE_KINDS = ("join-semilattice", "meet-semilattice", "lattice", "distributive", "boolean", "presented")
DOT_KINDS = ("poset", "lattice", "closure") + tuple(k for k in FREE_KINDS if k != "boolean")


@dataclass(frozen=True)
class Config:
    cap_elems: int = DEFAULT_MAX_ELEMENTS
    cap_fl: int = freelattice.DEFAULT_FL_CAP
    cap_rows: int = abengine.DEFAULT_ROW_CAP
    output: str = "text"

    def __post_init__(self) -> None:
        if min(self.cap_elems, self.cap_fl, self.cap_rows) <= 0:
            raise ValueError("caps must be positive")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _covers_text(p: Poset) -> str:
    lines = [f"{p.names[x]} < {p.names[y]}" for x, y in p.covers()]
    return "".join(line + "\n" for line in lines)


def _free_order(kind: str, text: str, cfg: Config) -> Poset:
    """The free object of ``kind`` as a poset of named elements."""
    if kind == "presented":
        pres = presentations.parse_presentation(text)
        return presentations.free_presented_semilattice(pres).order()
    p = parse_poset(text, max_elements=cfg.cap_elems)
    if kind == "join-semilattice":
        return presentations.free_join_semilattice(p).order()
    if kind == "meet-semilattice":
        return presentations.free_meet_semilattice(p).order()
    if kind == "lattice":
        return freelattice.generate_fl(p, cap=cfg.cap_fl).as_poset()
    if kind == "distributive":
        return distbool.free_distributive(p).lattice.poset
    raise ValueError(kind)


def cmd_closure(args, cfg: Config) -> str:
    sigma = implications.parse_implications(_read(args.file))
    table = abengine.run(sigma, row_cap=cfg.cap_rows)
    out = table.format() if cfg.output == "text" else ""
    return out + f"count: {abengine.count(table)}\n"


def cmd_free(args, cfg: Config) -> str:
    text = _read(args.file)
    if args.kind == "boolean":
        p = parse_poset(text, max_elements=cfg.cap_elems)
        t = distbool.fb_atom_count(p)
        return f"t={t}, size={1 << t}\n"
    order = _free_order(args.kind, text, cfg)
    if cfg.output == "dot":
        return hasse_dot(order, name=args.kind)
    out = f"{len(order)} elements\n"
    if cfg.output == "text":
        out += _covers_text(order)
    return out


def cmd_leq(args, cfg: Config) -> str:
    p = parse_poset(_read(args.file), max_elements=cfg.cap_elems)
    s = freelattice.parse_term(args.s, p)
    t = freelattice.parse_term(args.t, p)
    ok, trace = freelattice.WordProblem(p).explain(s, t)
    return ("true" if ok else "false") + "\n" + "".join(line + "\n" for line in trace)


def cmd_joincore(args, cfg: Config) -> str:
    lat = parse_lattice(_read(args.file))
    return joincore.join_core(lat).format(lat)


def cmd_base_reduce(args, cfg: Config) -> str:
    sigma = implications.parse_implications(_read(args.file))
    return implications.nonredundant_base(sigma).format()


def cmd_essentials(args, cfg: Config) -> str:
    sigma = implications.parse_implications(_read(args.file))
    fam = implications.essential_elements(sigma)
    return "".join(sigma.ground.format(m) + "\n" for m in fam)


def cmd_atoms(args, cfg: Config) -> str:
    system = distbool.parse_set_system(_read(args.file))
    atoms = distbool.boolean_atoms_of_sets(system)
    order = {n: i for i, n in enumerate(system.ground.names)}
    classes = sorted((sorted(c, key=order.__getitem__) for c in atoms.classes), key=lambda c: order[c[0]])
    out = f"t={atoms.count}, size={atoms.size}\n"
    out += "".join("{" + ",".join(c) + "}\n" for c in classes)
    if cfg.output == "text":
        out += system.format_matrix()
    return out


def cmd_genprob(args, cfg: Config) -> str:
    prob = distbool.generation_probability(args.r, args.s)
    return f"{float(prob):.4f} ({prob})\n"


def cmd_dot(args, cfg: Config) -> str:
    text = _read(args.file)
    if args.kind == "poset":
        order = parse_poset(text, max_elements=cfg.cap_elems)
    elif args.kind == "lattice":
        order = parse_lattice(text).poset
    elif args.kind == "closure":
        sigma = implications.parse_implications(text)
        system = implications.closure_system(sigma, cap=cfg.cap_rows)
        order = FiniteLattice.from_family(system.closed_sets).poset
    else:
        order = _free_order(args.kind, text, cfg)
    return hasse_dot(order, name=args.kind)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="freelat", description=__doc__.splitlines()[0])
    parser.add_argument("--cap-elems", type=int, default=Config.cap_elems, help="max poset elements")
    parser.add_argument("--cap-fl", type=int, default=Config.cap_fl, help="max free-lattice elements")
    parser.add_argument("--cap-rows", type=int, default=Config.cap_rows, help="max compressed rows")
    parser.add_argument("--format", choices=("text", "dot", "counts"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        return sp

    add("closure", cmd_closure, "compressed table and size of a closure system").add_argument("file")
    sp = add("free", cmd_free, "free object generated by a poset (or a presentation)")
    sp.add_argument("kind", choices=FREE_KINDS)
    sp.add_argument("file")
    sp = add("leq", cmd_leq, "decide s <= t in the free lattice over a poset")
    sp.add_argument("file")
    sp.add_argument("s")
    sp.add_argument("t")
    add("joincore", cmd_joincore, "join core of a finite lattice").add_argument("file")
    add("base-reduce", cmd_base_reduce, "nonredundant subfamily of implications").add_argument("file")
    add("essentials", cmd_essentials, "essential closed sets of an implication family").add_argument("file")
    add("atoms", cmd_atoms, "atoms of the Boolean algebra generated by a set system").add_argument("file")
    sp = add("genprob", cmd_genprob, "probability that s random subsets of an r-set generate its powerset")
    sp.add_argument("r", type=int)
    sp.add_argument("s", type=int)
    sp = add("dot", cmd_dot, "Hasse diagram in DOT format")
    sp.add_argument("kind", choices=DOT_KINDS)
    sp.add_argument("file")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = Config(args.cap_elems, args.cap_fl, args.cap_rows, args.format)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        out = args.func(args, cfg)
    except (ParseError, UnknownElement) as exc:
        print(f"freelat: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"freelat: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (CycleError, InvalidStructure, ValueError) as exc:
        print(f"freelat: invalid structure: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
