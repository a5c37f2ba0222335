"""Acceptance gate: one check per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (the lines are repeated in the
terminal summary) or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
from itertools import product
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from freelat.abengine import count, expand, run  # noqa: E402
from freelat.catalog import RUNNING_RELATIONS, FOUR_SETS_GROUND, FOUR_SETS, TOY_ELEMENTS, running_implications, toy_poset  # noqa: E402
from freelat.distbool import (  # noqa: E402
    SetSystem,
    boolean_atoms_of_sets,
    fb_atom_count,
    fb_size,
    fd_factor,
    free_distributive,
    generation_probability,
    realize_fb,
)
from freelat.freelattice import Gen, WordProblem, join, meet, generate_fl, parse_term, term_leq  # noqa: E402
from freelat.implications import Implication, ImplicationFamily, closure, quasi_closure  # noqa: E402
from freelat.joincore import join_core, join_essentials, presents_lattice  # noqa: E402
from freelat.lattice import boolean_lattice, chain_lattice, m3, n5  # noqa: E402
from freelat.order import GroundSet, build_poset, enumerate_filters, enumerate_ideals  # noqa: E402
from freelat.presentations import (  # noqa: E402
    SemilatticePresentation,
    free_join_semilattice,
    free_meet_semilattice,
    free_presented_semilattice,
)
from test_joincore import _presents_by_brute_force, essentials_oracle, running_closure_lattice  # noqa: E402

RESULTS: dict[int, str] = {}


def report(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def _imps(sigma):
    return [(i.premise, i.conclusion) for i in sigma]


def test_01_closure_count():
    sigma = running_implications()
    got = count(run(sigma))
    brute = len(oracles.closed_sets(7, _imps(sigma)))
    report(1, got == brute == 11, f"ab-engine {got}, brute force {brute}, expected 11")


def test_02_row_fidelity():
    sigma = running_implications()
    g = sigma.ground
    table = run(sigma)
    family = set(expand(table).members)
    brute = oracles.closed_sets(7, _imps(sigma))
    first = {m for m in table.rows[0]}
    five = {g.mask(s) for s in ["", "a", "e", "a e", "a b e"]}
    ok = family == brute and len(family) == 11 and first == five
    report(2, ok, f"expanded family = closed sets: {family == brute}; first row gives {len(first)} sets as listed: {first == five}")


def test_03_free_semilattices():
    p = toy_poset()
    j, m = len(free_join_semilattice(p)), len(free_meet_semilattice(p))
    ni, nf = len(enumerate_ideals(p)), len(enumerate_filters(p))
    report(3, j == m == 13 and ni == nf == 14, f"join {j}, meet {m} (ideals {ni}, filters {nf})")


def test_04_presented():
    a = len(free_presented_semilattice(SemilatticePresentation.from_names(TOY_ELEMENTS, RUNNING_RELATIONS)))
    b = len(free_presented_semilattice(SemilatticePresentation.from_names("abc", [("a", "b"), ("b", "c"), ("c", "a")])))
    report(4, a == 10 and b == 1, f"presented {a} (expected 10), collapse {b} (expected 1)")


def test_05_free_lattice():
    p = toy_poset()
    size = len(generate_fl(p, cap=100))
    s, t = parse_term("b v (c ^ f)", p), parse_term("c ^ (a v f)", p)
    ok_leq, trace = WordProblem(p).explain(s, t)
    subgoal = "b ≰ a∨f since b ≰ a, b ≰ f"
    ok = size == 35 and not ok_leq and not term_leq(s, t, p) and any(l.strip() == subgoal for l in trace)
    report(5, ok, f"|FL| = {size}; inequality decided {ok_leq}; failing subgoal in trace: {subgoal in ' '.join(trace)}")


def test_06_free_distributive():
    fd = free_distributive(toy_poset())
    lat = fd.lattice
    n = len(lat)
    dist = all(
        lat.meet(x, lat.join(y, z)) == lat.join(lat.meet(x, y), lat.meet(x, z))
        for x, y, z in product(range(n), repeat=3)
    )
    j0 = fd.join_irreducibles_with_bottom()
    closed = all(lat.meet(x, y) in j0 for x in j0 for y in j0)
    factor = fd_factor(fd, "b")
    ok = n == 25 and dist and closed and factor == {"b", "c", "d", "g"}
    report(6, ok, f"|FD| = {n}; distributive on {n**3} triples: {dist}; J0 meet-closed: {closed}; factor(b) = {sorted(factor)}")


def test_07_free_boolean():
    p = toy_poset()
    t, size = fb_atom_count(p), fb_size(p)
    sys_ = realize_fb(p)
    mat = sys_.matrix()
    shape = (len(mat), len(mat[0]))
    cols = len({tuple(r[j] for r in mat) for j in range(shape[1])})
    emb = all(
        p.leq(x, y) == (sys_["A_" + x] & sys_["A_" + y] == sys_["A_" + x]) for x in p.names for y in p.names
    )
    ok = t == 14 and size == 16384 and shape == (7, 14) and cols == 14 and emb
    report(7, ok, f"t = {t}, size = {size}, matrix {shape[0]}x{shape[1]}, distinct columns {cols}, order embedding {emb}")


def test_08_atoms_from_sets():
    sys_ = SetSystem.from_names(FOUR_SETS_GROUND, FOUR_SETS)
    atoms = boolean_atoms_of_sets(sys_)
    brute = oracles.boolean_generated_atoms(9, [m for _, m in sys_.sets])
    report(8, atoms.count == brute == 6 and atoms.size == 64, f"t = {atoms.count} (closure oracle {brute}), size = {atoms.size}")


def _monte_carlo(r, s, samples, rng):
    bits = rng.integers(0, 2, size=(samples, s, r), dtype=np.uint8)
    codes = (bits * (1 << np.arange(s, dtype=np.int64))[None, :, None]).sum(axis=1)
    codes.sort(axis=1)
    return float((np.diff(codes, axis=1) != 0).all(axis=1).mean())


def test_09_probability():
    parts = []
    ok = True
    for r, want in [(5, 0.72), (10, 0.21)]:
        p = float(generation_probability(r, 5))
        freq = _monte_carlo(r, 5, 100_000, np.random.default_rng([2024, r]))
        se = (p * (1 - p) / 100_000) ** 0.5
        ok &= abs(p - want) <= 0.005 and abs(freq - p) <= 3 * se
        parts.append(f"r={r}: {p:.4f} vs {want}, sampled {freq:.4f} ({abs(freq - p) / se:.1f} se)")
    report(9, ok, "; ".join(parts))


def _core_catalog():
    lats = {f"chain{k}": chain_lattice(k, [chr(ord("a") + i) for i in range(k)]) for k in range(2, 6)}
    lats.update({"2^2": boolean_lattice("ab"), "2^3": boolean_lattice("abc"), "M3": m3(), "N5": n5(), "running": running_closure_lattice()})
    return lats


def test_10_join_core():
    cores = {
        "2^3": join_core(boolean_lattice("abc")).core == {"a", "b", "c"},
        "M3": join_core(m3()).core == {"p", "q", "r", "1"},
        "N5": join_core(n5()).core == {"x", "y", "z", "1"},
    }
    failures = []
    for name, lat in _core_catalog().items():
        oracle = {lat.names[a] for a in essentials_oracle(lat)}
        if set(join_essentials(lat)) != oracle:
            failures.append(f"{name}: essentials")
        core = join_core(lat).core
        if not (presents_lattice(lat, core) and _presents_by_brute_force(lat, core)):
            failures.append(f"{name}: core")
        for x in core:
            q = core - {x}
            if presents_lattice(lat, q) or _presents_by_brute_force(lat, q):
                failures.append(f"{name}: core without {x}")
    ok = all(cores.values()) and not failures
    report(10, ok, f"catalog cores {cores}; presentation checks over {len(_core_catalog())} lattices, failures {failures}")


def _random_sigma(rnd, n_max, k_max):
    n = rnd.randint(1, n_max)
    g = GroundSet(tuple(f"x{i}" for i in range(n)))
    imps = tuple(Implication(rnd.getrandbits(n), rnd.getrandbits(n)) for _ in range(rnd.randint(0, k_max)))
    return ImplicationFamily(g, imps)


def _random_poset(rnd, n):
    names = [f"p{i}" for i in range(n)]
    covers = [(i, j) for i in range(n) for j in range(i + 1, n) if rnd.random() < 0.35]
    return build_poset(names, [(names[i], names[j]) for i, j in covers]), covers


def _random_term(rnd, gens, depth):
    if depth == 0 or rnd.random() < 0.3:
        return Gen(rnd.choice(gens))
    a, b = _random_term(rnd, gens, depth - 1), _random_term(rnd, gens, depth - 1)
    return join(a, b) if rnd.random() < 0.5 else meet(a, b)


def _universal_ok(pres, t):
    sl = free_presented_semilattice(pres)
    n = len(pres.ground)
    for phi in product(range(t.n), repeat=n):
        def val(mask):
            return t.join_all(phi[i] for i in range(n) if (mask >> i) & 1)

        if not all(t.le[val(r)][val(l)] for l, r in pres.relations):
            continue
        if any(val(g) != phi[pres.ground.position(x)] for x, g in sl.generators.items()):
            return False
        if any(val(sl.op(x, y)) != t.jn[val(x)][val(y)] for x in sl.elements for y in sl.elements):
            return False
    return True


def test_11_property_suites():
    rnd = random.Random(2024)
    checks = {}

    ok = True
    for _ in range(100):
        sigma = _random_sigma(rnd, 7, 6)
        n = len(sigma.ground)
        for x in range(1 << n):
            c, q = closure(x, sigma), quasi_closure(x, sigma)
            ok &= c & x == x and closure(c, sigma) == c and q & x == x and q & ~c == 0 and quasi_closure(q, sigma) == q
            y = x | rnd.getrandbits(n)
            ok &= closure(y, sigma) & c == c
    checks["closure axioms"] = ok

    ok = True
    for _ in range(100):
        p, covers = _random_poset(rnd, rnd.randint(1, 8))
        ideals = enumerate_ideals(p)
        leq = oracles.transitive_leq(len(p), covers)
        ok &= set(ideals.complements().members) == set(enumerate_filters(p).members)
        ok &= set(ideals.members) == oracles.ideals(len(p), leq)
    checks["ideal/filter complements"] = ok

    ok = True
    for _ in range(200):
        sigma = _random_sigma(rnd, 12, 8)
        table = run(sigma)
        brute = oracles.closed_sets(len(sigma.ground), _imps(sigma))
        ok &= set(expand(table).members) == brute and count(table) == len(brute)
    checks["ab-engine vs brute force (200)"] = ok

    ok = True
    p = toy_poset()
    terms = [_random_term(rnd, p.names, 4) for _ in range(40)]
    for s in terms:
        ok &= term_leq(s, s, p)
    for s in terms[:20]:
        for t in terms[:20]:
            for u in terms[:20]:
                if term_leq(s, t, p) and term_leq(t, u, p):
                    ok &= term_leq(s, u, p)
    checks["term order refl/trans"] = ok

    ok = True
    targets = [t for t in oracles.small_lattices().values() if t.n <= 5]
    for _ in range(12):
        n = rnd.randint(1, 4)
        rels = [(rnd.randint(1, (1 << n) - 1), rnd.randint(1, (1 << n) - 1)) for _ in range(rnd.randint(0, 3))]
        pres = SemilatticePresentation(GroundSet(tuple("abcd"[:n])), tuple(rels))
        for t in targets:
            ok &= _universal_ok(pres, t)
    checks["universal property |P| <= 4"] = ok

    report(11, all(checks.values()), "; ".join(f"{k}: {'ok' if v else 'FAILED'}" for k, v in checks.items()))


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted((k, v) for k, v in globals().items() if k.startswith("test_")):
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
