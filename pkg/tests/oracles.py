"""Independent brute-force reference implementations used as test oracles.

Nothing here calls the library's algorithms; inputs are plain Python data
(element count, relation pairs) so a bug in the package cannot leak in.
"""

from __future__ import annotations

from itertools import product


def transitive_leq(n: int, covers) -> list[list[bool]]:
    """Reflexive-transitive closure of ``covers`` (pairs of indices) by Warshall."""
    r = [[i == j for j in range(n)] for i in range(n)]
    for x, y in covers:
        r[x][y] = True
    for k in range(n):
        for i in range(n):
            if r[i][k]:
                for j in range(n):
                    if r[k][j]:
                        r[i][j] = True
    return r


def ideals(n: int, leq) -> set[int]:
    out = set()
    for m in range(1 << n):
        if all(not (m >> y) & 1 or all((m >> x) & 1 for x in range(n) if leq[x][y]) for y in range(n)):
            out.add(m)
    return out


def filters(n: int, leq) -> set[int]:
    geq = [[leq[j][i] for j in range(n)] for i in range(n)]
    return ideals(n, geq)


def closed_sets(n: int, imps) -> set[int]:
    """Subsets ``X`` with ``A <= X  =>  B <= X`` for every ``(A, B)``."""
    return {m for m in range(1 << n) if all((a & m) != a or (b & m) == b for a, b in imps)}


def closure_by_intersection(family, n: int, x: int) -> int:
    out = (1 << n) - 1
    for c in family:
        if c & x == x:
            out &= c
    return out


def quasi_closed(x: int, close) -> bool:
    """Every subset ``Z`` of ``x`` has ``close(Z) <= x`` or ``close(Z) == close(x)``."""
    cx = close(x)
    z = x
    while True:
        c = close(z)
        if c & ~x and c != cx:
            return False
        if z == 0:
            return True
        z = (z - 1) & x


def essential_sets(n: int, imps) -> set[int]:
    fam = closed_sets(n, imps)

    def close(x):
        return closure_by_intersection(fam, n, x)

    return {close(x) for x in range(1 << n) if close(x) != x and quasi_closed(x, close)}


class TableLattice:
    """A finite lattice from an explicit ``leq`` matrix, joins found by search."""

    def __init__(self, leq):
        self.n = len(leq)
        self.le = leq
        self.jn = [[self._lub(i, j) for j in range(self.n)] for i in range(self.n)]
        self.mt = [[self._glb(i, j) for j in range(self.n)] for i in range(self.n)]

    def _lub(self, i, j):
        ubs = [k for k in range(self.n) if self.le[i][k] and self.le[j][k]]
        least = [k for k in ubs if all(self.le[k][u] for u in ubs)]
        assert len(least) == 1
        return least[0]

    def _glb(self, i, j):
        lbs = [k for k in range(self.n) if self.le[k][i] and self.le[k][j]]
        great = [k for k in lbs if all(self.le[u][k] for u in lbs)]
        assert len(great) == 1
        return great[0]

    @property
    def bottom(self):
        return next(k for k in range(self.n) if all(self.le[k][j] for j in range(self.n)))

    def join_all(self, xs):
        acc = self.bottom
        for x in xs:
            acc = self.jn[acc][x]
        return acc

    def join_irreducibles(self):
        bot = self.bottom
        out = []
        for a in range(self.n):
            if a == bot:
                continue
            below = [b for b in range(self.n) if self.le[b][a] and b != a]
            if self.join_all(below) != a:
                out.append(a)
        return out


def lattice_from_family(family) -> TableLattice:
    fam = sorted(family)
    return TableLattice([[x & y == x for y in fam] for x in fam])


def small_lattices() -> dict[str, TableLattice]:
    """Every lattice here is given by an explicit order on indices."""

    def chain(k):
        return TableLattice([[i <= j for j in range(k)] for i in range(k)])

    def from_covers(n, covers):
        return TableLattice(transitive_leq(n, covers))

    return {
        "1": chain(1),
        "2": chain(2),
        "3": chain(3),
        "4": chain(4),
        "5": chain(5),
        "2x2": from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)]),
        "m3": from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]),
        "n5": from_covers(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]),
        "2x2+top": from_covers(5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)]),
        "bot+2x2": from_covers(5, [(0, 1), (1, 2), (1, 3), (2, 4), (3, 4)]),
    }


def boolean_generated_atoms(n: int, sets) -> int:
    """Atoms of the Boolean algebra generated by ``sets``: close under complement,
    union and intersection, then count minimal nonempty members."""
    full = (1 << n) - 1
    alg = {0, full} | set(sets)
    changed = True
    while changed:
        changed = False
        for x, y in list(product(list(alg), repeat=2)):
            for z in (x | y, x & y, full & ~x):
                if z not in alg:
                    alg.add(z)
                    changed = True
    nonempty = [x for x in alg if x]
    return sum(1 for x in nonempty if not any(y != x and y & x == y for y in nonempty))

