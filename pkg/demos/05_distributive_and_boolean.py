# coding: utf-8
"""
Free distributive lattices and free Boolean algebras
====================================================
"""

from freelat import (
    SetSystem,
    boolean_atoms_of_sets,
    fb_atom_count,
    fb_size,
    fd_factor,
    fd_join_irreducibles,
    free_distributive,
    generation_probability,
    realize_fb,
)
from freelat.catalog import FOUR_SETS_GROUND, FOUR_SETS, toy_poset

p = toy_poset()
fd = free_distributive(p)
print(len(fd), "elements")
print(fd.names)
print(fd.lattice.is_distributive())

# Each join irreducible gives a two-element quotient; list the generators sent to 1.
for q in fd_join_irreducibles(fd):
    print(f"{fd.names[q]:>12}", sorted(fd_factor(fd, q)))

# The Boolean algebra is only counted: 2 to the number of filters.
print("t =", fb_atom_count(p), "size =", fb_size(p))
print(realize_fb(p).format_matrix())

# Four sets over nine points cut out six atoms.
sets = SetSystem.from_names(FOUR_SETS_GROUND, FOUR_SETS)
print(sets.format_matrix())
atoms = boolean_atoms_of_sets(sets)
print(atoms.count, atoms.size, [sorted(c) for c in atoms.classes])

# How often do s random subsets split an r-set into singletons?
for r in (5, 10):
    prob = generation_probability(r, 5)
    print(r, round(float(prob), 4), prob)
