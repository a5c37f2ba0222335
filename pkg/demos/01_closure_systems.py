# coding: utf-8
"""
Closure systems from implications
=================================

Count the sets closed under a family of implications without listing all
2^n subsets first.
"""

from freelat import closure, closure_system, essential_elements, nonredundant_base, quasi_closure
from freelat.abengine import CompressedRow, count, impose, run
from freelat.catalog import running_implications

sigma = running_implications()
print(sigma.format())

# A set is closed when every premise it contains drags its conclusion in too.
g = sigma.ground
print("closure of {c}:", g.format(closure("c", sigma)))
print("closure of {d}:", g.format(closure("d", sigma)))

# Impose the implications one at a time on a single all-free row.
# Symbol 2 means free, 'a'/'b' mark a premise bit and the bits it forces.
row = CompressedRow.free(len(g))
rows = impose(row, sigma.implications[0])
print([str(r) for r in rows])
rows = [r2 for r in rows for r2 in impose(r, sigma.implications[1])]
print([str(r) for r in rows])

# The full run, row by row, with the number of sets each row stands for.
table = run(sigma)
print(table.format())
print("per row:", [r.cardinality() for r in table.rows], "total:", count(table))

# Same answer the slow way.
print("brute force:", len(closure_system(sigma, backend="brute")))

# Quasi-closure sits between a set and its closure.
print("{b,f} quasi-closed to", g.format(quasi_closure("b f", sigma)),
      "but closes to", g.format(closure("b f", sigma)))

# Nothing in this family is redundant, and five closed sets are essential.
print(len(nonredundant_base(sigma)), "implications kept")
print(essential_elements(sigma))
