# coding: utf-8
"""
Join cores
==========

Which elements of a finite lattice are needed to present it as a free
semilattice with some joins declared?
"""

from freelat import boolean_lattice, join_core, m3, n5, presents_lattice
from freelat.lattice import FiniteLattice, chain_lattice
from freelat.catalog import running_implications
from freelat.implications import closure_system

for name, lat in [("2^3", boolean_lattice("abc")), ("M3", m3()), ("N5", n5()), ("chain", chain_lattice(3, "0ab"))]:
    print(name)
    print(join_core(lat).format(lat))

# The core is enough, and no element of it can be dropped.
lat = m3()
core = join_core(lat).core
print("core works:", presents_lattice(lat, core))
for x in sorted(core):
    print("without", x, ":", presents_lattice(lat, core - {x}))

# The lattice of closed sets of the running implication family.
closed = FiniteLattice.from_family(closure_system(running_implications()).closed_sets)
print(join_core(closed).format(closed))
