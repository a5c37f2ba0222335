# coding: utf-8
"""
Free semilattices
=================

Order ideals give the free join-semilattice of a poset, filters the free
meet-semilattice, and closed sets of relation implications the semilattice
defined by generators and relations.
"""

from freelat import (
    SemilatticePresentation,
    free_join_semilattice,
    free_meet_semilattice,
    free_presented_semilattice,
    hasse_dot,
)
from freelat.catalog import RUNNING_RELATIONS, TOY_ELEMENTS, toy_poset

p = toy_poset()
fj = free_join_semilattice(p)
fm = free_meet_semilattice(p)
print(len(fj), "joins;", len(fm), "meets")
print(fj.elements)

# Relations b >= a v e, c >= b, ... read as implications b -> a e, ...
pres = SemilatticePresentation.from_names(TOY_ELEMENTS, RUNNING_RELATIONS)
fp = free_presented_semilattice(pres)
print(len(fp), "elements in the presented semilattice")

# A cycle of relations collapses everything to one point.
collapse = SemilatticePresentation.from_names("abc", [("a", "b"), ("b", "c"), ("c", "a")])
print(len(free_presented_semilattice(collapse)), "element after collapse")

# Paste into graphviz to draw it.
print(hasse_dot(fp.order(), name="presented"))
