# coding: utf-8
"""
Free lattices over a poset
==========================

Decide inequalities between lattice terms and enumerate the (finite) free
lattice generated by the seven-element poset.
"""

from freelat import WordProblem, generate_fl, parse_term
from freelat.errors import CapExceeded
from freelat.order import antichain
from freelat.catalog import toy_poset

p = toy_poset()
wp = WordProblem(p)

s = parse_term("b v (c ^ f)", p)
t = parse_term("c ^ (a v f)", p)
ok, trace = wp.explain(s, t)
print(ok)
print("\n".join(trace))

ok, trace = wp.explain(parse_term("e"), parse_term("a v f"))
print(ok, trace)

fl = generate_fl(p, cap=100)
print(len(fl), "elements")
print([str(x) for x in fl.elements])

# Three unrelated generators already give an infinite lattice.
try:
    generate_fl(antichain(3), cap=500)
except CapExceeded as exc:
    print("stopped:", exc)
