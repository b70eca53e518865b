"""
Grothendieck groups of small presentations
==========================================

A presentation lists indecomposables and conflations.  K0 is the free group
on the indecomposables modulo one Euler relation per conflation.
"""

from exk0 import FIXTURES, compute_k0, load_fixture
from exk0.catmodel import ObjectExpr
from exk0.dsl import format_presentation, parse

text = """
category "a2"
n = 1
indecomposables: S, P
conflation: S | P | S
generator: P
witness S: S | P | S
witness P: 0 | P | P
"""
pres = parse(text).presentation
K = compute_k0(pres)
print("K0 =", K.group)
for label in pres.indecs:
    print(f"[{label}] =", K.class_of(ObjectExpr.of(label)).coords())

# classes add under direct sum
A = ObjectExpr.of("S", "S", "P")
print(A, "->", K.class_of(A).coords())

# the printer gives back canonical text
print(format_presentation(pres))

for name in FIXTURES:
    K = compute_k0(load_fixture(name))
    print(f"{name:9s} n={K.pres.n}  K0 = {K.group}")
