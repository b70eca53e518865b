"""
Smith normal form and cokernels
===============================

Integer matrices, their Smith form, and the finitely generated abelian
group they present.
"""

from exk0.abgroup import (IntMatrix, cokernel, enumerate_subgroups_containing, hnf_columns,
                          smith_normal_form, subgroup_from_generators, trivial_subgroup)

M = IntMatrix.from_rows([[2, 4], [6, 8]])
s = smith_normal_form(M)
print("diagonal:", s.diagonal)
assert s.U @ M @ s.V == s.D

# relations are rows; Z^2 modulo (2,0) and (0,2) is the Klein group
G = cokernel(IntMatrix.from_rows([[2, 0], [0, 2]]))
print("G =", G, " order", G.order)

# Hermite form gives a canonical basis for a lattice
print(hnf_columns(IntMatrix.from_columns([(2, 0), (1, 1)])).columns())

# every subgroup of G, smallest first
for H in enumerate_subgroups_containing(G, trivial_subgroup(G)):
    print(" index", H.index, "basis", H.generators())

# a single relation (2, -1) leaves Z, with e2 = 2 * e1
Z = cokernel(IntMatrix.from_rows([[2, -1]]))
print(Z, Z.coords((1, 0)), Z.coords((0, 1)))
print("index of <e2>:", subgroup_from_generators(Z, [(0, 1)]).index)
