"""
Dense complete subcategories from subgroups
===========================================

Subgroups of K0 containing the classes of the generator correspond to
subcategories, read off as a membership test on classes.
"""

from exk0 import compute_k0, load_fixture
from exk0.catmodel import ObjectExpr
from exk0.classify import (classify_all, gs_witness, objects_up_to, verify_complete,
                           verify_dense)
from exk0.grothendieck import h_g

K = compute_k0(load_fixture("v4"))
print("K0 =", K.group, " H_G index", h_g(K).index)
rows = classify_all(K)
for H, S in rows:
    members = [A.format(K.indecs) for A in objects_up_to(K.indecs, 2) if A in S]
    print(f"  index {H.index}: {S.describe():24s} e.g. {members}")

# the checks behind the correspondence, on one row
H, S = rows[1]
print("complete:", verify_complete(S, 100).ok, " dense:", verify_dense(S).ok)

# two objects with equal class mod H become isomorphic after adding members
X, Y = ObjectExpr.of("X"), ObjectExpr.of("Y")
w = gs_witness(rows[-1][1], X, Y, 2)
print(w.status, f"X + {w.S_A} = Y + {w.S_B}")

K = compute_k0(load_fixture("n3gen"))
print(f"n3gen: K0 = {K.group}, {len(classify_all(K))} subcategories")
