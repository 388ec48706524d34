"""
Betti tables from simplicial homology
=====================================

A square-free monomial ideal I and its Stanley-Reisner complex N(I) carry the
same information.  Every multigraded Betti number of S/I is the dimension of a
reduced homology group of an induced subcomplex of N(I).
"""

# %%
from syzygy import (MonomialIdeal, betti_gpw, betti_hochster, betti_hochster_dual, lcm_lattice, polarize,
                    stanley_reisner_complex)
from syzygy.cli import render_betti

I = MonomialIdeal.parse("ac bc ad bd ae be cde", "abcde")
gamma = stanley_reisner_complex(I)
print("I      =", I)
print("N(I)   =", gamma)

# %%
# The table is laid out like Macaulay2: columns are homological degrees i,
# rows are j - i.
B = betti_hochster(I)
print(render_betti(B))

# %%
# Individual multidegrees.  The top multidegree abcde shows up in columns 3 and 4.
for (i, m), r in B.multigraded.items():
    if m.degree == 5:
        print(f"beta_{i},{m.format(I.variables)} = {r}")

# %%
# Two more routes to the same numbers: links in the Alexander dual, and the
# order complexes of open intervals in the lcm lattice.
same = B.multigraded == betti_hochster_dual(I).multigraded == betti_gpw(I).multigraded
print("all three routes agree:", same)
L = lcm_lattice(I)
print("lcm lattice has", len(L.elements), "elements; top =", L.top.format(I.variables))

# %%
# Ideals with powers are handled by polarization, which keeps the graded Betti
# numbers.  The lattice route works on the original ideal directly.
J = MonomialIdeal.parse("x^2 xy y^3", "xy")
P, mapping = polarize(J)
print(J, "->", P)
print(render_betti(betti_hochster(P)))
print("coarse tables match:", betti_hochster(P).coarse() == betti_gpw(J).coarse())
