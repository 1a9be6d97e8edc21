"""
Regular and superregular elements
=================================

A regular element a (one with a x a = a for some x) factors as
beta * eps * gamma with invertible outer factors and a diagonal
idempotent in the middle.  Superregular elements, whose reflexive
inverse is unique, are exactly those that are zero or invertible on each
connected component.
"""

import random

from finitary import (
    GF, QQ, Poset, disjoint_union, is_superregular, point, regular_factorization, regular_witness,
    unit,
)
from finitary.generators import all_series, random_regular
from finitary.poset import diamond

rng = random.Random(1)
D = diamond()
a = random_regular(D, QQ, rng)
chi = regular_witness(a)
fac = regular_factorization(a, chi)
print("a =", a)
print("epsilon =", fac.epsilon)
print("beta * epsilon * gamma == a:", fac.product() == a)

# The single off-diagonal unit of the 2-chain is not regular.
C2 = Poset("ab", [("a", "b")])
print("e_ab regular over GF(2)?", regular_witness(unit(C2, "a", "b", GF(2))) is not None)

# Count superregular elements over GF(2) by brute force.
for P in (C2, disjoint_union(C2, point("c"))):
    elems = list(all_series(P, GF(2)))
    unique = [x for x in elems
              if sum(1 for y in elems if x * y * x == x and y * x * y == y) == 1]
    print(f"{len(P.elements)} elements, {len(P.connected_components())} components:",
          len(unique), "superregular;",
          "matches component test:", set(unique) == {x for x in elems if is_superregular(x)})
