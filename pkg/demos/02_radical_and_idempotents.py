"""
The radical and diagonalization of idempotents
==============================================

The radical is the set of series with zero diagonal: it is an ideal, it
contains every commutator, and its elements are nilpotent on a finite
poset.  Every idempotent is conjugate to its own diagonal.
"""

import random

from finitary import GF, QQ, commutator, conjugate_to_diagonal, debug_identities, invert, is_radical, power
from finitary.generators import random_idempotent, random_poset, random_radical, random_series

rng = random.Random(0)
P = random_poset(6, rng)
print("poset:", P)

a, b = random_series(P, QQ, rng), random_series(P, QQ, rng)
print("commutator is radical:", is_radical(commutator(a, b)))

r = random_radical(P, QQ, rng, density=1.0)
print(f"radical element to the power {P.height()} (longest chain length + 1) is zero:",
      power(r, P.height()).is_zero())

# u^-1 e u is an idempotent; the diagonal conjugator recovers e exactly.
for F in (QQ, GF(2)):
    idem, e, u = random_idempotent(P, F, rng)
    with debug_identities():
        eps, beta = conjugate_to_diagonal(idem)
    print(F, "diagonal part recovered:", eps == e,
          "| reconstruction exact:", invert(beta) * eps * beta == idem)
