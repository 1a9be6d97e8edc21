"""
Recovering a poset from its incidence algebra
=============================================

An algebra isomorphism sends each delta_x to a primitive idempotent
conjugate to some delta_y.  Reading y off the diagonal recovers an order
isomorphism of the underlying posets.
"""

import random

from finitary import QQ, conjugation_iso, enumerate_posets, induced_iso, recover_poset_map
from finitary.generators import random_invertible, random_relabeling

rng = random.Random(2)
reps = enumerate_posets(4)
print(len(reps), "posets on 4 elements up to isomorphism")

P = reps[7]
phi = random_relabeling(P, rng)
u = random_invertible(phi.target, QQ, rng)
Phi = induced_iso(phi).then(conjugation_iso(u))
print("spot check failures:", Phi.spot_check(QQ, rng))

recovered = recover_poset_map(Phi, QQ)
print("hidden map:   ", phi.mapping)
print("recovered map:", recovered.mapping)
assert recovered.mapping == phi.mapping
