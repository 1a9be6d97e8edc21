"""Random and exhaustive generators of posets and series.

All randomness goes through an explicit :class:`random.Random` so runs
are reproducible from a seed.
"""

from itertools import product

from .errors import SizeTooLarge
from .poset import IsoWitness, Poset
from .series import Series, invert

MAX_EXHAUSTIVE = 2 ** 16


def random_poset(n, rng, edge_prob=0.4):
    """A random poset on ids ``"e0".."e{n-1}"`` listed in shuffled order."""
    names = [f"e{i}" for i in range(n)]
    edges = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)
             if rng.random() < edge_prob]
    order = names[:]
    rng.shuffle(order)
    return Poset(order, edges)


def random_scalar(field, rng, nonzero=False, bound=5):
    while True:
        if field.is_finite:
            s = field(rng.randrange(field.p))
        else:
            s = field(rng.randint(-bound, bound), rng.randint(1, bound - 1))
        if not (nonzero and s.is_zero()):
            return s


def random_series(poset, field, rng, density=0.7):
    return Series(poset, {tuple(s): random_scalar(field, rng) for s in poset.segments()
                          if rng.random() < density}, field)


def random_invertible(poset, field, rng, density=0.7):
    entries = {tuple(s): random_scalar(field, rng) for s in poset.segments()
               if s.lo != s.hi and rng.random() < density}
    for x in poset:
        entries[(x, x)] = random_scalar(field, rng, nonzero=True)
    return Series(poset, entries, field)


def random_radical(poset, field, rng, density=0.7):
    return Series(poset, {tuple(s): random_scalar(field, rng) for s in poset.segments()
                          if s.lo != s.hi and rng.random() < density}, field)


def random_diagonal_idempotent(poset, field, rng):
    return Series(poset, {(x, x): 1 for x in poset if rng.random() < 0.5}, field)


def random_idempotent(poset, field, rng):
    """``u^-1 e u`` for a random invertible ``u`` and diagonal idempotent ``e``.

    Returns ``(idempotent, e, u)``.
    """
    e = random_diagonal_idempotent(poset, field, rng)
    u = random_invertible(poset, field, rng)
    return invert(u) * e * u, e, u


def random_regular(poset, field, rng):
    """``b e g`` for random invertibles ``b``, ``g`` and diagonal idempotent ``e``."""
    e = random_diagonal_idempotent(poset, field, rng)
    return random_invertible(poset, field, rng) * e * random_invertible(poset, field, rng)


def random_relabeling(poset, rng, prefix="q"):
    """A random order isomorphism onto a renamed, reshuffled copy of ``poset``."""
    names = [f"{prefix}{i}" for i in range(len(poset))]
    rng.shuffle(names)
    mapping = dict(zip(poset.elements, names))
    target_order = [mapping[e] for e in poset.elements]
    rng.shuffle(target_order)
    target = Poset(target_order, [(mapping[a], mapping[b]) for a, b in poset.hasse])
    return IsoWitness(poset, target, mapping)


def all_series(poset, field):
    """Every element of the algebra over a finite field, in a fixed order."""
    segs = [tuple(s) for s in poset.segments()]
    if not field.is_finite or field.p ** len(segs) > MAX_EXHAUSTIVE:
        raise SizeTooLarge("algebra too large for exhaustive enumeration")
    vals = field.elements()
    for combo in product(vals, repeat=len(segs)):
        yield Series(poset, dict(zip(segs, combo)), field)
