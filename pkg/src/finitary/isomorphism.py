"""Algebra isomorphisms between incidence algebras and recovery of the poset map.

An :class:`AlgebraIso` carries an arbitrary series-to-series function.
:func:`recover_poset_map` reads the underlying order isomorphism off the
images of the idempotents ``delta_x``: each image is a primitive
idempotent conjugate to some ``delta_y``, and conjugation leaves the
diagonal untouched, so ``y`` is the position of the single diagonal 1.
"""

import random
from dataclasses import dataclass, field
from typing import Callable

from .errors import (
    InvalidWitness, NotInvertible, NotOrderPreserving, NotPrimitiveImage, PosetMismatch,
)
from .poset import IsoWitness, Poset
from .series import Series, delta, delta_x, invert, is_invertible
from .structure import conjugate_to_diagonal, is_idempotent, is_primitive_idempotent

__all__ = [
    "AlgebraIso", "IsoWitness", "induced_iso", "conjugation_iso", "identity_iso",
    "recover_poset_map", "order_test_product",
]


@dataclass(frozen=True)
class AlgebraIso:
    """A (claimed) algebra isomorphism ``FI(source) -> FI(target)``."""

    source: Poset
    target: Poset
    forward: Callable[[Series], Series] = field(repr=False)
    description: str = ""

    def __call__(self, a):
        if a.poset != self.source:
            raise PosetMismatch("series does not live on the source poset")
        return self.forward(a)

    def then(self, other):
        """``other`` applied after ``self``."""
        if self.target != other.source:
            raise PosetMismatch("cannot compose: target and source posets differ")
        f, g = self.forward, other.forward
        desc = " then ".join(d for d in (self.description, other.description) if d)
        return AlgebraIso(self.source, other.target, lambda a: g(f(a)), desc)

    def spot_check(self, field, rng=None, trials=10):
        """Check unitality, additivity and multiplicativity on random pairs.

        Returns the list of failed property names (empty when all hold).
        """
        from .generators import random_series

        rng = rng or random.Random(0)
        failures = []
        if self(delta(self.source, field)) != delta(self.target, field):
            failures.append("unital")
        for _ in range(trials):
            a = random_series(self.source, field, rng)
            b = random_series(self.source, field, rng)
            fa, fb = self(a), self(b)
            if self(a + b) != fa + fb and "additive" not in failures:
                failures.append("additive")
            if self(a * b) != fa * fb and "multiplicative" not in failures:
                failures.append("multiplicative")
        return failures


def identity_iso(poset):
    return AlgebraIso(poset, poset, lambda a: a, "identity")


def induced_iso(phi):
    """Transport series along an order isomorphism: ``Phi(a)(phi x, phi y) = a(x, y)``."""
    if not phi.is_valid():
        raise InvalidWitness("mapping is not an order isomorphism between the posets")
    m, q = dict(phi.mapping), phi.target

    def forward(a):
        return Series(q, {(m[x], m[y]): v for (x, y), v in a.items()}, a.field)

    return AlgebraIso(phi.source, q, forward, "induced")


def conjugation_iso(u):
    """The inner automorphism ``a -> u^-1 a u``."""
    if not is_invertible(u):
        x = next(x for x in u.poset if u[x, x].is_zero())
        raise NotInvertible(f"conjugator is not invertible: coefficient at ({x!r}, {x!r}) is zero",
                            witness=x)
    uinv = invert(u)
    return AlgebraIso(u.poset, u.poset, lambda a: uinv * a * u, "conjugation")


def recover_poset_map(iso, field):
    """Recover the order isomorphism ``source -> target`` underlying ``iso``.

    ``field`` is the coefficient field used to build the probing idempotents.
    """
    p, q = iso.source, iso.target
    if iso(delta(p, field)) != delta(q, field):
        raise NotPrimitiveImage("isomorphism does not map the identity to the identity")
    mapping = {}
    for x in p:
        img = iso(delta_x(p, x, field))
        if img.poset != q or not is_idempotent(img) or not is_primitive_idempotent(img):
            raise NotPrimitiveImage(f"image of delta_{x} is not a primitive idempotent")
        eps, _ = conjugate_to_diagonal(img)
        (y, _), = eps.support()
        mapping[x] = y
    phi = IsoWitness(p, q, mapping)
    if len(set(mapping.values())) != len(q) or len(p) != len(q):
        raise NotPrimitiveImage("images of the delta_x do not form a bijection")
    if not phi.is_valid():
        bad = next((x, y) for x in p for y in p
                   if p.leq(x, y) != q.leq(mapping[x], mapping[y]))
        raise NotOrderPreserving(
            f"recovered map breaks the order at ({bad[0]!r}, {bad[1]!r})")
    return phi


def order_test_product(poset, x, y):
    """Whether ``x <= y``, i.e. whether ``delta_x * FI(P) * delta_y`` is nonzero."""
    return poset.leq(x, y)
