import random
from itertools import product

import pytest

from finitary.errors import (
    InvalidWitness, NotInvertible, NotOrderPreserving, NotPrimitiveImage, PosetMismatch,
)
from finitary.field import GF, QQ
from finitary.generators import random_idempotent, random_invertible, random_relabeling, random_series
from finitary.isomorphism import (
    AlgebraIso, conjugation_iso, identity_iso, induced_iso, order_test_product, recover_poset_map,
)
from finitary.poset import IsoWitness, Poset, antichain, chain, enumerate_posets, poset_isomorphism
from finitary.series import Series, delta, delta_x, zeta, zero
from finitary.structure import conjugate_to_diagonal, is_idempotent

from conftest import SMALL_POSETS


def test_induced_identity(dia, rng):
    phi = IsoWitness(dia, dia, {x: x for x in dia})
    a = random_series(dia, QQ, rng)
    assert induced_iso(phi)(a) == a


def test_induced_relabeling(chain3):
    q = Poset(["z", "y", "x"], [("x", "y"), ("y", "z")])
    phi = IsoWitness(chain3, q, {"a": "x", "b": "y", "c": "z"})
    a = Series(chain3, {("a", "c"): 5, ("b", "b"): 2})
    img = induced_iso(phi)(a)
    assert img == Series(q, {("x", "z"): 5, ("y", "y"): 2})
    assert induced_iso(phi)(zeta(chain3)) == zeta(q)


def test_induced_rejects_bad_witness(chain3):
    q = antichain(3)
    with pytest.raises(InvalidWitness):
        induced_iso(IsoWitness(chain3, q, {"a": "0", "b": "1", "c": "2"}))


def test_induced_is_multiplicative(rng):
    p = SMALL_POSETS["N"]
    w = random_relabeling(p, rng)
    Phi = induced_iso(w)
    assert Phi.spot_check(QQ, rng) == []
    assert Phi(delta(p)) == delta(w.target)


def test_conjugation_iso(dia, rng):
    a = random_series(dia, QQ, rng)
    assert conjugation_iso(delta(dia))(a) == a
    u = random_invertible(dia, QQ, rng)
    C = conjugation_iso(u)
    assert C.spot_check(QQ, rng) == []
    e, _, _ = random_idempotent(dia, QQ, rng)
    assert is_idempotent(C(e))
    assert C(a).diagonal() == a.diagonal()
    with pytest.raises(NotInvertible):
        conjugation_iso(zeta(dia) - delta_x(dia, "b"))


def test_spot_check_detects_non_homomorphism(dia):
    bad = AlgebraIso(dia, dia, lambda a: a * 2, "doubling")
    assert "unital" in bad.spot_check(QQ) and "multiplicative" in bad.spot_check(QQ)


def test_recover_identity_from_conjugation(dia, rng):
    u = random_invertible(dia, QQ, rng)
    phi = recover_poset_map(conjugation_iso(u), QQ)
    assert phi.mapping == {x: x for x in dia}


def test_recover_induced(rng):
    p = SMALL_POSETS["N"]
    w = random_relabeling(p, rng)
    assert recover_poset_map(induced_iso(w), QQ).mapping == w.mapping


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_recover_roundtrip_all_small_posets(n):
    rng = random.Random(n)
    for p in enumerate_posets(n):
        w = random_relabeling(p, rng)
        u = random_invertible(w.target, QQ, rng)
        Phi = induced_iso(w).then(conjugation_iso(u))
        assert recover_poset_map(Phi, QQ).mapping == w.mapping


def test_recover_over_prime_field(rng):
    F = GF(5)
    p = SMALL_POSETS["diamond"]
    w = random_relabeling(p, rng)
    u = random_invertible(w.target, F, rng)
    v = random_invertible(p, F, rng)
    Phi = conjugation_iso(v).then(induced_iso(w)).then(conjugation_iso(u))
    assert recover_poset_map(Phi, F).mapping == w.mapping


def test_recover_rejects_non_isomorphisms(dia):
    with pytest.raises(NotPrimitiveImage):
        recover_poset_map(AlgebraIso(dia, dia, lambda a: zero(dia)), QQ)
    # swaps the images of delta_b and delta_a: unital but not order preserving
    swap = {"a": "b", "b": "a", "c": "c", "d": "d"}

    def forward(a):
        return Series(dia, {(swap[x], swap[x]): v for (x, y), v in a.items() if x == y})

    with pytest.raises(NotOrderPreserving):
        recover_poset_map(AlgebraIso(dia, dia, forward), QQ)


def test_delta_x_conjugacy_rigidity(dia, rng):
    for x in dia:
        u = random_invertible(dia, QQ, rng)
        img = conjugation_iso(u)(delta_x(dia, x))
        eps, _ = conjugate_to_diagonal(img)
        assert eps == delta_x(dia, x)


def test_order_test_product(chain2):
    z = zeta(chain2)
    prod = delta_x(chain2, "a") * z * delta_x(chain2, "b")
    assert prod == Series(chain2, {("a", "b"): 1})
    assert order_test_product(chain2, "a", "b")
    assert not order_test_product(chain2, "b", "a")
    a2 = antichain(2)
    assert not order_test_product(a2, "0", "1")
    for p in SMALL_POSETS.values():
        for x, y in product(p, repeat=2):
            nonzero = not (delta_x(p, x) * zeta(p) * delta_x(p, y)).is_zero()
            assert order_test_product(p, x, y) == nonzero
        for x in p:
            d = delta_x(p, x)
            assert d * d * d == d


def test_non_isomorphic_classes_are_distinct():
    reps = [p for n in range(1, 5) for p in enumerate_posets(n)]
    for i, p in enumerate(reps):
        for q in reps[i + 1:]:
            assert poset_isomorphism(p, q) is None


def test_truncation_narrative():
    """Truncations chain(n) + chain(n) of a non-locally-finite order sum.

    Every truncation is a finite chain, hence locally finite, yet the
    lower zeta's count at the extreme segment grows without bound in n:
    in the limit that series is not finitary.
    """
    from finitary.poset import order_sum
    from finitary.series import c_alpha, extend_by_zero

    seen = []
    for n in range(1, 7):
        lo, hi = chain(n, "a"), chain(n, "b")
        P = order_sum(lo, hi)
        z = extend_by_zero(zeta(lo), P)
        seen.append(c_alpha(z, "a0", f"b{n - 1}"))
        assert poset_isomorphism(P, chain(2 * n)) is not None
        assert poset_isomorphism(P, antichain(2 * n)) is None
    assert seen == [0, 1, 3, 6, 10, 15]


def test_compose_requires_matching_posets(dia, chain2):
    with pytest.raises(PosetMismatch):
        identity_iso(dia).then(identity_iso(chain2))
