import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from finitary.errors import FieldMismatch, MixedFields, NotComparable, NotInvertible, PosetMismatch
from finitary.field import GF, QQ
from finitary.generators import all_series, random_invertible, random_poset, random_radical, random_series
from finitary.poset import Poset, chain, diamond, order_sum
from finitary.series import (
    Series, c_alpha, commutator, convolve, delta, delta_x, diagonal_part, extend_by_zero, invert,
    is_invertible, is_radical, mobius, power, restrict, scale, unit, zero, zeta,
)

from conftest import SMALL_POSETS, fields, posets, series_on
from oracles import as_fractions, dense_inverse, dense_product, interval_size


def test_delta(chain2):
    assert dict(delta(chain2).items()) == {("a", "a"): QQ(1), ("b", "b"): QQ(1)}
    empty = Poset([])
    assert delta(empty).is_zero() and delta(empty) == zero(empty)
    assert convolve(delta(empty), zero(empty)) == delta(empty)


def test_delta_x(chain2):
    d = delta_x(chain2, "a")
    assert dict(d.items()) == {("a", "a"): QQ(1)}
    assert d * d == d
    assert delta_x(chain2, "a") + delta_x(chain2, "b") == delta(chain2)


def test_zeta(chain2, dia):
    assert len(zeta(chain2)) == 3 and all(v == 1 for _, v in zeta(chain2).items())
    assert len(zeta(dia)) == 9
    z2 = zeta(dia) * zeta(dia)
    for x, y in dia.segments():
        assert z2[x, y] == interval_size(dia, x, y)
    assert z2["a", "d"] == 4


def test_linear_ops(dia, rng):
    a = random_series(dia, QQ, rng)
    b = random_series(dia, QQ, rng)
    assert (a + scale(-1, a)).is_zero()
    z = scale(0, zeta(dia))
    assert z.is_zero() and z._c == {}
    assert a + b == b + a
    assert a - b == a + (-b)
    assert 3 * a == a * 3 == scale(3, a)


def test_no_stored_zeros(chain2):
    s = Series(chain2, {("a", "a"): 0, ("a", "b"): "0/5", ("b", "b"): 2})
    assert s.support() == [("b", "b")]
    assert Series(chain2, [("a", "b", 1), ("a", "b", -1)]).is_zero()


def test_construction_errors(chain2):
    with pytest.raises(NotComparable):
        Series(chain2, {("b", "a"): 1})
    with pytest.raises(MixedFields):
        Series(chain2, {("a", "a"): GF(3)(1)})
    with pytest.raises(PosetMismatch):
        zeta(chain2) + zeta(chain(3))
    with pytest.raises(FieldMismatch):
        zeta(chain2) * zeta(chain2, GF(2))


def test_equality_is_structural(chain2):
    other = Poset("ab", [("a", "b")])
    assert zeta(chain2) == zeta(other)
    assert zeta(chain2) != zeta(chain2, GF(2))
    assert hash(zeta(chain2)) == hash(zeta(other))


def test_convolve_examples(chain2, dia, rng):
    a = random_series(dia, QQ, rng)
    d = delta(dia)
    assert d * a == a == a * d
    e = unit(chain2, "a", "b")
    assert (e * e).is_zero()
    assert (zeta(dia) * zeta(dia))["a", "d"] == 4


@settings(max_examples=60)
@given(st.data())
def test_convolve_matches_dense_product(data):
    p = data.draw(posets)
    a, b = data.draw(series_on(p)), data.draw(series_on(p))
    assert as_fractions(a * b) == dense_product(a, b)


def test_c_alpha_examples(dia):
    for x, y in dia.segments():
        assert c_alpha(delta(dia), x, y) == 0
    assert c_alpha(zeta(dia), "a", "d") == 5
    assert c_alpha(zeta(dia), "b", "d") == 1
    with pytest.raises(NotComparable):
        c_alpha(zeta(dia), "b", "c")


@pytest.mark.parametrize("n", range(1, 8))
def test_c_alpha_growth_on_order_sum(n):
    lo, hi = chain(n, "a"), chain(n, "b")
    P = order_sum(lo, hi)
    z = extend_by_zero(zeta(lo), P)
    pairs = sum(1 for i in range(n) for j in range(n) if i < j)
    assert c_alpha(z, "a0", f"b{n - 1}") == pairs == n * (n - 1) // 2


def test_is_invertible(dia):
    assert is_invertible(delta(dia))
    assert is_invertible(zeta(dia))
    assert not is_invertible(delta_x(dia, "a"))


def test_invert_examples(chain3, dia):
    assert invert(delta(dia)) == delta(dia)
    mu = invert(zeta(chain3))
    assert mu["a", "b"] == mu["b", "c"] == -1
    assert mu["a", "c"] == 0
    assert mobius(dia)["a", "d"] == 1
    assert as_fractions(mobius(dia)) == dense_inverse(zeta(dia))
    assert as_fractions(mu) == dense_inverse(zeta(chain3))


def test_invert_single_off_diagonal_term():
    # one nonzero off-diagonal coefficient a(u, x0) inside [u, v]
    p = chain(3)
    a = Series(p, {("0", "0"): 2, ("1", "1"): 3, ("2", "2"): 5, ("0", "2"): 7})
    b = invert(a)
    assert c_alpha(a, "0", "2") == 1
    assert b["0", "2"] == -QQ(1, 2) * 7 * QQ(1, 5)
    assert b["0", "1"] == 0  # x0 = 2 != 1
    a2 = Series(p, {("0", "0"): 2, ("1", "1"): 3, ("2", "2"): 5, ("0", "1"): 7})
    assert invert(a2)["0", "2"] == 0


def test_not_invertible_names_witness(dia):
    s = zeta(dia) - delta_x(dia, "c")
    with pytest.raises(NotInvertible) as exc:
        invert(s)
    assert exc.value.witness == "c"
    assert "'c'" in str(exc.value)


def test_is_radical(dia):
    assert not is_radical(delta(dia))
    r = zeta(dia) - delta(dia)
    assert is_radical(r)
    assert is_invertible(delta(dia) - r)


@given(st.data())
def test_associativity_and_distributivity(data):
    p, F = data.draw(posets), data.draw(fields)
    a, b, c = (data.draw(series_on(p, F)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    k = F(data.draw(st.integers(-5, 5)))
    assert scale(k, a) * b == scale(k, a * b) == a * scale(k, b)


@given(st.data())
def test_inverse_roundtrip(data):
    p, F = data.draw(posets), data.draw(fields)
    a = data.draw(series_on(p, F, invertible=True))
    b = invert(a)
    d = delta(p, F)
    assert a * b == d and b * a == d
    assert power(a, -1) == b


def test_inverse_matches_dense_on_random_posets():
    rng = random.Random(7)
    for _ in range(40):
        p = random_poset(rng.randint(0, 7), rng)
        a = random_invertible(p, QQ, rng)
        assert as_fractions(invert(a)) == dense_inverse(a)


@given(st.data())
def test_left_and_right_inverse_recursions(data):
    """Both one-sided recursions for the inverse hold as identities."""
    p = data.draw(posets)
    a = data.draw(series_on(p, invertible=True))
    b = invert(a)
    for u, v in p.segments():
        if u == v:
            continue
        right = -a[v, v].inverse() * sum(
            (b[u, z] * a[z, v] for z in p.interval(u, v) if z != v), QQ.zero)
        left = -a[u, u].inverse() * sum(
            (a[u, z] * b[z, v] for z in p.interval(u, v) if z != u), QQ.zero)
        assert b[u, v] == right == left


@pytest.mark.parametrize("name", sorted(k for k, p in SMALL_POSETS.items() if len(p.segments()) <= 5))
def test_one_sided_inverse_is_two_sided_exhaustive(name):
    p = SMALL_POSETS[name]
    F = GF(2)
    elems = list(all_series(p, F))
    d = delta(p, F)
    for a in elems:
        rights = [b for b in elems if a * b == d]
        lefts = [b for b in elems if b * a == d]
        assert bool(rights) == bool(lefts) == is_invertible(a)
        for b in rights:
            assert b * a == d and b == invert(a)


@given(st.data())
def test_radical_is_an_ideal(data):
    p, F = data.draw(posets), data.draw(fields)
    r1, r2 = (data.draw(series_on(p, F)) for _ in range(2))
    r1, r2 = r1 - diagonal_part(r1), r2 - diagonal_part(r2)
    b = data.draw(series_on(p, F))
    assert is_radical(r1) and is_radical(r2)
    assert is_radical(r1 + r2)
    assert is_radical(r1 * b) and is_radical(b * r1)


def test_radical_nilpotent():
    rng = random.Random(3)
    for _ in range(30):
        p = random_poset(rng.randint(1, 7), rng)
        r = random_radical(p, QQ, rng, density=1.0)
        # longest chain has height - 1 covering steps
        m = (p.height() - 1) + 1
        assert power(r, m).is_zero()
        assert is_radical(power(r, m - 1)) or m == 1


def test_radical_nilpotency_index_is_sharp_on_chains():
    for n in range(2, 7):
        p = chain(n)
        r = zeta(p) - delta(p)
        assert not power(r, n - 1).is_zero()
        assert power(r, n).is_zero()


@given(st.data())
def test_commutators_are_radical(data):
    p, F = data.draw(posets), data.draw(fields)
    a, b = data.draw(series_on(p, F)), data.draw(series_on(p, F))
    assert is_radical(commutator(a, b))


@given(st.data())
def test_diagonal_of_product(data):
    p, F = data.draw(posets), data.draw(fields)
    a, b = data.draw(series_on(p, F)), data.draw(series_on(p, F))
    ab = a * b
    for x in p:
        assert ab[x, x] == a[x, x] * b[x, x]


@given(st.data())
def test_c_alpha_monotone(data):
    p = data.draw(posets)
    a = data.draw(series_on(p))
    for (u, v), (s, t) in product(p.segments(), repeat=2):
        if p.leq(u, s) and p.leq(t, v):
            assert c_alpha(a, s, t) <= c_alpha(a, u, v)


def test_restrict_and_extend(rng):
    p = SMALL_POSETS["chain2+point"]
    a = random_series(p, QQ, rng, density=1.0)
    sub = p.subposet(["a", "b"])
    r = restrict(a, sub)
    assert r.poset == sub and set(r.support()) <= {("a", "a"), ("a", "b"), ("b", "b")}
    back = extend_by_zero(r, p)
    assert back + extend_by_zero(restrict(a, p.subposet(["c"])), p) == a


def test_items_in_segment_order():
    p = Poset(["z", "y", "x"], [("z", "x"), ("y", "x")])
    s = zeta(p)
    assert s.support() == [tuple(seg) for seg in p.segments()]
