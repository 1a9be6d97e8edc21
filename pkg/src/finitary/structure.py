"""Idempotents, regular elements and superregular elements.

The central constructions:

* :func:`conjugate_to_diagonal` writes an idempotent ``a`` as
  ``b^-1 e b`` with ``e`` its diagonal part, using the explicit conjugator
  ``b = delta + (2e - delta)(a - e)``.
* :func:`regular_factorization` writes a regular ``a`` (one with
  ``a x a = a`` for some ``x``) as ``beta * eps * gamma`` with ``beta``,
  ``gamma`` invertible and ``eps`` a diagonal idempotent.
* :func:`is_superregular` tests the componentwise "invertible or zero"
  characterization of elements with a unique reflexive inverse.
"""

from contextlib import contextmanager
from dataclasses import dataclass

from . import linalg
from .errors import IdentityCheckFailed, NotAComponent, NotAWitness, NotIdempotent
from .series import (
    Series, convolve, delta, diagonal_part, invert, is_invertible, is_radical, restrict,
)

__all__ = [
    "RegularFactorization", "is_idempotent", "diagonal_part", "is_diagonal",
    "conjugate_to_diagonal", "is_primitive_idempotent", "regular_witness",
    "is_regular", "reflexive_inverse", "is_reflexive_inverse",
    "regular_factorization", "is_superregular", "restrict_to_component",
    "debug_identities",
]

# When true, conjugate_to_diagonal also checks the two intermediate
# identities its proof of correctness rests on.
DEBUG_IDENTITIES = False


@contextmanager
def debug_identities(enabled=True):
    global DEBUG_IDENTITIES
    old, DEBUG_IDENTITIES = DEBUG_IDENTITIES, enabled
    try:
        yield
    finally:
        DEBUG_IDENTITIES = old


def _check(cond, what):
    if not cond:
        raise IdentityCheckFailed(what)


@dataclass(frozen=True)
class RegularFactorization:
    """``beta * epsilon * gamma`` with ``beta``, ``gamma`` invertible, ``epsilon`` a diagonal idempotent."""

    beta: Series
    epsilon: Series
    gamma: Series

    def product(self):
        return convolve(convolve(self.beta, self.epsilon), self.gamma)


def is_idempotent(a):
    return convolve(a, a) == a


def is_diagonal(a):
    return all(x == y for x, y in a.support())


def conjugate_to_diagonal(a, debug=None):
    """Return ``(eps, beta)`` such that ``a == invert(beta) * eps * beta``.

    ``eps`` is the diagonal part of ``a``.  Raises :class:`NotIdempotent`
    unless ``a * a == a``.
    """
    if debug is None:
        debug = DEBUG_IDENTITIES
    if not is_idempotent(a):
        raise NotIdempotent("series is not idempotent")
    d = delta(a.poset, a.field)
    eps = diagonal_part(a)
    rho = a - eps
    if debug:
        _check(is_radical(rho), "a - eps is not radical")
        er, re_, rr = eps * rho, rho * eps, rho * rho
        _check(er + re_ == rho - rr, "eps*rho + rho*eps == rho - rho^2")
        _check(er * eps + eps * rr == rho * 0, "eps*rho*eps + eps*rho^2 == 0")
    beta = d + (eps * 2 - d) * rho
    binv = invert(beta)
    _check(binv * eps * beta == a, "conjugation does not reconstruct the idempotent")
    return eps, beta


def is_primitive_idempotent(a):
    """An idempotent is primitive iff exactly one diagonal entry is 1."""
    if not is_idempotent(a):
        raise NotIdempotent("series is not idempotent")
    return sum(1 for x, y in a.support() if x == y) == 1


def _sandwich_system(a):
    """Linear system ``M chi = a`` equivalent to ``a * chi * a == a``."""
    segs = [tuple(s) for s in a.poset.segments()]
    col = {s: j for j, s in enumerate(segs)}
    row = col
    raw = {k: v.value for k, v in a.items()}
    by_hi = {}
    for (w, y), v in raw.items():
        by_hi.setdefault(w, []).append((y, v))
    zero = a.field._reduce(0)
    M = [[zero] * len(segs) for _ in segs]
    L, idx = a.poset.leq_table, a.poset._index
    # (a chi a)(x, y) = sum a(x, z) chi(z, w) a(w, y) over x <= z <= w <= y
    for (x, z), axz in raw.items():
        iz = idx[z]
        for w in a.poset.elements:
            if not L[iz, idx[w]]:
                continue
            for y, awy in by_hi.get(w, ()):
                r = M[row[(x, y)]]
                j = col[(z, w)]
                r[j] = r[j] + axz * awy
    rhs = [raw.get(s, zero) for s in segs]
    return segs, M, rhs


def regular_witness(a):
    """A series ``chi`` with ``a * chi * a == a``, or None if ``a`` is not regular.

    Solves the linear system in the unknowns ``chi(u, v)`` by exact
    elimination; free unknowns are set to zero.
    """
    segs, M, rhs = _sandwich_system(a)
    if not segs:
        return Series(a.poset, {}, a.field)
    sol = linalg.solve(a.field, M, rhs)
    if sol is None:
        return None
    chi = Series._raw(a.poset, a.field, dict(zip(segs, sol)))
    _check(convolve(convolve(a, chi), a) == a, "solver returned a non-witness")
    return chi


def is_regular(a):
    return regular_witness(a) is not None


def is_reflexive_inverse(a, b):
    """Both ``a b a == a`` and ``b a b == b``."""
    return a * b * a == a and b * a * b == b


def reflexive_inverse(a, chi):
    """``chi * a * chi``, a reflexive generalized inverse of ``a``."""
    if convolve(convolve(a, chi), a) != a:
        raise NotAWitness("a * chi * a != a")
    star = chi * a * chi
    _check(is_reflexive_inverse(a, star), "chi a chi is not a reflexive inverse")
    return star


def regular_factorization(a, chi=None, debug=None):
    """Factor a regular element as ``beta * epsilon * gamma``.

    ``chi`` must satisfy ``a * chi * a == a``; it is searched for with
    :func:`regular_witness` when omitted.  ``epsilon(x, x)`` is zero exactly
    where ``a(x, x)`` is.
    """
    if chi is None:
        chi = regular_witness(a)
        if chi is None:
            raise NotAWitness("element is not regular")
    elif convolve(convolve(a, chi), a) != a:
        raise NotAWitness("a * chi * a != a")
    # a chi = eta^-1 eps eta and chi a = gamma^-1 eps1 gamma
    eps, eta = conjugate_to_diagonal(convolve(a, chi), debug)
    eps1, gamma = conjugate_to_diagonal(convolve(chi, a), debug)
    _check(eps == eps1, "left and right idempotents have different diagonals")
    m = eta * a * invert(gamma)
    # m = eta1 * eps + rho with eta1 diagonal invertible, rho radical;
    # off the support of eps, eta1 is completed by 1
    md = m.diagonal()
    ed = eps.diagonal()
    eta1 = Series(a.poset, {(x, x): (md[x] if ed[x] else 1) for x in a.poset}, a.field)
    rho = m - eta1 * eps
    _check(is_radical(rho), "m - eta1 eps is not radical")
    beta = invert(eta) * (eta1 + eps * rho)
    fac = RegularFactorization(beta, eps, gamma)
    _check(fac.product() == a, "factorization does not reconstruct the element")
    _check(is_invertible(beta) and is_invertible(gamma), "factors are not invertible")
    _check(all(bool(ed[x]) == bool(a[x, x]) for x in a.poset),
           "eps(x, x) == 0 iff a(x, x) == 0 fails")
    return fac


def restrict_to_component(a, component):
    """The restriction of ``a`` to a connected component, as a series on the induced subposet."""
    comp = set(component)
    comps = [set(c) for c in a.poset.connected_components()]
    if comp not in comps:
        raise NotAComponent(f"{sorted(comp)!r} is not a connected component")
    return restrict(a, a.poset.subposet(comp))


def is_superregular(a):
    """True iff on every connected component ``a`` is zero or invertible."""
    support = set(a.support())
    for comp in a.poset.connected_components():
        diag = [(x, x) in support for x in comp]
        if all(diag):
            continue
        # every segment lies inside one component, so lo alone places it
        cs = set(comp)
        if any(x in cs for x, _ in support):
            return False
    return True
