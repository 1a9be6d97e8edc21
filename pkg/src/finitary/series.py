"""Series on a finite poset and the convolution algebra they form.

A :class:`Series` is a sparse map from segments ``(x, y)``, ``x <= y``, to
nonzero field scalars.  On a finite poset every series is finitary, so the
whole incidence space is the algebra; :func:`c_alpha` keeps the finitarity
count observable anyway.

>>> from finitary.poset import chain
>>> mu = invert(zeta(chain(3)))
>>> [str(mu[s]) for s in chain(3).segments()]
['1', '-1', '0', '1', '-1', '1']
"""

from .errors import FieldMismatch, NotComparable, NotInvertible, PosetMismatch, UnknownElement
from .field import QQ, FieldScalar

__all__ = [
    "Series", "delta", "delta_x", "zeta", "zero", "unit", "mobius", "add", "sub",
    "scale", "convolve", "power", "commutator", "c_alpha", "is_invertible",
    "invert", "is_radical", "diagonal_part", "restrict", "extend_by_zero",
]


class Series:
    """An element of the incidence algebra of ``poset`` over ``field``.

    ``entries`` is a mapping ``{(x, y): value}`` or an iterable of
    ``(x, y, value)`` triples; values may be field scalars, ints,
    fractions or strings in the field's textual syntax.  Zeros are dropped.
    Series are immutable; ``*`` is convolution (or scaling by a scalar).
    """

    __slots__ = ("poset", "field", "_c", "_rows")

    def __init__(self, poset, entries=(), field=QQ):
        if hasattr(entries, "items"):
            entries = ((x, y, v) for (x, y), v in entries.items())
        c = {}
        for x, y, v in entries:
            x, y = str(x), str(y)
            if not poset.leq(x, y):
                raise NotComparable(f"({x!r}, {y!r}) is not a segment: {x!r} <= {y!r} fails")
            s = field(v)
            if (x, y) in c:
                s = c[(x, y)] + s
            c[(x, y)] = s
        self.poset = poset
        self.field = field
        self._c = {k: v for k, v in c.items() if v.value}
        self._rows = None

    @classmethod
    def _raw(cls, poset, field, raw):
        """Build from ``{(x, y): raw value}`` already known to be valid segments."""
        s = object.__new__(cls)
        s.poset = poset
        s.field = field
        make = field._make
        s._c = {}
        for k, v in raw.items():
            v = field._reduce(v)
            if v:
                s._c[k] = make(v)
        s._rows = None
        return s

    # -- mapping-like access --------------------------------------------

    def __getitem__(self, seg):
        x, y = seg
        v = self._c.get((x, y))
        if v is not None:
            return v
        self.poset.index(x)
        self.poset.index(y)
        return self.field.zero

    def coeff(self, x, y):
        return self[x, y]

    def items(self):
        """Nonzero entries ``((x, y), value)`` in poset segment order."""
        key = self.poset.segment_key
        return sorted(self._c.items(), key=lambda kv: key(kv[0]))

    def support(self):
        return [k for k, _ in self.items()]

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def is_zero(self):
        return not self._c

    def diagonal(self):
        """``{x: alpha(x, x)}`` for every element, zeros included."""
        z = self.field.zero
        return {x: self._c.get((x, x), z) for x in self.poset}

    def rows(self):
        # lo -> [(hi, raw value)], cached; used by convolution and inversion
        if self._rows is None:
            rows = {}
            for (x, y), v in self._c.items():
                rows.setdefault(x, []).append((y, v.value))
            self._rows = rows
        return self._rows

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (self.field == other.field and
                (self.poset is other.poset or self.poset == other.poset) and
                self._c == other._c)

    def __hash__(self):
        return hash((self.field, frozenset(self._c.items())))

    def __repr__(self):
        body = ", ".join(f"({x!r}, {y!r}): {v}" for (x, y), v in self.items())
        return f"Series({{{body}}}, field={self.field!r})"

    # -- algebra --------------------------------------------------------

    def _compatible(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"series over {self.field} and {other.field}")
        if self.poset is not other.poset and self.poset != other.poset:
            raise PosetMismatch("series live on different posets")

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        self._compatible(other)
        raw = {k: v.value for k, v in self._c.items()}
        for k, v in other._c.items():
            raw[k] = raw.get(k, 0) + v.value
        return Series._raw(self.poset, self.field, raw)

    def __neg__(self):
        return Series._raw(self.poset, self.field, {k: -v.value for k, v in self._c.items()})

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Series):
            return convolve(self, other)
        if isinstance(other, FieldScalar) or isinstance(other, int):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, FieldScalar) or isinstance(other, int):
            return scale(other, self)
        return NotImplemented

    def __pow__(self, n):
        return power(self, n)


# -- distinguished elements --------------------------------------------

def zero(poset, field=QQ):
    return Series._raw(poset, field, {})


def delta(poset, field=QQ):
    """The identity: 1 on every diagonal segment."""
    return Series._raw(poset, field, {(x, x): 1 for x in poset})


def delta_x(poset, x, field=QQ):
    """The idempotent that is 1 at ``(x, x)`` and 0 elsewhere."""
    poset.index(x)
    return Series._raw(poset, field, {(x, x): 1})


def zeta(poset, field=QQ):
    """1 on every segment."""
    return Series._raw(poset, field, {tuple(s): 1 for s in poset.segments()})


def unit(poset, x, y, field=QQ):
    """The series that is 1 on the single segment ``(x, y)``."""
    return Series(poset, {(x, y): 1}, field)


# -- linear structure --------------------------------------------------

def add(a, b):
    return a + b


def sub(a, b):
    return a - b


def scale(c, a):
    c = a.field(c).value
    if not c:
        return zero(a.poset, a.field)
    return Series._raw(a.poset, a.field, {k: c * v.value for k, v in a._c.items()})


# -- multiplication ----------------------------------------------------

def convolve(a, b):
    """``(ab)(x, y) = sum over x <= z <= y of a(x, z) b(z, y)``."""
    a._compatible(b)
    brows = b.rows()
    acc = {}
    for x, arow in a.rows().items():
        for z, av in arow:
            for y, bv in brows.get(z, ()):
                k = (x, y)
                acc[k] = acc.get(k, 0) + av * bv
    return Series._raw(a.poset, a.field, acc)


def power(a, n):
    if n < 0:
        return power(invert(a), -n)
    r = delta(a.poset, a.field)
    while n:
        if n & 1:
            r = convolve(r, a)
        a = convolve(a, a)
        n >>= 1
    return r


def commutator(a, b):
    return convolve(a, b) - convolve(b, a)


# -- finitarity counter, invertibility, radical -------------------------

def c_alpha(a, u, v):
    """Number of off-diagonal segments ``[x, y]`` inside ``[u, v]`` where ``a`` is nonzero."""
    p = a.poset
    if not p.leq(u, v):
        raise NotComparable(f"{u!r} <= {v!r} does not hold")
    L = p.leq_table
    iu, iv = p.index(u), p.index(v)
    idx = p._index
    return sum(1 for (x, y) in a._c
               if x != y and L[iu, idx[x]] and L[idx[y], iv])


def is_invertible(a):
    return all(a._c.get((x, x)) is not None for x in a.poset)


def _first_zero_diagonal(a):
    for x in a.poset:
        if (x, x) not in a._c:
            return x
    return None


def invert(a):
    """Two-sided inverse via the diagonal recursion.

    ``b(v, v) = a(v, v)^-1`` and for ``u < v``:
    ``b(u, v) = -a(u, u)^-1 * sum over u < x <= v of a(u, x) b(x, v)``.
    For each ``v`` the elements ``u <= v`` are visited in reverse linear
    extension order, so every ``b(x, v)`` with ``x > u`` is already known.
    """
    x0 = _first_zero_diagonal(a)
    if x0 is not None:
        raise NotInvertible(f"series is not invertible: coefficient at ({x0!r}, {x0!r}) is zero",
                            witness=x0)
    p, f = a.poset, a.field
    inv = f._inv
    diag_inv = {x: inv(a._c[(x, x)].value) for x in p}
    rows = a.rows()
    L = p.leq_table
    idx = p._index
    order = p.linear_extension()
    rev = order[::-1]
    b = {}
    for v in order:
        iv = idx[v]
        col = {v: diag_inv[v]}
        for u in rev:
            if u == v or not L[idx[u], iv]:
                continue
            s = 0
            for x, av in rows.get(u, ()):
                if x != u and L[idx[x], iv]:
                    bx = col.get(x)
                    if bx:
                        s += av * bx
            if s:
                col[u] = f._reduce(-diag_inv[u] * s)
        for u, val in col.items():
            b[(u, v)] = val
    return Series._raw(p, f, b)


def mobius(poset, field=QQ):
    """The inverse of :func:`zeta`."""
    return invert(zeta(poset, field))


def is_radical(a):
    """True iff every diagonal coefficient vanishes."""
    return not any(x == y for (x, y) in a._c)


def diagonal_part(a):
    return Series._raw(a.poset, a.field,
                       {k: v.value for k, v in a._c.items() if k[0] == k[1]})


# -- moving between posets ---------------------------------------------

def restrict(a, subposet):
    """Keep the coefficients on segments lying inside ``subposet``."""
    keep = set(subposet.elements)
    missing = keep.difference(a.poset.elements)
    if missing:
        raise UnknownElement(f"element {sorted(missing)[0]!r} not in the series' poset")
    return Series(subposet, {k: v for k, v in a._c.items()
                             if k[0] in keep and k[1] in keep}, a.field)


def extend_by_zero(a, poset):
    """View ``a`` as a series on a larger poset containing ``a.poset``."""
    return Series(poset, a._c, a.field)
