"""Exact coefficient fields.

Two backends share one scalar type: the rationals (backed by
:class:`fractions.Fraction`, which already keeps lowest terms with a
positive denominator) and prime fields ``Z/p`` for primes ``p < 2**31``.

>>> a, b = QQ(1, 2), QQ(1, 3)
>>> a + b
FieldScalar(QQ, 5/6)
>>> GF(7)(3).inverse()
FieldScalar(GF(7), 5)
"""

from fractions import Fraction
import numbers
import re

from .errors import DivisionByZero, MixedFields, ParseError

__all__ = [
    "Field", "RationalField", "PrimeField", "FieldScalar", "QQ", "GF",
    "parse_field", "add", "sub", "mul", "div", "neg", "inverse", "is_zero",
    "from_integer",
]

PRIME_LIMIT = 2 ** 31


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


_set = object.__setattr__


class Field:
    """A coefficient field.  Calling the field coerces a value into it."""

    characteristic = 0

    def __call__(self, value, denominator=None):
        if denominator is not None:
            return self.from_fraction(value, denominator)
        if isinstance(value, FieldScalar):
            if value.field != self:
                raise MixedFields(f"{value.field} element given where {self} expected")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, numbers.Integral):
            return self.from_integer(int(value))
        if isinstance(value, Fraction):
            return self.from_fraction(value.numerator, value.denominator)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    @property
    def zero(self):
        return self.from_integer(0)

    @property
    def one(self):
        return self.from_integer(1)

    def _make(self, value):
        s = object.__new__(FieldScalar)
        _set(s, "field", self)
        _set(s, "value", value)
        return s


class RationalField(Field):
    """The field of rational numbers."""

    characteristic = 0
    is_finite = False

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    @property
    def spec(self):
        return "q"

    def from_integer(self, n):
        return self._make(Fraction(n))

    def from_fraction(self, num, den):
        if den == 0:
            raise DivisionByZero("zero denominator")
        return self._make(Fraction(num, den))

    def parse(self, text):
        m = re.fullmatch(r"\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?", text)
        if m is None:
            raise ParseError(f"invalid rational {text!r}; expected 'num' or 'num/den'")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        return self.from_fraction(num, den)

    def format(self, s):
        v = s.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        return 1 / Fraction(a)

    def _reduce(self, raw):
        return raw if type(raw) is Fraction else Fraction(raw)


class PrimeField(Field):
    """The field Z/p."""

    is_finite = True

    def __init__(self, p):
        p = int(p)
        if not (p < PRIME_LIMIT and _is_prime(p)):
            raise ValueError(f"{p} is not a prime below 2**31")
        self.p = p
        self.characteristic = p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    @property
    def spec(self):
        return f"fp:{self.p}"

    @property
    def order(self):
        return self.p

    def elements(self):
        return [self._make(v) for v in range(self.p)]

    def from_integer(self, n):
        return self._make(n % self.p)

    def from_fraction(self, num, den):
        if den % self.p == 0:
            raise DivisionByZero(f"denominator {den} vanishes in {self}")
        return self._make(num * pow(den, -1, self.p) % self.p)

    def parse(self, text):
        m = re.fullmatch(r"\s*(-?\d+)\s*", text)
        if m is None:
            raise ParseError(f"invalid element of {self}: {text!r}; expected decimal digits")
        return self.from_integer(int(m.group(1)))

    def format(self, s):
        return str(s.value)

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _neg(self, a):
        return -a % self.p

    def _inv(self, a):
        return pow(a, -1, self.p)

    def _reduce(self, raw):
        return raw % self.p


QQ = RationalField()
_prime_fields = {}


def GF(p):
    """Return the (cached) prime field Z/p."""
    f = _prime_fields.get(p)
    if f is None:
        f = _prime_fields[p] = PrimeField(p)
    return f


def parse_field(text):
    """Parse ``q`` or ``fp:<p>`` into a field."""
    t = text.strip().lower()
    if t in ("q", "qq"):
        return QQ
    m = re.fullmatch(r"fp:(\d+)", t)
    if m is None:
        raise ParseError(f"unknown field {text!r}; use 'q' or 'fp:<p>'")
    try:
        return GF(int(m.group(1)))
    except ValueError as e:
        raise ParseError(str(e)) from None


class FieldScalar:
    """Immutable exact element of a :class:`Field`.

    Arithmetic with plain integers (and fractions) coerces them into the
    field first; combining scalars of different fields raises
    :class:`MixedFields`.
    """

    __slots__ = ("field", "value")

    def __setattr__(self, name, value):
        if hasattr(self, "value"):
            raise AttributeError("FieldScalar is immutable")
        object.__setattr__(self, name, value)

    def _other(self, other):
        if isinstance(other, FieldScalar):
            if other.field != self.field:
                raise MixedFields(f"cannot combine {self.field} and {other.field} scalars")
            return other.value
        if isinstance(other, (numbers.Integral, Fraction)) and not isinstance(other, bool):
            return self.field(other).value
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.field._make(self.field._add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.field._make(self.field._sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.field._make(self.field._sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.field._make(self.field._mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * self.field._make(o).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.field._make(o) * self.inverse()

    def __neg__(self):
        return self.field._make(self.field._neg(self.value))

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** -n
        r = self.field.one
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def inverse(self):
        if not self.value:
            raise DivisionByZero(f"inverse of zero in {self.field}")
        return self.field._make(self.field._inv(self.value))

    def is_zero(self):
        return not self.value

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.field == other.field and self.value == other.value
        try:
            o = self._other(other)
        except (MixedFields, DivisionByZero):
            return False
        if o is None:
            return NotImplemented
        return self.value == o

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.format(self)

    def __repr__(self):
        return f"FieldScalar({self.field!r}, {self})"

    def __reduce__(self):
        return (_rebuild, (self.field, str(self)))


def _rebuild(field, text):
    return field.parse(text)


# Function-style interface over the operators above.

def add(a, b):
    return a + b


def sub(a, b):
    return a - b


def mul(a, b):
    return a * b


def div(a, b):
    return a / b


def neg(a):
    return -a


def inverse(a):
    return a.inverse()


def is_zero(a):
    return a.is_zero()


def from_integer(field, n):
    return field.from_integer(n)
