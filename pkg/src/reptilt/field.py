"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields.

Every matrix entry in this package is either a ``fractions.Fraction`` or a
``GFElement``; no floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction

try:  # gmpy2.mpq is a drop-in exact rational, much faster than Fraction
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover
    _mpq = Fraction


class Rationals:
    """The field of rational numbers (default ground field)."""

    name = "Q"

    @property
    def zero(self):
        return _mpq(0)

    @property
    def one(self):
        return _mpq(1)

    def of(self, x):
        if isinstance(x, Fraction):
            return _mpq(x.numerator, x.denominator)
        return _mpq(x)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class GFElement:
    """Element of a prime field, with operator arithmetic mod p."""

    __slots__ = ("p", "v")

    def __init__(self, p, v):
        self.p = p
        self.v = v % p

    def __add__(self, other):
        return GFElement(self.p, self.v + other.v)

    def __sub__(self, other):
        return GFElement(self.p, self.v - other.v)

    def __mul__(self, other):
        return GFElement(self.p, self.v * other.v)

    def __truediv__(self, other):
        if other.v % other.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GFElement(self.p, self.v * pow(other.v, self.p - 2, self.p))

    def __neg__(self):
        return GFElement(self.p, -self.v)

    def __bool__(self):
        return self.v % self.p != 0

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.v % self.p == other.v % other.p
        if isinstance(other, int):
            return self.v % self.p == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v % self.p))

    def __repr__(self):
        return "%d" % (self.v % self.p)


class PrimeField:
    """GF(p) for a prime p, used for cross-checking rational computations."""

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError("p must be prime, got %r" % (p,))
        self.p = p
        self.name = "F%d" % p

    @property
    def zero(self):
        return GFElement(self.p, 0)

    @property
    def one(self):
        return GFElement(self.p, 1)

    def of(self, x):
        if isinstance(x, GFElement):
            return x
        if isinstance(x, Fraction):
            num = GFElement(self.p, x.numerator)
            den = GFElement(self.p, x.denominator)
            return num / den
        return GFElement(self.p, x)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = Rationals()


def parse_field(spec):
    """Parse a ``--field`` CLI value: ``q`` or ``fp:<prime>``."""
    if spec in ("q", "Q", "qq", "QQ"):
        return QQ
    if spec.startswith("fp:"):
        return PrimeField(int(spec[3:]))
    raise ValueError("unknown field spec %r (expected 'q' or 'fp:<p>')" % spec)
