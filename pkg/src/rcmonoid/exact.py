"""Exact rationals and real quadratic irrationals.

Rationals are plain :class:`fractions.Fraction` values.  A real quadratic
irrational ``(a + b*sqrt(d)) / c`` is a :class:`QuadIrr`.  Every decision in
the package (cone membership, slope comparison, partial quotients) reduces to
an exact sign computation in this module; no floating point is involved.
"""

from __future__ import annotations

import enum
import re
from functools import lru_cache
from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational
from typing import Union

from .errors import SpecError, VerticalImage


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _sgn(n) -> int:
    return (n > 0) - (n < 0)


def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(k, m)`` with ``n == k*k*m`` and ``m`` squarefree."""
    if n < 1:
        raise ValueError("expected a positive integer")
    k, m, rest = 1, 1, n
    p = 2
    while p * p <= rest:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        k *= p ** (e // 2)
        if e % 2:
            m *= p
        p += 1 if p == 2 else 2
    return k, m * rest


@lru_cache(maxsize=1024)
def _square_part(d: int) -> int:
    return squarefree_split(d)[0]


def surd_sign(a: int, b: int, d: int) -> int:
    """Sign of ``a + b*sqrt(d)`` for a non-square ``d > 0``."""
    if b == 0:
        return _sgn(a)
    if a == 0 or (a > 0) == (b > 0):
        return _sgn(b) if a == 0 else _sgn(a)
    # opposite signs; a*a != b*b*d because d is not a square
    return _sgn(a) if a * a > b * b * d else _sgn(b)


class QuadIrr:
    """The real number ``(a + b*sqrt(d)) / c`` with ``b != 0``.

    Instances are canonical (``d`` squarefree, ``c > 0``, ``gcd(a, b, c) == 1``)
    and immutable.  Build them with :func:`quad`, which hands back a
    :class:`~fractions.Fraction` when the value turns out to be rational.
    """

    __slots__ = ("a", "b", "c", "d")

    a: int
    b: int
    c: int
    d: int

    def __init__(self, a: int, b: int, c: int, d: int):
        if b == 0 or c < 1 or d < 2 or gcd(gcd(a, b), c) != 1 or _square_part(d) != 1:
            raise ValueError(f"non-canonical quadratic irrational ({a}+{b}*sqrt({d}))/{c}; use quad()")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @classmethod
    def _trusted(cls, a: int, b: int, c: int, d: int) -> QuadIrr:
        # for callers that have already canonicalized
        obj = object.__new__(cls)
        for k, v in zip(cls.__slots__, (a, b, c, d)):
            object.__setattr__(obj, k, v)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("QuadIrr is immutable")

    def __reduce__(self):
        return (QuadIrr, (self.a, self.b, self.c, self.d))

    def __repr__(self):
        return f"QuadIrr({self.a}, {self.b}, {self.c}, {self.d})"

    def __str__(self):
        return format_number(self)

    def __eq__(self, other):
        if isinstance(other, QuadIrr):
            return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((QuadIrr, self.a, self.b, self.c, self.d))

    # -- field arithmetic (same d only) -------------------------------------

    def _coerce(self, other):
        """Express ``other`` as ``(a, b, c)`` over this value's ``d``."""
        if isinstance(other, QuadIrr):
            if other.d != self.d:
                raise ValueError(f"cannot mix sqrt({self.d}) and sqrt({other.d})")
            return other.a, other.b, other.c
        if isinstance(other, int):
            return other, 0, 1
        if isinstance(other, Fraction):
            return other.numerator, 0, other.denominator
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c = o
        return reduce_parts(self.a * c + a * self.c, self.b * c + b * self.c, self.c * c, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadIrr._trusted(-self.a, -self.b, self.c, self.d)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c = o
        return reduce_parts(self.a * c - a * self.c, self.b * c - b * self.c, self.c * c, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c = o
        d = self.d
        return reduce_parts(self.a * a + self.b * b * d, self.a * b + self.b * a, self.c * c, d)

    __rmul__ = __mul__

    def reciprocal(self):
        # c / (a + b sqrt d) = c (a - b sqrt d) / (a^2 - b^2 d)
        n = self.a * self.a - self.b * self.b * self.d
        return reduce_parts(self.c * self.a, -self.c * self.b, n, self.d)

    def __truediv__(self, other):
        if isinstance(other, QuadIrr):
            return self * other.reciprocal()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.reciprocal() * other
        return NotImplemented

    def conjugate(self) -> QuadIrr:
        return QuadIrr._trusted(self.a, -self.b, self.c, self.d)

    # -- order ---------------------------------------------------------------

    def sign(self) -> int:
        return surd_sign(self.a, self.b, self.d)

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    def __floor__(self):
        s = isqrt(self.b * self.b * self.d)
        m = self.a + s if self.b > 0 else self.a - s - 1
        return m // self.c

    def __ceil__(self):
        return -(-self).__floor__()


ExactReal = Union[Fraction, QuadIrr]


def reduce_parts(a: int, b: int, c: int, d: int) -> ExactReal:
    """Canonical value of ``(a + b*sqrt(d)) / c`` for squarefree ``d >= 2``."""
    if c == 0:
        raise ZeroDivisionError("zero denominator")
    if b == 0:
        return Fraction(a, c)
    if c < 0:
        a, b, c = -a, -b, -c
    g = gcd(gcd(a, b), c)
    if g != 1:
        a, b, c = a // g, b // g, c // g
    return QuadIrr._trusted(a, b, c, d)


def quad(a: int, b: int, c: int, d: int) -> ExactReal:
    """Canonical value of ``(a + b*sqrt(d)) / c`` for any integer ``d >= 0``."""
    if d < 0:
        raise ValueError("negative radicand")
    if d == 0 or b == 0:
        return Fraction(a, c)
    k, m = squarefree_split(d)
    if m == 1:
        return Fraction(a + b * k, c)
    return reduce_parts(a, b * k, c, m)


def as_exact(x) -> ExactReal:
    if isinstance(x, (QuadIrr, Fraction)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not an exact real: {x!r}")


def is_rational(x) -> bool:
    return not isinstance(x, QuadIrr)


def sign(x) -> int:
    if isinstance(x, QuadIrr):
        return x.sign()
    return _sgn(x)


def _cross_field_sign(x: QuadIrr, y: QuadIrr) -> int:
    """Sign of ``x - y`` when ``x`` and ``y`` live in different quadratic fields."""
    k = x.a * y.c - y.a * x.c
    b1, b2 = x.b * y.c, y.b * x.c
    # u = b1 sqrt(d1) - b2 sqrt(d2)
    if (b1 > 0) != (b2 > 0):
        su = _sgn(b1)
    else:
        t = b1 * b1 * x.d - b2 * b2 * y.d
        su = _sgn(t) if b1 > 0 else -_sgn(t)
    sk = _sgn(k)
    if sk == 0 or sk == su:
        return su if sk == 0 else sk
    # compare k^2 with u^2 = b1^2 d1 + b2^2 d2 - 2 b1 b2 sqrt(d1 d2)
    s = surd_sign(k * k - b1 * b1 * x.d - b2 * b2 * y.d, 2 * b1 * b2, x.d * y.d)
    return sk if s > 0 else su


def compare(x, y) -> Ordering:
    """Exact three-way comparison of two exact reals."""
    if isinstance(x, QuadIrr) and isinstance(y, QuadIrr) and x.d != y.d:
        return Ordering(_cross_field_sign(x, y))
    if isinstance(x, QuadIrr) or isinstance(y, QuadIrr):
        return Ordering(sign(x - y))
    return Ordering(_sgn(as_exact(x) - as_exact(y)))


def floor_of(x) -> int:
    if isinstance(x, QuadIrr):
        return x.__floor__()
    x = as_exact(x)
    return x.numerator // x.denominator


def ceil_of(x) -> int:
    return -floor_of(-as_exact(x))


def moebius_transform(x, m) -> ExactReal:
    """Slope of the image of the direction ``(1, x)`` under the point map ``m``.

    ``m`` is any ``[[m11, m12], [m21, m22]]``-like object or a
    :class:`~rcmonoid.lattice.Unimodular`.
    """
    if hasattr(m, "m11"):
        m11, m12, m21, m22 = m.m11, m.m12, m.m21, m.m22
    else:
        (m11, m12), (m21, m22) = m
    x = as_exact(x)
    den = m11 + m12 * x
    if sign(den) == 0:
        raise VerticalImage(f"image of slope {format_number(x)} is vertical")
    num = m21 + m22 * x
    return num / den


def enclose(x, bits: int = 64) -> tuple[Fraction, Fraction]:
    """Rational interval ``[lo, hi]`` of width ``2**-bits`` containing ``x``."""
    x = as_exact(x)
    if not isinstance(x, QuadIrr):
        return x, x
    scale = 1 << bits
    k = floor_of(x * scale)
    return Fraction(k, scale), Fraction(k + 1, scale)


def to_float(x) -> float:
    """Nearest-ish float, for drawing only."""
    lo, hi = enclose(x, 80)
    return float((lo + hi) / 2)


_INT = r"-?\d+"
_RE_INT = re.compile(rf"^({_INT})$")
_RE_FRAC = re.compile(rf"^({_INT})/(\d+)$")
_RE_QUAD = re.compile(rf"^\(({_INT})\+({_INT})\*sqrt\((\d+)\)\)/(\d+)$")


def parse_number(text: str) -> ExactReal:
    """Parse ``INT``, ``INT/POSINT`` or ``(INT+INT*sqrt(POSINT))/POSINT``."""
    if not isinstance(text, str):
        if isinstance(text, int) and not isinstance(text, bool):
            return Fraction(text)
        raise SpecError(f"expected a number literal string, got {text!r}")
    if m := _RE_INT.match(text):
        return Fraction(int(m.group(1)))
    if m := _RE_FRAC.match(text):
        den = int(m.group(2))
        if den == 0:
            raise SpecError(f"zero denominator in {text!r}")
        return Fraction(int(m.group(1)), den)
    if m := _RE_QUAD.match(text):
        a, b, d, c = (int(g) for g in m.groups())
        if d == 0 or c == 0:
            raise SpecError(f"radicand and denominator must be positive in {text!r}")
        return quad(a, b, c, d)
    raise SpecError(f"malformed number literal {text!r}")


def format_number(x) -> str:
    x = as_exact(x)
    if isinstance(x, QuadIrr):
        return f"({x.a}+{x.b}*sqrt({x.d}))/{x.c}"
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
