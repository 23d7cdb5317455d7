"""Convex cones with apex O in the plane, and their lattice points.

A ray is either rational, given by a primitive integer vector, or
irrational, given by ``x_sign * (1, slope)`` with a quadratic irrational
slope.  Irrational rays carry no lattice point other than O, so their
``included`` flag is meaningless; it is forced to ``False`` and the ray
remembers that it was coerced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Union

from .errors import DegenerateCone
from .exact import ExactReal, QuadIrr, as_exact, compare, format_number, sign, surd_sign
from .lattice import Point, Unimodular
from .special import SpecialMonoidSpec


@dataclass(frozen=True)
class Ray:
    vector: Optional[tuple[int, int]] = None
    x_sign: int = 0
    slope: Optional[QuadIrr] = None
    included: bool = False
    coerced: bool = False

    @classmethod
    def from_vector(cls, x: int, y: int, included: bool = False) -> Ray:
        if x == 0 and y == 0:
            raise DegenerateCone("a ray needs a nonzero direction")
        g = gcd(x, y)
        return cls(vector=(x // g, y // g), included=bool(included))

    @classmethod
    def from_slope(cls, x_sign: int, slope, included: bool = False) -> Ray:
        if x_sign not in (1, -1):
            raise ValueError("x_sign must be +1 or -1")
        slope = as_exact(slope)
        if not isinstance(slope, QuadIrr):
            return cls.from_vector(x_sign * slope.denominator, x_sign * slope.numerator, included)
        return cls(x_sign=x_sign, slope=slope, included=False, coerced=bool(included))

    @classmethod
    def vertical(cls, up: bool, included: bool = False) -> Ray:
        return cls.from_vector(0, 1 if up else -1, included)

    @property
    def is_rational(self) -> bool:
        return self.vector is not None

    def components(self) -> tuple[ExactReal, ExactReal]:
        if self.vector is not None:
            return Fraction(self.vector[0]), Fraction(self.vector[1])
        return Fraction(self.x_sign), self.x_sign * self.slope

    def side(self, p) -> int:
        """Sign of ``cross(direction, p)``: +1 left of the ray's line, -1 right."""
        x, y = p
        if self.vector is not None:
            dx, dy = self.vector
            v = dx * y - dy * x
            return (v > 0) - (v < 0)
        s = self.slope
        # x_sign * (y - slope*x) = x_sign * (c*y - a*x - b*x*sqrt(d)) / c
        return self.x_sign * surd_sign(s.c * y - s.a * x, -s.b * x, s.d)

    def along(self, p) -> int:
        """Sign of ``dot(direction, p)``."""
        x, y = p
        if self.vector is not None:
            v = self.vector[0] * x + self.vector[1] * y
            return (v > 0) - (v < 0)
        s = self.slope
        return self.x_sign * surd_sign(s.c * x + s.a * y, s.b * y, s.d)

    def opposite(self, included: Optional[bool] = None) -> Ray:
        inc = self.included if included is None else included
        if self.vector is not None:
            return Ray(vector=(-self.vector[0], -self.vector[1]), included=inc)
        return Ray(x_sign=-self.x_sign, slope=self.slope, coerced=self.coerced or inc)

    def with_included(self, included: bool) -> Ray:
        if self.vector is None:
            return Ray(x_sign=self.x_sign, slope=self.slope, coerced=bool(included))
        return Ray(vector=self.vector, included=bool(included))

    def image(self, m: Unimodular, included: Optional[bool] = None) -> Ray:
        inc = self.included if included is None else included
        if self.vector is not None:
            return Ray(vector=tuple(m(self.vector)), included=inc)
        u, w = self.components()
        iu = m.m11 * u + m.m12 * w
        iw = m.m21 * u + m.m22 * w
        return Ray.from_slope(sign(iu), iw / iu, False).with_included(inc or self.coerced)

    def describe(self) -> str:
        if self.vector is not None:
            return f"vector{self.vector}"
        return f"x_sign={self.x_sign} slope={format_number(self.slope)}"


def cross_sign(r1: Ray, r2: Ray) -> int:
    """Sign of ``cross(r1, r2)``; positive when ``r2`` is counterclockwise of ``r1``."""
    if r2.vector is not None:
        return r1.side(r2.vector)
    if r1.vector is not None:
        return -r2.side(r1.vector)
    # x1 x2 (slope2 - slope1)
    return r1.x_sign * r2.x_sign * compare(r2.slope, r1.slope)


@dataclass(frozen=True)
class FullPlane:
    def contains(self, p) -> bool:
        return True

    def rays(self) -> tuple[Ray, ...]:
        return ()


@dataclass(frozen=True)
class HalfPlane:
    """Closed half-plane left of ``boundary``, i.e. ``{v : cross(d, v) >= 0}``.

    ``boundary.included`` says whether the ray along ``d`` belongs to the cone,
    ``opposite_included`` the same for ``-d``.
    """

    boundary: Ray
    opposite_included: bool = False

    def __post_init__(self):
        if not self.boundary.is_rational and self.opposite_included:
            object.__setattr__(self, "opposite_included", False)
            object.__setattr__(self, "boundary", Ray(
                x_sign=self.boundary.x_sign, slope=self.boundary.slope, coerced=True))

    @classmethod
    def from_normal(cls, nx: int, ny: int, included=(False, False)) -> HalfPlane:
        """Half-plane ``{nx*x + ny*y >= 0}``; flags for ``d`` and ``-d``, ``d = (ny, -nx)``."""
        return cls(Ray.from_vector(ny, -nx, included[0]), bool(included[1]))

    @property
    def is_rational(self) -> bool:
        return self.boundary.is_rational

    def rays(self) -> tuple[Ray, ...]:
        return (self.boundary, self.boundary.opposite(self.opposite_included))

    def contains(self, p) -> bool:
        if p[0] == 0 and p[1] == 0:
            return True
        s = self.boundary.side(p)
        if s:
            return s > 0
        return self.boundary.included if self.boundary.along(p) > 0 else self.opposite_included


@dataclass(frozen=True)
class Sector:
    """Cone between ``low`` and ``high`` (counterclockwise), angle in ``(0, pi)``."""

    low: Ray
    high: Ray

    def __post_init__(self):
        c = cross_sign(self.low, self.high)
        if c == 0:
            raise DegenerateCone("sector rays are collinear")
        if c < 0:
            raise DegenerateCone("sector rays are not in counterclockwise order within an angle < pi")

    def rays(self) -> tuple[Ray, ...]:
        return (self.low, self.high)

    def contains(self, p) -> bool:
        if p[0] == 0 and p[1] == 0:
            return True
        c1 = self.low.side(p)
        c2 = -self.high.side(p)
        if c1 > 0 and c2 > 0:
            return True
        if c1 == 0 and c2 > 0:
            return self.low.included
        if c2 == 0 and c1 > 0:
            return self.high.included
        return False

    def interior(self, p) -> bool:
        return self.low.side(p) > 0 and self.high.side(p) < 0


ConeSpec = Union[FullPlane, HalfPlane, Sector]


def special_cone(spec: SpecialMonoidSpec) -> Sector:
    """The sector whose lattice points form the given special monoid."""
    fam = spec.family
    return Sector(
        Ray.from_vector(1, 0, fam.axis_included),
        Ray.from_slope(1, spec.alpha, fam.slope_included),
    )


def transform_cone(c: ConeSpec, m: Unimodular) -> ConeSpec:
    """Image of the cone under ``m``; the lattice points map bijectively."""
    if isinstance(c, FullPlane):
        return c
    if isinstance(c, Sector):
        lo, hi = c.low.image(m), c.high.image(m)
        return Sector(lo, hi) if m.det == 1 else Sector(hi, lo)
    d = c.boundary.image(m)
    if m.det == 1:
        return HalfPlane(d, c.opposite_included)
    # orientation flips: the region lies left of -m(d)
    return HalfPlane(d.opposite(c.opposite_included), c.boundary.included)


def is_strictly_convex(c: ConeSpec) -> bool:
    return isinstance(c, Sector)


def warnings_for(c: ConeSpec) -> list[str]:
    out = []
    for r in c.rays():
        if r.coerced:
            out.append(f"irrational ray {r.describe()} holds no lattice point; 'included' ignored")
    return out
