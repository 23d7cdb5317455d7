"""Brute-force ground truth for strictly convex cones.

Nothing here touches continued fractions or the canonical-form machinery.
An element ``h`` of ``H = C ∩ Z^2`` is tested for atomhood by scanning every
lattice point of its divisor region ``C ∩ (h - C)``, a parallelogram with
vertices ``O`` and ``h``.  Columns of that parallelogram are computed with
exact floor/ceil of ``slope*x + offset``; the x-extent comes from a rational
interval enclosure rounded outward.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import ceil, floor, isqrt
from typing import Iterator, Optional

from .cones import ConeSpec, FullPlane, Ray, Sector
from .errors import NotMember, NotStrictlyConvex
from .exact import enclose
from .lattice import ORIGIN, Point, box_norm
from .special import AtomReport


def cone_contains(c: ConeSpec, p) -> bool:
    return c.contains(p)


def _floor_surd(a: int, b: int, k: int, d: int) -> int:
    # floor((a + b*sqrt(d)) / k), k > 0, d not a square when b != 0
    if b == 0:
        return a // k
    s = isqrt(b * b * d)
    return (a + s) // k if b > 0 else (a - s - 1) // k


def _ceil_surd(a: int, b: int, k: int, d: int) -> int:
    return -_floor_surd(-a, -b, k, d)


def _surd_sign(a: int, b: int, d: int) -> int:
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0 or (a > 0) == (b > 0):
        return 1 if (b if a == 0 else a) > 0 else -1
    return (1 if a > 0 else -1) if a * a > b * b * d else (1 if b > 0 else -1)


class _Line:
    """The line through O spanned by a ray: ``y = (a + b sqrt d)/k * x``, or ``x = 0``."""

    def __init__(self, ray: Ray):
        self.vertical = False
        if ray.vector is not None:
            vx, vy = ray.vector
            self.dir_x_sign = (vx > 0) - (vx < 0)
            self.dir_y_sign = (vy > 0) - (vy < 0)
            if vx == 0:
                self.vertical = True
                return
            if vx < 0:
                vx, vy = -vx, -vy
            self.a, self.b, self.k, self.d = vy, 0, vx, 1
        else:
            s = ray.slope
            self.dir_x_sign = ray.x_sign
            self.a, self.b, self.k, self.d = s.a, s.b, s.c, s.d

    def offset(self, h) -> tuple[int, int]:
        """``k * (y - slope*x)`` at ``h``, as ``(A, B)`` meaning ``A + B sqrt d``."""
        hx, hy = h
        return self.k * hy - self.a * hx, -self.b * hx

    def floor_at(self, x: int, off: tuple[int, int]) -> int:
        return _floor_surd(self.a * x + off[0], self.b * x + off[1], self.k, self.d)

    def ceil_at(self, x: int, off: tuple[int, int]) -> int:
        return _ceil_surd(self.a * x + off[0], self.b * x + off[1], self.k, self.d)


@lru_cache(maxsize=256)
def _lines(c: Sector) -> tuple[_Line, _Line]:
    return _Line(c.low), _Line(c.high)


def _imul(p, q):
    prods = [p[0] * q[0], p[0] * q[1], p[1] * q[0], p[1] * q[1]]
    return min(prods), max(prods)


def _isub(p, q):
    return p[0] - q[1], p[1] - q[0]


@lru_cache(maxsize=256)
def _enclosures(c: Sector):
    """Rational intervals for both ray directions and for ``cross(low, high) > 0``."""
    bits = 48
    while True:
        lx, ly = (enclose(t, bits) for t in c.low.components())
        ux, uy = (enclose(t, bits) for t in c.high.components())
        k = _isub(_imul(lx, uy), _imul(ly, ux))
        if k[0] > 0:
            return lx, ly, ux, uy, k
        bits *= 2


@dataclass(frozen=True)
class DivisorRegion:
    """``C ∩ (h - C)`` for a sector ``C``: every divisor of ``h`` lies in it."""

    cone: Sector
    apex_shift: Point
    margin: int = 0

    def __post_init__(self):
        if not isinstance(self.cone, Sector):
            raise NotStrictlyConvex("divisor regions are bounded only for sectors")

    def x_bounds(self) -> tuple[int, int]:
        """Integer x-range of the closed parallelogram, rounded outward."""
        hx, hy = self.apex_shift
        low, high = self.cone.low.vector, self.cone.high.vector
        if low is not None and high is not None:
            # exact: the vertex s*low has x = cross(h, high) * low_x / cross(low, high)
            k = low[0] * high[1] - low[1] * high[0]
            num = (hx * high[1] - hy * high[0]) * low[0]
            lo = min(0, hx, num // k, hx - -(-num // k))
            hi = max(0, hx, -(-num // k), hx - num // k)
            return lo - self.margin, hi + self.margin
        lx, ly, ux, uy, k = _enclosures(self.cone)
        # h = s*low + t*high with s = cross(h, high) / cross(low, high)
        cross_h = _isub(_imul((hx, hx), uy), _imul((hy, hy), ux))
        s = (min(cross_h[0] / k[0], cross_h[0] / k[1]), max(cross_h[1] / k[0], cross_h[1] / k[1]))
        px = _imul(lx, s)
        qx = _isub((hx, hx), px)
        lo = min(0, hx, px[0], qx[0])
        hi = max(0, hx, px[1], qx[1])
        return floor(lo) - 1 - self.margin, ceil(hi) + 1 + self.margin

    def column(self, x: int) -> Optional[tuple[int, int]]:
        """Closed y-range of the region at abscissa ``x`` (``None`` if empty)."""
        ylo, yhi = None, None
        h = self.apex_shift
        for line in _lines(self.cone):
            if line.vertical:
                lo_x, hi_x = sorted((0, h[0]))
                if not lo_x <= x <= hi_x:
                    return None
                continue
            off = line.offset(h)
            if _surd_sign(off[0], off[1], line.d) >= 0:
                lo_off, hi_off = (0, 0), off
            else:
                lo_off, hi_off = off, (0, 0)
            a, b = line.ceil_at(x, lo_off), line.floor_at(x, hi_off)
            ylo = a if ylo is None else max(ylo, a)
            yhi = b if yhi is None else min(yhi, b)
            if ylo > yhi:
                return None
        if ylo is None:
            # both rays vertical cannot happen in a sector
            raise AssertionError("degenerate sector")
        return ylo, yhi

    def points(self) -> Iterator[Point]:
        x0, x1 = self.x_bounds()
        for x in range(x0, x1 + 1):
            col = self.column(x)
            if col is None:
                continue
            for y in range(col[0], col[1] + 1):
                yield Point(x, y)


def _require_sector(c) -> Sector:
    if not isinstance(c, Sector):
        raise NotStrictlyConvex(
            f"{type(c).__name__}: elements may have infinitely many divisors; the oracle needs a sector"
        )
    return c


def oracle_is_atom(c: ConeSpec, h, margin: int = 0) -> bool:
    c = _require_sector(c)
    h = Point(*h)
    if h == ORIGIN or not c.contains(h):
        raise NotMember(f"{tuple(h)} is not a nonzero element of the cone")
    for v in DivisorRegion(c, h, margin).points():
        if v == ORIGIN or v == h:
            continue
        if c.contains(v) and c.contains(h - v):
            return False
    return True


def _cone_column(c: Sector, x: int, bound: int) -> Optional[tuple[int, int]]:
    """y-range of the closed cone at abscissa ``x``, clipped to ``[-bound, bound]``."""
    ylo, yhi = -bound, bound
    no_off = (0, 0)
    for line, side in zip(_lines(c), (1, -1)):
        # low: cross(low, v) >= 0 ; high: cross(high, v) <= 0
        if line.vertical:
            # cross((0, t), v) = -t x
            if side * -line.dir_y_sign * x < 0:
                return None
            continue
        if side * line.dir_x_sign > 0:
            ylo = max(ylo, line.ceil_at(x, no_off))
        else:
            yhi = min(yhi, line.floor_at(x, no_off))
    return (ylo, yhi) if ylo <= yhi else None


def oracle_members_in_box(c: ConeSpec, bound: int) -> Iterator[Point]:
    c = _require_sector(c)
    for x in range(-bound, bound + 1):
        col = _cone_column(c, x, bound)
        if col is None:
            continue
        for y in range(col[0], col[1] + 1):
            if c.contains((x, y)):
                yield Point(x, y)


def oracle_atoms_in_box(c: ConeSpec, bound: int, margin: int = 0) -> AtomReport:
    c = _require_sector(c)
    atoms = [
        p for p in oracle_members_in_box(c, bound)
        if p != ORIGIN and oracle_is_atom(c, p, margin)
    ]
    return AtomReport(c, bound, tuple(atoms))


def factor_into_atoms(c: ConeSpec, h, max_factorizations: int = 100) -> list[tuple[Point, ...]]:
    """Distinct factorizations of ``h`` into atoms, as sorted tuples.

    Factorizations are produced in lexicographic order of their atoms, and at
    most ``max_factorizations`` are returned.  ``O`` has the empty
    factorization.
    """
    c = _require_sector(c)
    h = Point(*h)
    if not c.contains(h):
        raise NotMember(f"{tuple(h)} is not an element of the cone")

    @lru_cache(maxsize=None)
    def atom_divisors(g: Point) -> tuple[Point, ...]:
        found = [
            v for v in DivisorRegion(c, g).points()
            if v != ORIGIN and c.contains(v) and c.contains(g - v) and oracle_is_atom(c, v)
        ]
        return tuple(sorted(found))

    out: list[tuple[Point, ...]] = []

    def walk(g: Point, smallest: Optional[Point], acc: list[Point]):
        if len(out) >= max_factorizations:
            return
        if g == ORIGIN:
            out.append(tuple(acc))
            return
        for a in atom_divisors(g):
            if smallest is not None and a < smallest:
                continue
            acc.append(a)
            walk(g - a, a, acc)
            acc.pop()
            if len(out) >= max_factorizations:
                return

    walk(h, None, [])
    return out


def _split_candidates(c, h: Point, radius: int) -> Iterator[Point]:
    """Candidate first summands: the divisor region for sectors, otherwise points
    ``v`` in the box of ``radius`` with ``cross(d, v)`` between 0 and ``cross(d, h)``."""
    if isinstance(c, Sector):
        yield from DivisorRegion(c, h).points()
        return
    if isinstance(c, FullPlane):
        for x in range(-radius, radius + 1):
            for y in range(-radius, radius + 1):
                yield Point(x, y)
        return
    line = _Line(c.boundary)
    if line.vertical:
        lo, hi = sorted((0, h.x))
        for x in range(max(lo, -radius), min(hi, radius) + 1):
            for y in range(-radius, radius + 1):
                yield Point(x, y)
        return
    off = line.offset(h)
    lo_off, hi_off = ((0, 0), off) if _surd_sign(off[0], off[1], line.d) >= 0 else (off, (0, 0))
    for x in range(-radius, radius + 1):
        y0 = max(-radius, line.ceil_at(x, lo_off))
        y1 = min(radius, line.floor_at(x, hi_off))
        for y in range(y0, y1 + 1):
            yield Point(x, y)


def oracle_split(c: ConeSpec, h, radius: int) -> Optional[tuple[Point, Point]]:
    """Some ``h = v + (h - v)`` with both parts non-units, ``|v| <= radius``.

    Works for every cone, including half-planes and the plane, where atomhood
    itself cannot be decided by a finite scan.  A returned split proves that
    ``h`` is not an atom; ``None`` proves nothing.
    """
    h = Point(*h)
    if h == ORIGIN or not c.contains(h):
        raise NotMember(f"{tuple(h)} is not a nonzero element of the cone")
    for v in _split_candidates(c, h, radius):
        if is_nonunit(c, v) and is_nonunit(c, h - v):
            return v, h - v
    return None


def is_unit(c: ConeSpec, h) -> bool:
    return c.contains(h) and c.contains((-h[0], -h[1]))


def is_nonunit(c: ConeSpec, h) -> bool:
    return c.contains(h) and not c.contains((-h[0], -h[1]))


def box_filter(points, bound: int) -> set[Point]:
    return {Point(*p) for p in points if box_norm(p) <= bound}
