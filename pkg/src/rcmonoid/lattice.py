"""Lattice points and unimodular maps of Z^2."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import NotUnimodular


class Point(NamedTuple):
    x: int
    y: int

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point(self.x - other[0], self.y - other[1])

    def __neg__(self):
        return Point(-self.x, -self.y)

    def scale(self, k: int) -> Point:
        return Point(k * self.x, k * self.y)


ORIGIN = Point(0, 0)


def box_norm(p) -> int:
    return max(abs(p[0]), abs(p[1]))


@dataclass(frozen=True)
class Unimodular:
    """Integer 2x2 matrix ``[[m11, m12], [m21, m22]]`` with determinant +1 or -1.

    Acts on column vectors: ``(x, y) -> (m11*x + m12*y, m21*x + m22*y)``.
    """

    m11: int
    m12: int
    m21: int
    m22: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise NotUnimodular(f"determinant {self.det} of {self.rows()} is not +-1")

    @classmethod
    def from_rows(cls, rows) -> Unimodular:
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    def rows(self) -> list[list[int]]:
        return [[self.m11, self.m12], [self.m21, self.m22]]

    def inverse(self) -> Unimodular:
        d = self.det
        return Unimodular(d * self.m22, -d * self.m12, -d * self.m21, d * self.m11)

    def __matmul__(self, other: Unimodular) -> Unimodular:
        return Unimodular(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def __call__(self, p) -> Point:
        x, y = p
        return Point(self.m11 * x + self.m12 * y, self.m21 * x + self.m22 * y)

    def row_norm(self) -> int:
        """Operator norm for the max-norm: the largest absolute row sum."""
        return max(abs(self.m11) + abs(self.m12), abs(self.m21) + abs(self.m22))


IDENTITY = Unimodular(1, 0, 0, 1)
SIGMA_X = Unimodular(1, 0, 0, -1)  # reflection at the x-axis
SIGMA_Y = Unimodular(-1, 0, 0, 1)  # reflection at the y-axis
TAU = Unimodular(0, -1, 1, 0)  # rotation by +90 degrees


def shear(n: int) -> Unimodular:
    """``[[1, n], [0, 1]]``."""
    return Unimodular(1, n, 0, 1)


def apply_unimodular(points: Iterable, m: Unimodular) -> list[Point]:
    if not isinstance(m, Unimodular):
        m = Unimodular.from_rows(m)
    return [m(p) for p in points]


def bezout(x: int, y: int) -> tuple[int, int]:
    """Return ``(s, t)`` with ``s*x + t*y == 1`` for coprime ``x, y``.

    The solution is normalized so that ``0 <= s < |y|`` when ``y != 0``.
    """
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    if old_r != 1:
        raise ValueError(f"({x}, {y}) is not primitive")
    if y != 0:
        k = old_s // abs(y)
        old_s -= k * abs(y)
        old_t += k * x if y > 0 else -k * x
    return old_s, old_t
