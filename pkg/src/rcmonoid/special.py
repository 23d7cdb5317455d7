"""Atoms of the monoids between the x-axis and a line of positive slope.

For ``alpha > 0`` the four families are::

    M        {0 <= y <= alpha x}
    Mcirc    {0 <= y <  alpha x} + O
    Mgt0     {0 <  y <= alpha x} + O
    McircGt0 {0 <  y <  alpha x} + O

All atom sets come from the continued fraction of ``alpha``: the points
``A(n, i) = (q_{n,i}, p_{n,i})`` for even ``n >= -2``, plus a shifted ray of
atoms when the slope line is excluded and alpha is rational, plus the band
``(n, 1)`` when the x-axis is excluded.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .contfrac import DEFAULT_MAX_TERMS, CFExpansion, cf_expand, normalize_even
from .errors import InsufficientPrecision, IrrationalAlpha, NotMember
from .exact import ExactReal, QuadIrr, as_exact, ceil_of, compare, floor_of, format_number, sign
from .lattice import Point, box_norm


class Family(str, enum.Enum):
    M = "M"
    MCIRC = "Mcirc"
    MGT0 = "Mgt0"
    MCIRC_GT0 = "McircGt0"

    @property
    def axis_included(self) -> bool:
        return self in (Family.M, Family.MCIRC)

    @property
    def slope_included(self) -> bool:
        return self in (Family.M, Family.MGT0)


# command-line spellings
FAMILY_ALIASES = {"M": Family.M, "Mo": Family.MCIRC, "Mgt0": Family.MGT0, "Mogt0": Family.MCIRC_GT0}
for _f in Family:
    FAMILY_ALIASES.setdefault(_f.value, _f)


def family_for(axis_included: bool, slope_included: bool) -> Family:
    if axis_included:
        return Family.M if slope_included else Family.MCIRC
    return Family.MGT0 if slope_included else Family.MCIRC_GT0


@dataclass(frozen=True)
class SpecialMonoidSpec:
    family: Family
    alpha: ExactReal

    def __post_init__(self):
        fam = Family(self.family)
        alpha = as_exact(self.alpha)
        if sign(alpha) <= 0:
            raise ValueError(f"alpha must be positive, got {format_number(alpha)}")
        # the slope line carries no lattice point besides O when alpha is irrational
        if isinstance(alpha, QuadIrr) and not fam.slope_included:
            fam = Family.M if fam.axis_included else Family.MGT0
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "alpha", alpha)

    def __str__(self):
        return f"{self.family.value}[{format_number(self.alpha)}]"


def sort_atoms(points) -> tuple[Point, ...]:
    return tuple(sorted({Point(*p) for p in points}, key=lambda p: (p.y, p.x)))


@dataclass(frozen=True)
class AtomReport:
    """Atoms with ``max(|x|, |y|) <= bound``, sorted by ``(y, x)``.

    ``complete_up_to_bound`` is always true: every atom inside the box is
    listed.  ``atomic`` is false when the monoid has elements that are not sums
    of atoms.  ``count_formula`` is the closed-form atom count, when one is
    known (family M with rational alpha); it counts all atoms, not only those
    inside the box.
    """

    spec: object
    bound: int
    atoms: tuple[Point, ...]
    complete_up_to_bound: bool = True
    count_formula: Optional[int] = None
    atomic: bool = True
    notes: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "atoms", sort_atoms(self.atoms))
        if any(box_norm(p) > self.bound for p in self.atoms):
            raise ValueError("atom outside the reporting box")

    def atom_set(self) -> frozenset:
        return frozenset(self.atoms)


def member(spec: SpecialMonoidSpec, h) -> bool:
    x, y = h
    if x == 0 and y == 0:
        return True
    fam = spec.family
    if y < 0 or (y == 0 and not fam.axis_included):
        return False
    c = compare(y, spec.alpha * x)
    return c < 0 or (c == 0 and fam.slope_included)


def is_atom(spec: SpecialMonoidSpec, a) -> bool:
    """Atom test for ``M`` and ``Mcirc`` by the best-approximation criterion.

    ``(x0, y0)`` with ``y0 > 0`` is an atom iff no other nonzero member
    ``(x, y)`` with ``0 < y <= y0`` has ``y/x >= y0/x0``.  Such a point also has
    ``x <= x0``, so only the box ``[1, x0] x [1, y0]`` has to be scanned.
    """
    if spec.family not in (Family.M, Family.MCIRC):
        raise ValueError("the slope criterion applies to M and Mcirc only")
    x0, y0 = a
    if (x0, y0) == (0, 0) or not member(spec, a):
        raise NotMember(f"{tuple(a)} is not a nonzero element of {spec}")
    if y0 == 0:
        return x0 == 1
    for x in range(1, x0 + 1):
        for y in range(1, y0 + 1):
            if (x, y) != (x0, y0) and y * x0 >= y0 * x and member(spec, (x, y)):
                return False
    return True


# -- continued-fraction enumeration ----------------------------------------


def _expansion_for(alpha) -> CFExpansion:
    """Expansion used for enumeration: even-normalized when finite."""
    if isinstance(alpha, CFExpansion):
        cf = alpha
    else:
        cf = cf_expand(alpha, DEFAULT_MAX_TERMS)
    if cf.head[0] < 0 or (cf.is_finite and cf.head == (0,)):
        raise ValueError("alpha must be positive")
    return normalize_even(cf) if cf.is_finite else cf


def _needs(cf: CFExpansion, n: int, bound: int):
    if not cf.has_term(n):
        raise InsufficientPrecision(
            f"a_{n} is needed to cover the box of radius {bound}, "
            f"but only {cf.available} quotients are known"
        )


def thm5_points(cf: CFExpansion, bound: int) -> Iterator[Point]:
    """Yield ``A(n, i)`` block by block (even ``n``) until they leave the box.

    Both coordinates never decrease along the sequence, so the first point
    outside the box ends the enumeration.  ``cf`` must be even-normalized when
    finite.  The seam points ``A(n, a_{n+2}) == A(n+2, 0)`` come out twice.
    """
    table = cf.table
    last = cf.last_index if cf.is_finite else None
    n = -2
    while last is None or n <= last - 2:
        _needs(cf, n + 2, bound)
        table.ensure(n + 1)
        pn, qn = table.entry(n)
        pn1, qn1 = table.entry(n + 1)
        for i in range(cf.term(n + 2) + 1):
            pt = Point(qn + i * qn1, pn + i * pn1)
            if box_norm(pt) > bound:
                return
            yield pt
        n += 2


def _thm5_set(cf: CFExpansion, bound: int) -> set[Point]:
    return set(thm5_points(cf, bound))


def _count_formula(cf: CFExpansion) -> int:
    return 1 + sum(cf.head[0::2])


def atoms_thm5(alpha: Union[ExactReal, CFExpansion], bound: int) -> AtomReport:
    """Atoms of ``M_alpha`` inside the box of radius ``bound``.

    ``alpha`` may also be given as a (possibly truncated) expansion; if the
    known quotients run out before the box is covered,
    :class:`InsufficientPrecision` is raised.
    """
    cf = _expansion_for(alpha)
    atoms = _thm5_set(cf, bound)
    count = None
    spec = alpha
    if not isinstance(alpha, CFExpansion):
        spec = SpecialMonoidSpec(Family.M, alpha)
    if cf.is_finite:
        count = _count_formula(cf)
    return AtomReport(spec, bound, tuple(atoms), count_formula=count)


def thm6_base(cf: CFExpansion) -> tuple[Point, Point]:
    """``(A(N-2, a_N - 1), (q_N, p_N))`` for an even-normalized finite expansion."""
    N = cf.last_index
    t = cf.table
    aN = cf.term(N)
    base = Point(t.q(N - 2) + (aN - 1) * t.q(N - 1), t.p(N - 2) + (aN - 1) * t.p(N - 1))
    return base, Point(t.q(N), t.p(N))


def atoms_thm6(alpha: ExactReal, bound: int) -> AtomReport:
    """Atoms of ``Mcirc_alpha`` (slope line excluded) for rational ``alpha``.

    These are the ``M_alpha`` atoms other than ``(q_N, p_N)``, together with
    ``A(N-2, a_N - 1) + k (q_N, p_N)`` for every ``k >= 1``.
    """
    alpha = as_exact(alpha)
    if isinstance(alpha, QuadIrr):
        raise IrrationalAlpha("Mcirc equals M for irrational alpha; use atoms_thm5")
    cf = _expansion_for(alpha)
    base, step = thm6_base(cf)
    atoms = _thm5_set(cf, bound)
    atoms.discard(step)
    k = 1
    while box_norm(pt := base + step.scale(k)) <= bound:
        atoms.add(pt)
        k += 1
    return AtomReport(SpecialMonoidSpec(Family.MCIRC, alpha), bound, tuple(atoms))


def _first_band_x(alpha, strict: bool) -> int:
    """Smallest ``n >= 1`` with ``alpha*n >= 1`` (``> 1`` when strict)."""
    if isinstance(alpha, CFExpansion):
        if alpha.is_finite:
            return _first_band_x(alpha.value(), strict)
        # irrational, so alpha*n == 1 never happens and 1/alpha = [a1; a2, ...]
        if alpha.head[0] >= 1:
            return 1
        _needs(alpha, 1, 0)
        return alpha.term(1) + 1
    inv = 1 / as_exact(alpha)
    return max(1, floor_of(inv) + 1 if strict else ceil_of(inv))


def atoms_thm7(alpha, family: Family, bound: int) -> AtomReport:
    """Atoms of ``Mgt0`` / ``McircGt0``: drop ``(1, 0)``, add the band ``(n, 1)``."""
    family = Family(family)
    if family not in (Family.MGT0, Family.MCIRC_GT0):
        raise ValueError("atoms_thm7 handles Mgt0 and McircGt0")
    strict = family is Family.MCIRC_GT0
    if strict and not isinstance(alpha, CFExpansion) and not isinstance(as_exact(alpha), QuadIrr):
        base = atoms_thm6(alpha, bound)
    else:
        base = atoms_thm5(alpha, bound)
    atoms = set(base.atoms) - {Point(1, 0)}
    atoms.update(Point(n, 1) for n in range(_first_band_x(alpha, strict), bound + 1))
    spec = alpha if isinstance(alpha, CFExpansion) else SpecialMonoidSpec(family, alpha)
    return AtomReport(spec, bound, tuple(atoms))


def enumerate_atoms(spec: SpecialMonoidSpec, bound: int) -> AtomReport:
    if bound < 1:
        raise ValueError("bound must be positive")
    fam = spec.family
    if fam is Family.M:
        rep = atoms_thm5(spec.alpha, bound)
    elif fam is Family.MCIRC:
        # irrational Mcirc is canonicalized to M by SpecialMonoidSpec
        rep = atoms_thm6(spec.alpha, bound)
    else:
        rep = atoms_thm7(spec.alpha, fam, bound)
    return AtomReport(spec, bound, rep.atoms, count_formula=rep.count_formula)
