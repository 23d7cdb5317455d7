"""Classification of root-closed monoids ``H = C ∩ Z^2`` and their atoms.

Every convex cone ``C`` spanning the plane is moved by a unimodular map
``phi`` onto one of a short list of canonical shapes::

    A   the whole plane                     (a group, no atoms)
    B1  y >= 0, both boundary rays in H     (atoms: the band y == 1)
    B2  y >= 0, only the positive x-axis    (single atom (1, 0), not atomic)
    B3  y > 0 plus O                        (atoms: the band y == 1)
    B4  y <= alpha x, alpha irrational > 0  (no atoms)
    C1  one of the four special monoids     (see :mod:`rcmonoid.special`)
    C2  H1 ∪ sigma_x(H2) for two special monoids of type M / Mcirc

Atoms of ``H`` are the preimages ``phi^-1`` of the canonical atoms.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .contfrac import DEFAULT_MAX_TERMS, cf_expand
from .cones import ConeSpec, FullPlane, HalfPlane, Ray, Sector, transform_cone, warnings_for
from .errors import DegenerateCone, InsufficientPrecision, NotMember
from .exact import ExactReal, QuadIrr, as_exact, compare, sign
from .lattice import IDENTITY, SIGMA_X, SIGMA_Y, TAU, Point, Unimodular, bezout, box_norm, shear
from .special import AtomReport, Family, SpecialMonoidSpec, enumerate_atoms, family_for, member


@dataclass(frozen=True)
class Classification:
    case: str
    phi: Unimodular
    canonical: object = None
    warnings: tuple[str, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class C2Canonical:
    """``upper ∪ sigma_x(lower)``."""

    upper: SpecialMonoidSpec
    lower: SpecialMonoidSpec


@dataclass(frozen=True)
class PropertyFlags:
    root_closed: bool
    completely_integrally_closed: bool
    krull: bool
    primary_reduced: bool


def _to_x_axis(v: tuple[int, int], left: bool) -> Unimodular:
    """Map the primitive ``v`` to ``(1, 0)``; the side left of ``v`` (or right,
    if not ``left``) goes to the upper half-plane."""
    vx, vy = v
    s, t = bezout(vx, vy)
    if left:
        return Unimodular(s, t, -vy, vx)
    return Unimodular(s, t, vy, -vx)


def _slope_of(r: Ray) -> ExactReal:
    u, w = r.components()
    return w / u


def _classify_halfplane(c: HalfPlane) -> tuple[str, Unimodular, object]:
    d = c.boundary
    if d.is_rational:
        phi = _to_x_axis(d.vector, left=True)
        inc_pos, inc_neg = d.included, c.opposite_included
        if inc_pos and inc_neg:
            return "B1", phi, None
        if not inc_pos and not inc_neg:
            return "B3", phi, None
        if inc_neg:
            phi = SIGMA_Y @ phi
        return "B2", phi, None
    # y <= alpha x is the region left of (-1, -alpha): rotate d into the
    # open third quadrant
    rot = IDENTITY
    for _ in range(4):
        img = d.image(rot)
        u, w = img.components()
        if sign(u) < 0 and sign(w) < 0:
            return "B4", rot, _slope_of(img)
        rot = TAU @ rot
    raise AssertionError("an irrational direction lies in an open quadrant")


def _classify_c1(c: Sector) -> tuple[Unimodular, SpecialMonoidSpec]:
    if c.low.is_rational:
        axis, other = c.low, c.high
        phi = _to_x_axis(axis.vector, left=True)
    else:
        axis, other = c.high, c.low
        phi = _to_x_axis(axis.vector, left=False)
    img = other.image(phi)
    u, _ = img.components()
    if sign(u) <= 0:
        canon = transform_cone(c, phi)
        n = 1
        while canon.contains((-n, 1)):
            n += 1
        phi = shear(n + 1) @ phi
        img = other.image(phi)
    family = family_for(axis.included, other.included)
    return phi, SpecialMonoidSpec(family, _slope_of(img))


def _classify_c2(c: Sector, max_terms: int) -> tuple[Unimodular, C2Canonical]:
    ray = c.low
    cf = cf_expand(ray.slope, max_terms)
    table = cf.table
    n = 0
    while cf.has_term(n + 1):
        qn, pn = table.q(n), table.p(n)
        qn1, pn1 = table.q(n + 1), table.p(n + 1)
        for eps in (ray.x_sign, -ray.x_sign):
            v = (eps * qn, eps * pn)
            w = (eps * qn1, eps * pn1)
            if c.contains(v) or c.contains((-v[0], -v[1])) or not c.interior(w):
                continue
            (q, p), (q1, p1) = v, w
            delta = p * q1 - p1 * q
            phi = Unimodular(delta * p, -delta * q, -delta * p1, delta * q1)
            return phi, _c2_canonical(c, phi)
        n += 1
    raise InsufficientPrecision(
        f"no convergent of {ray.describe()} within {cf.available} quotients separates the cone"
    )


def _c2_canonical(c: Sector, phi: Unimodular) -> C2Canonical:
    upper = lower = None
    for r in c.rays():
        img = r.image(phi)
        u, w = img.components()
        assert sign(u) > 0
        slope = w / u
        fam = Family.M if r.included else Family.MCIRC
        if sign(slope) > 0:
            upper = SpecialMonoidSpec(fam, slope)
        else:
            lower = SpecialMonoidSpec(fam, -slope)
    return C2Canonical(upper, lower)


def classify_and_normalize(c: ConeSpec, max_terms: int = DEFAULT_MAX_TERMS) -> Classification:
    """Find the canonical shape of ``H = c ∩ Z^2`` and the map ``phi`` onto it."""
    warn = tuple(warnings_for(c))
    if isinstance(c, FullPlane):
        return Classification("A", IDENTITY, None, warn)
    if isinstance(c, HalfPlane):
        case, phi, canon = _classify_halfplane(c)
        return Classification(case, phi, canon, warn)
    if not isinstance(c, Sector):
        raise DegenerateCone(f"not a cone specification: {c!r}")
    if c.low.is_rational or c.high.is_rational:
        phi, canon = _classify_c1(c)
        return Classification("C1", phi, canon, warn)
    phi, canon = _classify_c2(c, max_terms)
    return Classification("C2", phi, canon, warn)


def canonical_contains(cl: Classification, p) -> bool:
    """Membership in the canonical monoid of a classification."""
    x, y = p
    if x == 0 and y == 0:
        return True
    case = cl.case
    if case == "A":
        return True
    if case == "B1":
        return y >= 0
    if case == "B2":
        return y > 0 or (y == 0 and x > 0)
    if case == "B3":
        return y > 0
    if case == "B4":
        return compare(y, cl.canonical * x) <= 0
    if case == "C1":
        return member(cl.canonical, p)
    if y >= 0 and member(cl.canonical.upper, p):
        return True
    return y <= 0 and member(cl.canonical.lower, (x, -y))


def monoid_properties(c: ConeSpec) -> PropertyFlags:
    if isinstance(c, FullPlane):
        return PropertyFlags(True, True, True, False)
    if not isinstance(c, (HalfPlane, Sector)):
        raise DegenerateCone(f"not a cone specification: {c!r}")
    rays = c.rays()
    rational = [r for r in rays if r.is_rational]
    cic = all(r.included for r in rational)
    krull = len(rational) == len(rays) and cic
    primary = not any(r.included for r in rays)
    return PropertyFlags(True, cic, krull, primary)


def _band(width: int) -> list[Point]:
    return [Point(n, 1) for n in range(-width, width + 1)]


def atoms_of_cone(c: ConeSpec, bound: int, max_terms: int = DEFAULT_MAX_TERMS) -> AtomReport:
    """Atoms of ``c ∩ Z^2`` inside the box of radius ``bound``.

    The canonical atoms are enumerated in a box large enough to contain the
    image of the original box, pulled back and filtered.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    cl = classify_and_normalize(c, max_terms)
    phi = cl.phi
    inv = phi.inverse()
    wide = bound * phi.row_norm()
    notes: list[str] = []
    atomic = True
    case = cl.case
    if case in ("A", "B4"):
        canon: list[Point] = []
    elif case in ("B1", "B3"):
        canon = _band(wide)
        notes.append("the atoms form an infinite band; only the part inside the box is listed")
    elif case == "B2":
        canon = [Point(1, 0)]
        atomic = False
        notes.append("elements off the boundary ray are not sums of atoms")
    elif case == "C1":
        canon = list(enumerate_atoms(cl.canonical, wide).atoms)
    else:
        up = enumerate_atoms(cl.canonical.upper, wide).atoms
        down = enumerate_atoms(cl.canonical.lower, wide).atoms
        canon = list(up) + [SIGMA_X(p) for p in down]
    atoms = [q for q in (inv(p) for p in canon) if box_norm(q) <= bound]
    return AtomReport(c, bound, tuple(atoms), atomic=atomic, notes=tuple(notes))


def b4_witness_decomposition(alpha, h, max_terms: int = DEFAULT_MAX_TERMS) -> tuple[Point, Point]:
    """Split ``h != O`` in ``{y <= alpha x}`` (alpha irrational) into two nonzero members.

    ``h' = (q_n, p_n)`` for the smallest even ``n`` with
    ``alpha q_n - p_n < alpha x - y``, and ``h'' = h - h'``.
    """
    alpha = as_exact(alpha)
    if not isinstance(alpha, QuadIrr) or sign(alpha) <= 0:
        raise ValueError("alpha must be a positive irrational")
    x, y = h
    gap = alpha * x - y
    if (x, y) == (0, 0) or sign(gap) < 0:
        raise NotMember(f"{tuple(h)} is not a nonzero element of y <= alpha x")
    cf = cf_expand(alpha, max_terms)
    table = cf.table
    n = 0
    while cf.has_term(n):
        qn, pn = table.q(n), table.p(n)
        if compare(alpha * qn - pn, gap) < 0:
            first = Point(qn, pn)
            return first, Point(x, y) - first
        n += 2
    raise InsufficientPrecision(f"{cf.available} quotients do not reach the gap of {tuple(h)}")

