import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rcmonoid.cones import FullPlane, HalfPlane, Ray, Sector, special_cone
from rcmonoid.errors import NotMember, NotStrictlyConvex
from rcmonoid.lattice import ORIGIN, Point
from rcmonoid.oracle import (
    DivisorRegion, cone_contains, factor_into_atoms, oracle_atoms_in_box, oracle_is_atom,
    oracle_split,
)
from rcmonoid.special import Family, SpecialMonoidSpec

from conftest import PHI, random_sector

M52 = special_cone(SpecialMonoidSpec(Family.M, Fraction(5, 2)))


def pts(*xs):
    return {Point(*p) for p in xs}


def naive_atoms(c, bound, reach):
    """Atoms by scanning every lattice point of a big square for divisors."""
    members = [
        Point(x, y) for x in range(-reach, reach + 1) for y in range(-reach, reach + 1)
        if c.contains((x, y))
    ]
    out = set()
    for h in members:
        if h == ORIGIN or max(abs(h.x), abs(h.y)) > bound:
            continue
        if not any(v != ORIGIN and v != h and c.contains(h - v) for v in members):
            out.add(h)
    return out


def test_cone_contains_examples():
    assert cone_contains(M52, (2, 5))
    assert cone_contains(HalfPlane(Ray.from_slope(-1, PHI)), (1, 1))
    assert cone_contains(FullPlane(), (0, 0)) and cone_contains(M52, (0, 0))


def test_is_atom_examples():
    assert oracle_is_atom(M52, (2, 5))
    assert oracle_is_atom(M52, (1, 0))
    assert not oracle_is_atom(special_cone(SpecialMonoidSpec(Family.M, Fraction(1))), (2, 1))
    with pytest.raises(NotMember):
        oracle_is_atom(M52, (1, 3))
    with pytest.raises(NotMember):
        oracle_is_atom(M52, (0, 0))


def test_atoms_in_box_examples():
    assert oracle_atoms_in_box(M52, 6).atom_set() == pts((1, 0), (1, 1), (1, 2), (2, 5))
    mc3 = special_cone(SpecialMonoidSpec(Family.MCIRC, Fraction(3)))
    assert oracle_atoms_in_box(mc3, 5).atom_set() == pts((1, 0), (1, 1), (1, 2), (2, 5))
    wedge = Sector(Ray.from_vector(3, -1, True), Ray.from_vector(1, 2, True))
    assert oracle_atoms_in_box(wedge, 3).atom_set() == pts((1, 0), (1, 1), (1, 2), (3, -1))


def test_not_strictly_convex():
    hp = HalfPlane.from_normal(0, 1, (True, True))
    for fn in (lambda: oracle_is_atom(hp, (0, 1)), lambda: oracle_atoms_in_box(hp, 3),
               lambda: factor_into_atoms(FullPlane(), (1, 1))):
        with pytest.raises(NotStrictlyConvex):
            fn()


def test_factorization_examples():
    assert factor_into_atoms(M52, (2, 2)) == [(Point(1, 0), Point(1, 2)), (Point(1, 1), Point(1, 1))]
    assert factor_into_atoms(M52, (0, 0)) == [()]
    assert factor_into_atoms(M52, (2, 5)) == [(Point(2, 5),)]
    assert len(factor_into_atoms(M52, (6, 6), max_factorizations=2)) == 2


@settings(max_examples=40)
@given(st.integers(0, 2 ** 32))
def test_factorizations_sum_to_element(seed):
    r = random.Random(seed)
    c = random_sector(r)
    members = [p for p in oracle_atoms_in_box(c, 4).atoms]
    if not members:
        return
    h = Point(0, 0)
    for _ in range(r.randint(1, 3)):
        h = h + r.choice(members)
    facs = factor_into_atoms(c, h, 20)
    assert facs and len(set(facs)) == len(facs)
    for f in facs:
        assert sum(f, Point(0, 0)) == h
        assert all(oracle_is_atom(c, a) for a in f)
        assert list(f) == sorted(f)


@settings(max_examples=30)
@given(st.integers(0, 2 ** 32))
def test_divisor_region_is_sound(seed):
    r = random.Random(seed)
    c = random_sector(r, transform=False)
    wide = oracle_atoms_in_box(c, 6, margin=5).atom_set()
    assert oracle_atoms_in_box(c, 6).atom_set() == wide


@settings(max_examples=30)
@given(st.integers(0, 2 ** 32))
def test_divisor_region_contains_all_divisors(seed):
    r = random.Random(seed)
    c = random_sector(r, transform=False)
    for _ in range(5):
        h = Point(r.randint(-6, 6), r.randint(-6, 6))
        if not c.contains(h):
            continue
        region = set(DivisorRegion(c, h).points())
        for x in range(-40, 41):
            for y in range(-40, 41):
                if c.contains((x, y)) and c.contains((h.x - x, h.y - y)):
                    assert Point(x, y) in region


@pytest.mark.parametrize("alpha", [Fraction(5, 2), Fraction(1, 3), Fraction(3), PHI])
@pytest.mark.parametrize("fam", list(Family))
def test_quadrant_cones_match_naive_scan(fam, alpha):
    # every divisor of a box-6 element of these cones lies in [0, 6]^2
    c = special_cone(SpecialMonoidSpec(fam, alpha))
    assert oracle_atoms_in_box(c, 6).atom_set() == naive_atoms(c, 6, 6)


def test_split_for_halfplanes():
    hp = HalfPlane.from_normal(0, 1, (True, True))
    v, w = oracle_split(hp, (0, 2), 4)
    assert v + w == Point(0, 2) and v.y >= 1 and w.y >= 1
    assert oracle_split(hp, (3, 1), 10) is None
    b4 = HalfPlane(Ray.from_slope(-1, PHI))
    assert oracle_split(b4, (2, 1), 10) is not None
    assert oracle_split(FullPlane(), (1, 1), 3) is None  # everything is a unit
