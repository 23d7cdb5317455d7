import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from rcmonoid.cones import Ray, Sector, cross_sign, transform_cone
from rcmonoid.exact import quad
from rcmonoid.lattice import IDENTITY, SIGMA_X, TAU, Unimodular

settings.register_profile(
    "repo", derandomize=True, deadline=None, max_examples=150,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

PHI = quad(1, 1, 2, 5)
SQRT2 = quad(0, 1, 1, 2)

QUADRATIC_CORPUS = [
    PHI, SQRT2, quad(0, 1, 1, 3), quad(3, 1, 2, 5), quad(3, -1, 2, 5),
    quad(1, 1, 1, 2), quad(1, 1, 2, 13), quad(2, 1, 1, 2), quad(0, 1, 1, 5), quad(5, 1, 2, 21),
]

ELEMENTARY = [
    Unimodular(1, 1, 0, 1), Unimodular(1, -1, 0, 1),
    Unimodular(1, 0, 1, 1), Unimodular(1, 0, -1, 1),
    SIGMA_X, TAU,
]


def random_unimodular(rng: random.Random, max_factors: int = 6) -> Unimodular:
    m = IDENTITY
    for _ in range(rng.randint(0, max_factors)):
        m = rng.choice(ELEMENTARY) @ m
    return m


def random_slope(rng: random.Random):
    if rng.random() < 0.5:
        return Fraction(rng.randint(-6, 6), rng.randint(1, 6))
    return quad(rng.randint(-4, 4), rng.choice([-1, 1]) * rng.randint(1, 2),
                rng.randint(1, 3), rng.choice([2, 3, 5, 7, 13]))


def random_ray(rng: random.Random) -> Ray:
    if rng.random() < 0.15:
        return Ray.vertical(rng.random() < 0.5, rng.random() < 0.5)
    return Ray.from_slope(rng.choice([1, -1]), random_slope(rng), rng.random() < 0.5)


def random_sector(rng: random.Random, transform: bool = True) -> Sector:
    while True:
        a, b = random_ray(rng), random_ray(rng)
        s = cross_sign(a, b)
        if s:
            break
    c = Sector(a, b) if s > 0 else Sector(b, a)
    return transform_cone(c, random_unimodular(rng)) if transform else c


# -- acceptance summary -------------------------------------------------------

ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        title, ok, detail = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {title}  ({detail})")


@pytest.fixture
def rng():
    return random.Random(20240611)
