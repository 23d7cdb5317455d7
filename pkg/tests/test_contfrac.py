import threading
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from rcmonoid.contfrac import (
    CFExpansion, cf_expand, convergent_table, mediant, normalize_even, second_convergents,
)
from rcmonoid.errors import IndexBeyondExpansion, NonpositiveDenominator, NotFinite
from rcmonoid.exact import compare, quad

from conftest import PHI, QUADRATIC_CORPUS, SQRT2


def evaluate(quotients):
    """Value of a finite expansion, by folding from the back."""
    v = Fraction(quotients[-1])
    for a in reversed(quotients[:-1]):
        v = a + 1 / v
    return v


def test_expand_examples():
    assert cf_expand(Fraction(5, 2), 10) == CFExpansion((2, 2))
    assert cf_expand(Fraction(3), 10) == CFExpansion((3,))
    assert cf_expand(Fraction(-1, 3)) == CFExpansion((-1, 1, 2))
    phi = cf_expand(PHI, 10)
    assert (phi.head, phi.period, phi.kind) == ((1,), (1,), "periodic")


@pytest.mark.parametrize("x,head,period", [
    (SQRT2, (1,), (2,)),
    (quad(0, 1, 1, 3), (1,), (1, 2)),
    (quad(3, -1, 2, 5), (0, 2), (1,)),
    (quad(1, 1, 2, 13), (2,), (3,)),
    (quad(0, 1, 1, 7), (2,), (1, 1, 1, 4)),
    (quad(5, 1, 2, 21), (4,), (1, 3)),
])
def test_known_periods(x, head, period):
    cf = cf_expand(x)
    assert (cf.head, cf.period) == (head, period)


def test_truncated_when_budget_too_small():
    cf = cf_expand(quad(0, 1, 1, 7), 3)
    assert cf.kind == "truncated"
    assert cf.head == (2, 1, 1)
    with pytest.raises(IndexBeyondExpansion):
        cf.term(3)


def test_rational_ignores_budget():
    assert cf_expand(Fraction(355, 113), 1).head == (3, 7, 16)


@given(st.fractions(max_denominator=10 ** 6))
def test_rational_round_trip(x):
    cf = cf_expand(x)
    assert cf.is_finite
    assert evaluate(cf.head) == x == cf.value()
    assert len(cf.head) == 1 or cf.head[-1] >= 2
    assert evaluate(normalize_even(cf).head) == x
    assert (len(normalize_even(cf).head) - 1) % 2 == 0


@given(st.integers(-40, 40), st.integers(1, 9), st.integers(1, 12), st.sampled_from([2, 3, 5, 6, 7, 10, 13, 19, 31]))
def test_periodic_expansion_is_exact(a, b, c, d):
    x = quad(a, b, c, d)
    cf = cf_expand(x)
    assert cf.kind == "periodic"
    # the purely periodic tail y satisfies y = [period; y]; rebuild x from it
    period = cf.period

    def fold(qs, tail):
        v = tail
        for q in reversed(qs):
            v = q + 1 / v
        return v

    # y is the fixed point of y -> fold(period, y): solve by reusing the expansion itself
    tail = x
    for q in cf.head:
        tail = 1 / (tail - q)
    assert fold(period, tail) == tail
    assert fold(cf.head, tail) == x
    # minimal period
    for k in range(1, len(period)):
        if len(period) % k == 0:
            assert period != period[:k] * (len(period) // k)


def test_normalize_even_examples():
    assert normalize_even(CFExpansion((2, 2))).head == (2, 1, 1)
    assert normalize_even(CFExpansion((3,))).head == (3,)
    assert normalize_even(CFExpansion((0, 2))).head == (0, 1, 1)
    assert normalize_even(CFExpansion((0, 1))).head == (1,)
    with pytest.raises(NotFinite):
        normalize_even(cf_expand(PHI))


def test_table_examples():
    t = convergent_table(CFExpansion((2, 1, 1)), 2)
    assert [t.entry(n) for n in range(3)] == [(2, 1), (3, 1), (5, 2)]
    t = convergent_table(cf_expand(PHI), 4)
    assert [t.entry(n) for n in range(5)] == [(1, 1), (2, 1), (3, 2), (5, 3), (8, 5)]
    assert t.entry(-2) == (0, 1) and t.entry(-1) == (1, 0)
    with pytest.raises(IndexBeyondExpansion):
        convergent_table(CFExpansion((2, 1, 1)), 3)


def test_second_convergent_examples():
    t = CFExpansion((2, 1, 1)).table
    assert second_convergents(t, -2) == [(0, 1), (1, 1), (2, 1)]
    assert second_convergents(t, 0) == [(2, 1), (5, 2)]
    assert second_convergents(t, -1)[0] == (1, 0)
    with pytest.raises(IndexBeyondExpansion):
        second_convergents(t, 1)


def test_table_growth_is_thread_safe():
    cf = cf_expand(quad(0, 1, 1, 7))
    t = cf.table
    results = []

    def work(n):
        results.append(t.entry(n))

    threads = [threading.Thread(target=work, args=(n,)) for n in range(200, 260)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    fresh = CFExpansion(cf.head, cf.period).table
    assert sorted(results) == sorted(fresh.entry(n) for n in range(200, 260))


@st.composite
def positive_values(draw):
    if draw(st.booleans()):
        return draw(st.fractions(min_value=Fraction(1, 10 ** 5), max_value=1000, max_denominator=10 ** 5))
    return quad(draw(st.integers(0, 30)), draw(st.integers(1, 5)), draw(st.integers(1, 8)),
                draw(st.sampled_from([2, 3, 5, 7, 11, 13])))


def depth(cf):
    return cf.last_index if cf.is_finite else 30


@given(positive_values())
def test_determinant_identities(x):
    cf = cf_expand(x)
    t = cf.table
    for n in range(-1, depth(cf) + 1):
        p, q = t.entry(n)
        p1, q1 = t.entry(n - 1)
        assert p * q1 - p1 * q == (-1) ** (n - 1)
        assert gcd(p, q) == 1
        if n >= 0:
            p2, q2 = t.entry(n - 2)
            assert p * q2 - p2 * q == (-1) ** n * cf.term(n)


@given(positive_values())
def test_second_convergent_chain(x):
    cf = cf_expand(x)
    if cf.is_finite:
        cf = normalize_even(cf)
    t = cf.table
    top = depth(cf)
    for n in range(-2, top - 1, 2):
        chain = second_convergents(t, n)
        assert chain[-1] == t.entry(n + 2)
        for (p, q), (p2, q2) in zip(chain, chain[1:]):
            assert gcd(p, q) == 1
            assert p * q2 < p2 * q
        assert compare(Fraction(*chain[-1]), x) <= 0


@given(st.tuples(st.integers(-50, 50), st.integers(1, 50)), st.tuples(st.integers(-50, 50), st.integers(1, 50)))
def test_mediant_lies_between(a, b):
    lo, hi = sorted([a, b], key=lambda f: Fraction(*f))
    y, x = mediant(lo, hi)
    assert Fraction(*lo) <= Fraction(y, x) <= Fraction(*hi)


def test_mediant_examples():
    assert mediant((1, 2), (1, 1)) == (2, 3)
    assert mediant((0, 1), (1, 1)) == (1, 2)
    assert mediant((2, 1), (3, 1)) == (5, 2)
    with pytest.raises(NonpositiveDenominator):
        mediant((1, 0), (1, 1))


def test_chain_below_quadratic_values():
    for x in QUADRATIC_CORPUS:
        t = cf_expand(x).table
        for n in range(-2, 20, 2):
            for p, q in second_convergents(t, n):
                assert compare(Fraction(p, q), x) < 0
