"""Regular continued fractions, convergents and second convergents."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import isqrt
from typing import Optional

from .errors import IndexBeyondExpansion, NonpositiveDenominator, NotFinite
from .exact import QuadIrr, as_exact

DEFAULT_MAX_TERMS = 4096


@dataclass(frozen=True)
class CFExpansion:
    """A regular continued fraction ``[a0; a1, a2, ...]``.

    ``head`` holds the leading quotients.  A non-empty ``period`` repeats
    forever after ``head`` (a quadratic irrational).  With an empty period the
    expansion is finite, unless ``truncated`` is set, in which case ``head``
    is only a prefix of an infinite expansion.
    """

    head: tuple[int, ...]
    period: tuple[int, ...] = ()
    truncated: bool = False

    def __post_init__(self):
        object.__setattr__(self, "head", tuple(self.head))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.head:
            raise ValueError("an expansion needs at least a0")
        if self.period and self.truncated:
            raise ValueError("a periodic expansion is never truncated")
        if any(a < 1 for a in self.head[1:] + self.period):
            raise ValueError("partial quotients after a0 must be positive")

    @property
    def kind(self) -> str:
        if self.period:
            return "periodic"
        return "truncated" if self.truncated else "finite"

    @property
    def is_finite(self) -> bool:
        return not self.period and not self.truncated

    @property
    def available(self) -> Optional[int]:
        """Number of known quotients, ``None`` when unbounded."""
        return None if self.period else len(self.head)

    @property
    def last_index(self) -> int:
        """``N`` for a finite expansion ``[a0; ..., aN]``."""
        if not self.is_finite:
            raise NotFinite(f"{self.kind} expansion has no last index")
        return len(self.head) - 1

    def term(self, n: int) -> int:
        if n < 0:
            raise IndexError(n)
        if n < len(self.head):
            return self.head[n]
        if not self.period:
            raise IndexBeyondExpansion(f"quotient a_{n} not available ({self.kind} expansion)")
        return self.period[(n - len(self.head)) % len(self.period)]

    def has_term(self, n: int) -> bool:
        return n >= 0 and (bool(self.period) or n < len(self.head))

    def terms(self, k: int) -> list[int]:
        if self.period:
            return [self.term(i) for i in range(k)]
        return list(self.head[:k])

    def value(self) -> Fraction:
        """Exact value of a finite expansion."""
        if not self.is_finite:
            raise NotFinite("only finite expansions evaluate to a rational")
        p, q = self.table.entry(self.last_index)
        return Fraction(p, q)

    @cached_property
    def table(self) -> ConvergentTable:
        return ConvergentTable(self)


def _expand_rational(x: Fraction) -> CFExpansion:
    num, den = x.numerator, x.denominator
    out = []
    while True:
        a, r = divmod(num, den)
        out.append(a)
        if r == 0:
            return CFExpansion(tuple(out))
        num, den = den, r


def _surd_state(x: QuadIrr) -> tuple[int, int, int]:
    """``(P, Q, D)`` with ``x == (P + sqrt(D)) / Q`` and ``Q | D - P^2``."""
    P, Q, D = x.a, x.c, x.b * x.b * x.d
    if x.b < 0:
        P, Q = -P, -Q
    if (D - P * P) % Q:
        P, D, Q = P * abs(Q), D * Q * Q, Q * abs(Q)
    return P, Q, D


def _surd_floor(P: int, Q: int, s: int) -> int:
    # floor((P + sqrt(D)) / Q) with s = isqrt(D), D not a square
    if Q > 0:
        return (P + s) // Q
    return (-P - s - 1) // (-Q)


def cf_expand(x, max_terms: int = DEFAULT_MAX_TERMS) -> CFExpansion:
    """Continued fraction of an exact real.

    Rationals give the canonical finite expansion (complete, whatever
    ``max_terms`` says).  Quadratic irrationals give a periodic expansion, or
    a truncated prefix of ``max_terms`` quotients if no period shows up in
    time.  The period is searched from ``a1`` on, so ``a0`` always sits in the
    head: the golden ratio comes back as head ``(1,)`` and period ``(1,)``.
    """
    if max_terms < 1:
        raise ValueError("max_terms must be positive")
    x = as_exact(x)
    if not isinstance(x, QuadIrr):
        return _expand_rational(x)
    P, Q, D = _surd_state(x)
    s = isqrt(D)
    quotients: list[int] = []
    seen: dict[tuple[int, int], int] = {}
    while len(quotients) < max_terms:
        n = len(quotients)
        if n >= 1:
            key = (P, Q)
            if key in seen:
                j = seen[key]
                return CFExpansion(tuple(quotients[:j]), tuple(quotients[j:]))
            seen[key] = n
        a = _surd_floor(P, Q, s)
        quotients.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
    return CFExpansion(tuple(quotients), truncated=True)


def normalize_even(cf: CFExpansion) -> CFExpansion:
    """Rewrite a finite expansion so that its last index ``N`` is even."""
    if not cf.is_finite:
        raise NotFinite(f"cannot even-normalize a {cf.kind} expansion")
    q = list(cf.head)
    if (len(q) - 1) % 2 == 0:
        return cf
    if q[-1] >= 2:
        q[-1] -= 1
        q.append(1)
    else:
        # [..., a, 1] == [..., a + 1]
        q.pop()
        q[-1] += 1
    return CFExpansion(tuple(q))


class ConvergentTable:
    """Numerators and denominators ``p_n, q_n`` for ``n >= -2``, grown on demand.

    Growing is guarded by a lock, so a table shared between threads behaves as
    if every call ran sequentially.
    """

    def __init__(self, cf: CFExpansion):
        self.cf = cf
        self._p = [0, 1]
        self._q = [1, 0]
        self._lock = threading.Lock()

    @property
    def n_max(self) -> int:
        return len(self._p) - 3

    def ensure(self, n: int) -> None:
        if n <= self.n_max:
            return
        if not self.cf.has_term(n):
            raise IndexBeyondExpansion(f"p_{n}, q_{n} need a_{n}, beyond the {self.cf.kind} expansion")
        with self._lock:
            p, q = self._p, self._q
            while len(p) - 3 < n:
                a = self.cf.term(len(p) - 2)
                p.append(a * p[-1] + p[-2])
                q.append(a * q[-1] + q[-2])

    def p(self, n: int) -> int:
        self.ensure(n)
        return self._p[n + 2]

    def q(self, n: int) -> int:
        self.ensure(n)
        return self._q[n + 2]

    def entry(self, n: int) -> tuple[int, int]:
        self.ensure(n)
        return self._p[n + 2], self._q[n + 2]

    def a(self, n: int) -> int:
        return self.cf.term(n)

    def entries(self, n_max: Optional[int] = None) -> list[tuple[int, int]]:
        n_max = self.n_max if n_max is None else n_max
        self.ensure(n_max)
        return [(self._p[i], self._q[i]) for i in range(n_max + 3)]


def convergent_table(cf: CFExpansion, n_max: int) -> ConvergentTable:
    if n_max < -2:
        raise ValueError("n_max must be at least -2")
    table = cf.table
    table.ensure(n_max)
    return table


def second_convergents(table: ConvergentTable, n: int) -> list[tuple[int, int]]:
    """``(p_{n,i}, q_{n,i}) = (p_n + i p_{n+1}, q_n + i q_{n+1})`` for ``0 <= i <= a_{n+2}``."""
    if n < -2:
        raise ValueError("n must be at least -2")
    if not table.cf.has_term(n + 2):
        raise IndexBeyondExpansion(f"a_{n + 2} is beyond the {table.cf.kind} expansion")
    if n == -2 and table.a(0) < 0:
        raise ValueError("second convergents for n = -2 need a0 >= 0")
    table.ensure(n + 1)
    pn, qn = table.entry(n)
    pn1, qn1 = table.entry(n + 1)
    return [(pn + i * pn1, qn + i * qn1) for i in range(table.a(n + 2) + 1)]


def mediant(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    """``(y1 + y2, x1 + x2)`` for fractions given as ``(numerator, denominator)``."""
    (y1, x1), (y2, x2) = a, b
    if x1 < 1 or x2 < 1:
        raise NonpositiveDenominator(f"denominators {x1}, {x2} must be positive")
    return y1 + y2, x1 + x2

