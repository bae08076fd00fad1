"""Indeterminate equations: the kuttaka and the chakravala.

``kuttaka(a, b, c)`` solves ``a*x + b*y = c`` over the integers and returns
the representative with the least non-negative ``x`` together with the
periods describing every other solution.

``chakravala(N)`` solves ``x**2 - N*y**2 = 1`` by the cyclic method: keep a
triple ``(a, b, k)`` with ``a**2 - N*b**2 == k`` and repeatedly compose it
with ``(m, 1, m**2 - N)``, dividing the result back down by ``k``, until
``k == 1``.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import DegenerateInput, InvalidModulus, NotSolvable, PerfectSquare
from .exactnum import extended_gcd
from .trace import recorder


class KuttakaSolution(NamedTuple):
    """One solution plus periods: all solutions are
    ``(x + t*x_period, y - t*y_period)`` for integer ``t``."""

    x: int
    y: int
    x_period: int
    y_period: int
    g: int

    def solutions(self, t: int) -> tuple[int, int]:
        return self.x + t * self.x_period, self.y - t * self.y_period


class ChakravalaState(NamedTuple):
    a: int
    b: int
    k: int
    m: int = 0


class PellSolution(NamedTuple):
    x: int
    y: int
    N: int


def kuttaka(a: int, b: int, c: int, sink=None) -> KuttakaSolution:
    if a == 0 and b == 0:
        raise DegenerateInput("a and b are both zero")
    g, x, y = extended_gcd(a, b, sink=sink)
    if c % g:
        raise NotSolvable(f"gcd({a}, {b}) = {g} does not divide {c}")
    scale = c // g
    x, y = x * scale, y * scale
    x_period, y_period = b // g, a // g
    # x_period is never 0 here unless b == 0, when x is already fixed
    if x_period:
        t = (x % abs(x_period) - x) // x_period
        x, y = x + t * x_period, y - t * y_period
    return KuttakaSolution(x, y, x_period, y_period, g)


def brahmagupta_compose(s1: ChakravalaState, s2: ChakravalaState, n: int) -> ChakravalaState:
    """Combine two triples for the same N; the k values multiply."""
    a1, b1, k1 = s1[:3]
    a2, b2, k2 = s2[:3]
    return ChakravalaState(a1 * a2 + n * b1 * b2, a1 * b2 + a2 * b1, k1 * k2)


def _choose_multiplier(a: int, b: int, k: int, n: int, root: int) -> int:
    """Admissible m (``a + b*m`` divisible by ``|k|``, m >= 1) closest to sqrt(N).

    Admissible values form one residue class mod ``|k|``, and ``|m*m - N|``
    falls up to sqrt(N) and rises after it, so only the nearest admissible
    values either side of sqrt(N) need comparing.  Ties go to the larger.
    """
    kk = abs(k)
    # gcd(b, k) == 1 because gcd(a, b) == 1, so b is invertible mod |k|
    m0 = (-a * pow(b, -1, kk)) % kk if kk > 1 else 0
    below = root - (root - m0) % kk
    above = below + kk
    if below < 1 or abs(above * above - n) <= abs(below * below - n):
        return above
    return below


def chakravala(n: int, sink=None) -> tuple[PellSolution, list[ChakravalaState]]:
    """Fundamental solution of ``x**2 - N*y**2 = 1`` and the full cycle.

    Starts from ``b = 1`` and the ``a`` nearest ``sqrt(N)``.  Each trace
    entry records the multiplier ``m`` that produced it (0 for the start).
    """
    if n < 2:
        raise InvalidModulus(f"N must be >= 2, got {n}")
    root = math.isqrt(n)
    if root * root == n:
        raise PerfectSquare(f"{n} is a perfect square")
    rec = recorder(sink, "chakravala")

    low, high = root * root - n, (root + 1) ** 2 - n
    assert -low != high  # a tie would make 2N odd
    a = root if -low < high else root + 1
    b, k = 1, a * a - n
    trace = [ChakravalaState(a, b, k, 0)]
    if rec:
        rec({"a": a, "b": b, "k": k, "m": 0}, note="start")

    while k != 1:
        m = _choose_multiplier(a, b, k, n, root)
        kk = abs(k)
        qa, ra = divmod(a * m + n * b, kk)
        qb, rb = divmod(a + b * m, kk)
        qk, rk = divmod(m * m - n, k)
        if ra or rb or rk:
            raise AssertionError(f"non-integral step at {(a, b, k, m)}")
        a, b, k = qa, qb, qk
        trace.append(ChakravalaState(a, b, k, m))
        if rec:
            rec({"a": a, "b": b, "k": k, "m": m})

    return PellSolution(a, b, n), trace
