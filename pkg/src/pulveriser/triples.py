"""Right triangles: the Pothayanar hypotenuse rule and the Katyayana generator.

The Pothayanar rule ``c = 7a/8 + b/2`` is an empirical estimate.  Squaring
it against ``a**2 + b**2`` gives ``15a**2 - 56ab + 48b**2 = 0``, which
factors as ``(3a - 4b)(5a - 12b) = 0``, so the rule is exact precisely when
``a:b`` is ``4:3`` or ``12:5``.  Argument order matters: ``(4, 3)`` is exact,
``(3, 4)`` is not.

The Katyayana identity ``(m²-n²)² + (2mn)² = (m²+n²)²`` generates every
primitive triple from coprime ``m > n`` of opposite parity.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .errors import InvalidGenerators, NonPositiveInput
from .exactnum import as_rational, gcd
from .trace import recorder

_SEVEN_EIGHTHS = Fraction(7, 8)
_HALF = Fraction(1, 2)


class Triple(NamedTuple):
    a: int
    b: int
    c: int

    def is_pythagorean(self) -> bool:
        return self.a > 0 and self.b > 0 and self.a ** 2 + self.b ** 2 == self.c ** 2

    def is_primitive(self) -> bool:
        return gcd(self.a, self.b) == 1


class GeneratorPair(NamedTuple):
    m: int
    n: int


def pothayanar_estimate(a, b) -> Fraction:
    """Return ``7a/8 + b/2`` exactly.

    ``a`` and ``b`` may be ints, Fractions or ``"p/q"`` strings and must be
    positive.
    """
    a, b = as_rational(a), as_rational(b)
    if a <= 0 or b <= 0:
        raise NonPositiveInput(f"legs must be positive, got {a}, {b}")
    return _SEVEN_EIGHTHS * a + _HALF * b


def pothayanar_is_exact(a, b) -> bool:
    """True when the estimate squared equals ``a**2 + b**2`` exactly."""
    if type(a) is int and type(b) is int:
        if a <= 0 or b <= 0:
            raise NonPositiveInput(f"legs must be positive, got {a}, {b}")
        # same comparison scaled by 64: est = (7a + 4b) / 8
        return (7 * a + 4 * b) ** 2 == 64 * (a * a + b * b)
    est = pothayanar_estimate(a, b)
    a, b = as_rational(a), as_rational(b)
    return est * est == a * a + b * b


def katyayana_triple(pair) -> Triple:
    """``(m, n) -> (m² - n², 2mn, m² + n²)`` for ``m > n >= 1``."""
    m, n = pair
    if n < 1 or m <= n:
        raise InvalidGenerators(f"need m > n >= 1, got m={m}, n={n}")
    return Triple(m * m - n * n, 2 * m * n, m * m + n * n)


def enumerate_primitive_triples(c_max: int, sink=None) -> list[Triple]:
    """Every primitive triple with hypotenuse at most ``c_max``.

    Legs are ordered odd leg first; the list is sorted by ``(c, a)``.
    """
    rec = recorder(sink, "triples")
    found = []
    m = 2
    while m * m + 1 <= c_max:
        # opposite parity: n starts at 1 when m is even, 2 when m is odd
        for n in range(1 + m % 2, m, 2):
            if m * m + n * n > c_max:
                break
            if gcd(m, n) != 1:
                continue
            t = katyayana_triple((m, n))
            found.append(t)
            if rec:
                rec({"m": m, "n": n, "a": t.a, "b": t.b, "c": t.c})
        m += 1
    found.sort(key=lambda t: (t.c, t.a))
    return found
