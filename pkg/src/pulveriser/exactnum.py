"""Exact integer and rational primitives.

Integers are Python ints (unbounded).  Rationals are
:class:`fractions.Fraction`, which already keeps every value reduced with
a positive denominator; this module adds the constructors and Euclidean
routines the algorithms share.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import ZeroDenominator
from .trace import recorder

Rational = Fraction

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?")


def gcd(a: int, b: int) -> int:
    """Non-negative greatest common divisor; ``gcd(0, 0) == 0``."""
    return math.gcd(a, b)


def extended_gcd(a: int, b: int, sink=None) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and ``a*x + b*y == g``.

    Runs the Euclidean remainder cascade, carrying the Bezout coefficients
    alongside each remainder.  The coefficients are those of the classical
    recursion, e.g. ``extended_gcd(240, 46) == (2, -9, 47)``; no attempt is
    made to minimise them.  With a sink, one event per division step.
    """
    rec = recorder(sink, "extended_gcd")
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        if rec:
            rec({"r": r0, "r_next": r1, "q": q, "x": s0, "y": t0})
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    if rec:
        rec({"r": r0, "r_next": 0, "q": 0, "x": s0, "y": t0}, note="gcd reached")
    return r0, s0, t0


def rational_make(n: int, d: int = 1) -> Fraction:
    if d == 0:
        raise ZeroDenominator(f"{n}/0")
    return Fraction(n, d)


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: a float has already lost exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a number here")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected int, Fraction or 'p/q' text, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` with ``q > 0``."""
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return rational_make(num, den)


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n
