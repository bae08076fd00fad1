"""Square roots: exact digit-by-digit extraction and two rational iterations.

:func:`aryabhata_sqrt` consumes the radicand in groups of two base-``b``
digits, most significant first, keeping a running remainder so that after
every group ``processed == root**2 + remainder``.  It is exact and yields
``floor(sqrt(N))``.

:func:`heron_step` and :func:`bakhshali_step` are approximation methods.
All arithmetic is rational, so every iterate and its error ``|x**2 - N|``
is reported exactly.  One Bakhshali step equals two Heron steps.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import NamedTuple

from .errors import InvalidBase, NegativeRadicand, NonPositiveInput, ZeroDivisor
from .exactnum import as_rational
from .trace import recorder


class RootState(NamedTuple):
    processed: int
    root: int
    remainder: int


class IterationStep(NamedTuple):
    index: int
    estimate: Fraction
    error_bound: Fraction


class Method(str, enum.Enum):
    HERON = "heron"
    BAKHSHALI = "bakhshali"


def digit_groups(n: int, base: int = 10) -> list[int]:
    """Split ``n`` into base**2 chunks, most significant first; 0 has none."""
    chunk = base * base
    groups = []
    while n:
        n, g = divmod(n, chunk)
        groups.append(g)
    groups.reverse()
    return groups


def aryabhata_sqrt(n: int, base: int = 10, sink=None) -> tuple[int, int, list[RootState]]:
    """Return ``(root, remainder, trace)`` with ``n == root**2 + remainder``.

    For each digit group: bring it down next to the remainder, then pick
    the largest digit ``d < base`` with ``(2*base*root + d) * d`` not
    exceeding that value.  ``2*base*root`` is the doubled root shifted one
    place, the divisor of the hand method.
    """
    if isinstance(base, bool) or not isinstance(base, int) or base < 2:
        raise InvalidBase(f"base must be an integer >= 2, got {base!r}")
    if n < 0:
        raise NegativeRadicand(f"radicand must be >= 0, got {n}")
    rec = recorder(sink, "aryabhata_sqrt")
    chunk = base * base
    root = remainder = processed = 0
    trace = []
    for index, group in enumerate(digit_groups(n, base), start=1):
        processed = processed * chunk + group
        current = remainder * chunk + group
        divisor = 2 * base * root
        d = base - 1
        while (divisor + d) * d > current:
            d -= 1
        remainder = current - (divisor + d) * d
        root = root * base + d
        trace.append(RootState(processed, root, remainder))
        if rec:
            rec({"group": index, "chunk": group, "divisor": divisor, "digit": d,
                 "processed": processed, "root": root, "remainder": remainder})
    return root, remainder, trace


def _positive(name: str, value) -> Fraction:
    value = as_rational(value)
    if value <= 0:
        raise NonPositiveInput(f"{name} must be positive, got {value}")
    return value


def heron_step(n, x) -> Fraction:
    n, x = _positive("N", n), _positive("x", x)
    return (x + n / x) / 2


def bakhshali_step(n, x) -> Fraction:
    """``h - e**2 / (2h)`` where ``e = (N - x**2) / (2x)`` and ``h = x + e``."""
    n, x = _positive("N", n), _positive("x", x)
    e = (n - x * x) / (2 * x)
    h = x + e
    if h == 0:
        raise ZeroDivisor("x + e vanished")
    return h - e * e / (2 * h)


_STEPS = {Method.HERON: heron_step, Method.BAKHSHALI: bakhshali_step}


def iterate(method, n, x0, steps: int, sink=None) -> list[IterationStep]:
    """Run ``steps`` iterations from ``x0``; the result includes ``x0`` itself."""
    method = Method(method)
    n, x = _positive("N", n), _positive("x0", x0)
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    step = _STEPS[method]
    rec = recorder(sink, method.value)
    out = []
    for i in range(steps + 1):
        if i:
            x = step(n, x)
        out.append(IterationStep(i, x, abs(x * x - n)))
        if rec:
            rec({"index": i, "estimate": x, "error_bound": out[-1].error_bound})
    return out
