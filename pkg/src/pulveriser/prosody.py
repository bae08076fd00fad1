"""Binary prosody: guru/laghu patterns and the counting that grows out of them.

A syllable is long (guru, ``G``, two cadence units) or short (laghu, ``L``,
one unit), so a line of verse is a binary string.  This module covers

* the prastara: the canonical listing of all ``2**n`` patterns of length n,
  and the nashta/uddishta procedures mapping row numbers to patterns and
  back without listing anything;
* exponentiation by recursive halving of the exponent;
* matra meters, counted by cadence, which obey the Fibonacci recurrence;
* the Meru Prastara (binomial triangle) built purely by addition, and the
  fair-game problem of points it solves.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable

from .errors import (
    CadenceOutOfRange,
    IndexOutOfRange,
    InvalidWins,
    LengthOutOfRange,
    NegativeCadence,
    NegativeExponent,
    NegativeRow,
)
from .trace import recorder

MAX_PRASTARA_LENGTH = 20
MAX_MATRA_CADENCE = 25


class Syllable(enum.Enum):
    GURU = "G"
    LAGHU = "L"

    @property
    def weight(self) -> int:
        return 2 if self is Syllable.GURU else 1

    def __str__(self) -> str:
        return self.value


G = Syllable.GURU
L = Syllable.LAGHU


class MeterPattern(tuple):
    """An immutable sequence of syllables; text form is e.g. ``"LLG"``."""

    __slots__ = ()

    def __new__(cls, syllables: Iterable[Syllable] | str = ()):
        if isinstance(syllables, str):
            return cls.from_text(syllables)
        items = tuple(syllables)
        for s in items:
            if not isinstance(s, Syllable):
                raise TypeError(f"not a syllable: {s!r}")
        return super().__new__(cls, items)

    @classmethod
    def from_text(cls, text: str) -> MeterPattern:
        try:
            return super().__new__(cls, (Syllable(ch) for ch in text.strip().upper()))
        except ValueError:
            raise ValueError(f"pattern text must use only G and L: {text!r}") from None

    @property
    def cadence(self) -> int:
        return sum(s.weight for s in self)

    @property
    def guru_count(self) -> int:
        return sum(1 for s in self if s is G)

    def __str__(self) -> str:
        return "".join(s.value for s in self)

    def __repr__(self) -> str:
        return f"MeterPattern({str(self)!r})"


# -- exponentiation -------------------------------------------------------


def _halving_power(x: int, n: int, algorithm: str, sink) -> int:
    if n < 0:
        raise NegativeExponent(f"exponent must be >= 0, got {n}")
    rec = recorder(sink, algorithm)

    def power(n: int, depth: int) -> int:
        if n == 0:
            value, branch = 1, "base"
        elif n % 2 == 0:
            half = power(n // 2, depth + 1)
            value, branch = half * half, "even"
        else:
            half = power((n - 1) // 2, depth + 1)
            value, branch = x * half * half, "odd"
        if rec:
            rec({"n": n, "depth": depth, "branch": branch, "value": value})
        return value

    return power(n, 0)


def exp2(n: int, sink=None) -> int:
    """``2**n`` by halving the exponent.

    ``exp2(0) = 1``; for even n square ``exp2(n/2)``; for odd n double the
    square of ``exp2((n-1)/2)``.  With a sink, one event per call is emitted
    as the call returns (deepest first), carrying ``n``, the call ``depth``
    (0 for the outermost call), the ``branch`` taken and the ``value``.
    The deepest call sits at depth ``n.bit_length()``.
    """
    return _halving_power(2, n, "exp2", sink)


def exp(x: int, n: int, sink=None) -> int:
    """``x**n`` by the same recursion as :func:`exp2`; ``exp(0, 0) == 1``."""
    return _halving_power(x, n, "exp", sink)


# -- prastara, nashta, uddishta --------------------------------------------


def enumerate_prastara(n: int, sink=None) -> list[MeterPattern]:
    """All ``2**n`` patterns of length n in prastara order.

    Row 1 is all guru.  Each following row changes the leftmost guru of the
    previous row to laghu and resets every position to its left to guru.
    The listing ends at the all-laghu row.
    """
    if not 0 <= n <= MAX_PRASTARA_LENGTH:
        raise LengthOutOfRange(f"length must be in [0, {MAX_PRASTARA_LENGTH}], got {n}")
    rec = recorder(sink, "prastara")
    row = [G] * n
    rows = [MeterPattern(row)]
    if rec:
        rec({"row": 1, "pattern": str(rows[-1])})
    while True:
        try:
            pos = row.index(G)
        except ValueError:
            break
        row[pos] = L
        row[:pos] = [G] * pos
        rows.append(MeterPattern(row))
        if rec:
            rec({"row": len(rows), "pattern": str(rows[-1]), "changed": pos + 1})
    return rows


def index_to_pattern(i: int, n: int, sink=None) -> MeterPattern:
    """Nashta: recover row ``i`` (1-based) of the length-n prastara.

    Walk the positions left to right.  An odd row number puts a guru here
    and continues with ``(i + 1) / 2``; an even one puts a laghu and
    continues with ``i / 2``.  Equivalently, ``i - 1`` written in binary
    least significant bit first, 1 as laghu, 0 as guru.
    """
    if n < 0:
        raise LengthOutOfRange(f"length must be >= 0, got {n}")
    if not 1 <= i <= 1 << n:
        raise IndexOutOfRange(f"row must be in [1, {1 << n}], got {i}")
    rec = recorder(sink, "nashta")
    out = []
    for pos in range(n):
        if i % 2:
            out.append(G)
            i = (i + 1) // 2
        else:
            out.append(L)
            i //= 2
        if rec:
            rec({"position": pos + 1, "syllable": out[-1].value, "next": i})
    return MeterPattern(out)


def pattern_to_index(pattern) -> int:
    """Uddishta: the 1-based prastara row of ``pattern``.

    Reading from the right, double the running count at each place and add
    one for a laghu; the row is that count plus one.
    """
    if isinstance(pattern, str):
        pattern = MeterPattern.from_text(pattern)
    acc = 0
    for s in reversed(pattern):
        acc = 2 * acc + (1 if s is L else 0)
    return acc + 1


# -- matra meters ---------------------------------------------------------


def matra_count(n: int) -> int:
    """Number of patterns whose cadence is exactly n: F(0) = F(1) = 1."""
    if n < 0:
        raise NegativeCadence(f"cadence must be >= 0, got {n}")
    prev, cur = 1, 1
    for _ in range(n - 1):
        prev, cur = cur, prev + cur
    return cur


def enumerate_matra(n: int) -> list[MeterPattern]:
    """All patterns of cadence n: laghu-led patterns first, then guru-led."""
    if not 0 <= n <= MAX_MATRA_CADENCE:
        raise CadenceOutOfRange(f"cadence must be in [0, {MAX_MATRA_CADENCE}], got {n}")
    table: list[list[MeterPattern]] = [[MeterPattern()]]
    for k in range(1, n + 1):
        row = [MeterPattern((L,) + p) for p in table[k - 1]]
        if k >= 2:
            row += [MeterPattern((G,) + p) for p in table[k - 2]]
        table.append(row)
    return table[n]


# -- Meru Prastara and the problem of points --------------------------------


def meru_table(n: int, sink=None) -> list[list[int]]:
    """Rows 0..n of the binomial triangle, each entry the sum of the two above."""
    if n < 0:
        raise NegativeRow(f"row must be >= 0, got {n}")
    rec = recorder(sink, "meru")
    rows = [[1]]
    if rec:
        rec({"row": 0, "entries": "1"})
    for r in range(1, n + 1):
        above = rows[-1]
        row = [1] + [above[k - 1] + above[k] for k in range(1, r)] + [1]
        rows.append(row)
        if rec:
            rec({"row": r, "entries": " ".join(map(str, row))})
    return rows


def meru_row(n: int, sink=None) -> list[int]:
    """``[C(n, 0), ..., C(n, n)]`` from the additive recurrence alone."""
    if n < 0:
        raise NegativeRow(f"row must be >= 0, got {n}")
    if sink is not None:
        return meru_table(n, sink)[n]
    row = [1]
    for r in range(1, n + 1):
        row = [1] + [row[k - 1] + row[k] for k in range(1, r)] + [1]
    return row


def points_share(r: int, s: int) -> Fraction:
    """Fair share of the stake for player A, who needs ``r`` more wins.

    Player B needs ``s``.  At most ``r + s - 1`` further fair rounds settle
    the game, and A wins whenever A takes at least ``r`` of them, so the
    share is ``sum(C(r+s-1, j) for j >= r) / 2**(r+s-1)``.
    """
    if r < 1 or s < 1:
        raise InvalidWins(f"wins needed must be >= 1, got r={r}, s={s}")
    rounds = r + s - 1
    row = meru_row(rounds)
    return Fraction(sum(row[r:]), exp2(rounds))
