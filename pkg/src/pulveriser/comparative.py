"""Egyptian fractions, the sieve of Eratosthenes and Euclid's new prime."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import NotPrimeInput, OutOfRange
from .exactnum import as_rational
from .trace import recorder


@dataclass(frozen=True)
class UnitFractionSum:
    terms: tuple[Fraction, ...]

    @property
    def denominators(self) -> tuple[int, ...]:
        return tuple(t.denominator for t in self.terms)

    @property
    def value(self) -> Fraction:
        return sum(self.terms, Fraction(0))

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return " + ".join(str(t) for t in self.terms)


def egyptian_decompose(q, sink=None) -> UnitFractionSum:
    """Greedy decomposition of ``0 < q < 1`` into distinct unit fractions.

    Each step takes the largest unit fraction not exceeding what is left,
    ``1/ceil(1/rest)``.  The numerator of the remainder strictly decreases,
    so a fraction ``p/q`` needs at most ``p`` terms.
    """
    q = as_rational(q)
    if not 0 < q < 1:
        raise OutOfRange(f"expected 0 < q < 1, got {q}")
    rec = recorder(sink, "egyptian")
    rest = q
    terms = []
    while rest:
        d = -(-rest.denominator // rest.numerator)
        term = Fraction(1, d)
        rest -= term
        terms.append(term)
        if rec:
            rec({"denominator": d, "remaining": rest})
    return UnitFractionSum(tuple(terms))


def sieve(limit: int, sink=None) -> list[int]:
    """Primes up to ``limit``: cross off multiples of each survivor from its square."""
    if limit < 2:
        return []
    rec = recorder(sink, "sieve")
    marks = bytearray([1]) * (limit + 1)
    marks[0] = marks[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if marks[p]:
            start = p * p
            count = len(range(start, limit + 1, p))
            marks[start::p] = bytes(count)
            if rec:
                rec({"prime": p, "start": start, "crossed": count})
    return [i for i, flag in enumerate(marks) if flag]


def smallest_prime_factor(n: int) -> int:
    """Smallest prime dividing ``n >= 2``, by trial division up to sqrt(n)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n % 2 == 0:
        return 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return n


def is_prime(n: int) -> bool:
    return n >= 2 and smallest_prime_factor(n) == n


def euclid_new_prime(primes: Iterable[int], sink=None) -> tuple[int, int]:
    """Multiply the primes, add one, and return ``(witness, new_prime)``.

    ``new_prime`` is the least prime factor of the witness.  It cannot be
    any of the given primes, since each of them leaves remainder 1.
    """
    primes = list(primes)
    if not primes:
        raise NotPrimeInput("expected a non-empty list of primes")
    for p in primes:
        if not is_prime(p):
            raise NotPrimeInput(f"{p} is not prime")
    witness = math.prod(primes) + 1
    new = smallest_prime_factor(witness)
    if sink is not None:
        recorder(sink, "euclid")({"product": witness - 1, "witness": witness,
                                  "new_prime": new, "cofactor": witness // new})
    return witness, new
