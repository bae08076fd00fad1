import math
import random

import pytest
from hypothesis import given, strategies as st

from pulveriser.diophantine import (
    ChakravalaState,
    KuttakaSolution,
    brahmagupta_compose,
    chakravala,
    kuttaka,
)
from pulveriser.errors import DegenerateInput, InvalidModulus, NotSolvable, PerfectSquare
from pulveriser.trace import ListSink

from oracles import brute_kuttaka_x, brute_pell_y, common_divisor_gcd, continued_fraction_pell


@pytest.mark.parametrize("a, b, c, x, y", [(17, 5, 1, 3, -10), (4, 6, 8, 2, 0)])
def test_kuttaka_examples(a, b, c, x, y):
    sol = kuttaka(a, b, c)
    assert (sol.x, sol.y) == (x, y)
    assert a * sol.x + b * sol.y == c


def test_kuttaka_full_record():
    assert kuttaka(17, 5, 1) == KuttakaSolution(3, -10, 5, 17, 1)


def test_kuttaka_errors():
    with pytest.raises(NotSolvable):
        kuttaka(6, 4, 3)
    with pytest.raises(DegenerateInput):
        kuttaka(0, 0, 5)


def test_kuttaka_b_zero():
    sol = kuttaka(3, 0, 12)
    assert (sol.x, sol.y, sol.x_period) == (4, 0, 0)
    # y is unconstrained, and the periods say so
    assert all(3 * x + 0 * y == 12 for x, y in map(sol.solutions, range(-3, 4)))
    assert len({sol.solutions(t) for t in range(5)}) == 5
    with pytest.raises(NotSolvable):
        kuttaka(3, 0, 10)


def test_kuttaka_a_zero():
    sol = kuttaka(0, -4, 12)
    assert (sol.x, sol.y) == (0, -3)


@pytest.mark.parametrize("a, b, c", [(17, -5, 1), (-17, 5, 1), (-17, -5, 3), (6, -9, 21), (1, 1, -7)])
def test_kuttaka_signs(a, b, c):
    sol = kuttaka(a, b, c)
    assert a * sol.x + b * sol.y == c
    assert sol.x == brute_kuttaka_x(a, b, c)


small = st.integers(-300, 300)


@given(small, small, st.integers(-10 ** 6, 10 ** 6))
def test_kuttaka_property(a, b, c):
    if a == 0 and b == 0:
        with pytest.raises(DegenerateInput):
            kuttaka(a, b, c)
        return
    g = common_divisor_gcd(a, b)
    if c % g:
        with pytest.raises(NotSolvable):
            kuttaka(a, b, c)
        return
    sol = kuttaka(a, b, c)
    assert sol.g == g
    assert a * sol.x + b * sol.y == c
    for t in (-2, -1, 1, 5):
        x, y = sol.solutions(t)
        assert a * x + b * y == c
    if b:
        assert sol.x == brute_kuttaka_x(a, b, c)
        assert 0 <= sol.x < abs(sol.x_period)


def test_kuttaka_trace_is_euclid_cascade():
    sink = ListSink()
    kuttaka(240, 46, 4, sink=sink)
    rs = [e.state["r"] for e in sink]
    assert rs == [240, 46, 10, 6, 4, 2]


@pytest.mark.parametrize("n, x, y", [(2, 3, 2), (61, 1766319049, 226153980), (3, 2, 1), (7, 8, 3), (13, 649, 180)])
def test_chakravala_examples(n, x, y):
    sol, _ = chakravala(n)
    assert (sol.x, sol.y, sol.N) == (x, y, n)
    assert x * x - n * y * y == 1


def test_chakravala_errors():
    with pytest.raises(PerfectSquare):
        chakravala(4)
    with pytest.raises(PerfectSquare):
        chakravala(144)
    for n in (1, 0, -3):
        with pytest.raises(InvalidModulus):
            chakravala(n)


def test_chakravala_61_start():
    _, trace = chakravala(61)
    assert trace[0] == ChakravalaState(8, 1, 3, 0)
    assert trace[-1].k == 1


def check_cycle(n, trace):
    assert trace[0].b == 1 and trace[0].m == 0
    for s in trace:
        assert s.a * s.a - n * s.b * s.b == s.k
        assert math.gcd(s.a, s.b) == 1
        assert s.k != 0
    assert trace[-1].k == 1
    assert all(s.k != 1 for s in trace[:-1])
    for prev, cur in zip(trace, trace[1:]):
        m = cur.m
        assert m >= 1 and (prev.a + prev.b * m) % abs(prev.k) == 0
        composed = brahmagupta_compose(prev, ChakravalaState(m, 1, m * m - n), n)
        kk = abs(prev.k)
        assert composed.a % kk == 0 and composed.b % kk == 0
        assert composed.k % (prev.k * prev.k) == 0
        assert (composed.a // kk, composed.b // kk, composed.k // (prev.k * prev.k)) == cur[:3]


def test_chakravala_choice_of_m_is_nearest():
    n = 61
    _, trace = chakravala(n)
    for prev, cur in zip(trace, trace[1:]):
        kk = abs(prev.k)
        admissible = [m for m in range(1, 4 * n) if (prev.a + prev.b * m) % kk == 0]
        best = min(abs(m * m - n) for m in admissible)
        assert cur.m == max(m for m in admissible if abs(m * m - n) == best)


@pytest.mark.parametrize("n", [n for n in range(2, 200) if math.isqrt(n) ** 2 != n])
def test_chakravala_cycle_and_continued_fraction(n):
    sol, trace = chakravala(n)
    check_cycle(n, trace)
    assert (sol.x, sol.y) == continued_fraction_pell(n)


@pytest.mark.parametrize("n", [n for n in range(2, 31) if math.isqrt(n) ** 2 != n])
def test_chakravala_minimal(n):
    sol, _ = chakravala(n)
    assert (sol.x, sol.y) == brute_pell_y(n)


def test_chakravala_sink_matches_trace():
    sink = ListSink()
    _, trace = chakravala(61, sink=sink)
    assert [tuple(e.state[f] for f in "abkm") for e in sink] == trace
    assert sink.events[0].note == "start"


@pytest.mark.parametrize("s1, s2, n, expected", [
    ((1, 1, -1), (1, 1, -1), 2, (3, 2, 1)),
    ((8, 1, 3), (8, 1, 3), 61, (125, 16, 9)),
    ((8, 1, 3), (1, 0, 1), 61, (8, 1, 3)),
])
def test_brahmagupta_compose_examples(s1, s2, n, expected):
    assert brahmagupta_compose(ChakravalaState(*s1), ChakravalaState(*s2), n)[:3] == expected


@given(st.integers(2, 10 ** 4), st.integers(-10 ** 9, 10 ** 9), st.integers(-10 ** 9, 10 ** 9),
       st.integers(-10 ** 9, 10 ** 9), st.integers(-10 ** 9, 10 ** 9))
def test_brahmagupta_compose_multiplies_k(n, a1, b1, a2, b2):
    s1 = ChakravalaState(a1, b1, a1 * a1 - n * b1 * b1)
    s2 = ChakravalaState(a2, b2, a2 * a2 - n * b2 * b2)
    c = brahmagupta_compose(s1, s2, n)
    assert c.a * c.a - n * c.b * c.b == c.k == s1.k * s2.k


def test_chakravala_large_n_sample():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randrange(2, 10 ** 5)
        if math.isqrt(n) ** 2 == n:
            continue
        sol, trace = chakravala(n)
        check_cycle(n, trace)
