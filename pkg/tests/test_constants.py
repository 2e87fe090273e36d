from fractions import Fraction

import pytest

from discsum import Automaton, compute_constants, max_weight
from discsum.constants import ResourceLimitError, iterate_growth

from conftest import random_automaton


def test_max_weight(fixA2, fixB):
    assert max_weight(fixA2) == 3
    assert max_weight(fixB) == 1
    assert max_weight(Automaton(2, ["a"], ["q"], ["q"], [("q", 0)])) == 0
    assert max_weight(Automaton(2, ["a"], ["q"], ["q"], [("q", -7)], [("q", "a", "q", 4)])) == 7


def test_constants_fixture_b(fixB):
    c = compute_constants(fixB)
    assert (c.m_a, c.big_m, c.big_n, c.big_c) == (1, 4, 4, 20)


def test_constants_fixture_a_lambda2(fixA2):
    c = compute_constants(fixA2)
    assert c.m_a == 3 and c.big_m == 12
    assert c.big_n == 2**4608 * 12 + 12
    assert c.big_c == 6 * c.big_n + 12
    assert str(c.n_symbolic) == "2^4608·12 + 12"
    assert c.n_symbolic.value == c.big_n and c.c_symbolic.value == c.big_c


def test_constants_fixture_a_lambda3(fixA3):
    c = compute_constants(fixA3)
    assert c.big_m == 9
    assert c.big_n == 9 * (3**4608 + 1)
    assert c.big_c == Fraction(3, 2) * (3 * c.big_n + 6)
    # 81 * 3^4608 + 99 is even, so C is an integer despite the 3/2 factor
    assert c.big_c.denominator == 1
    assert str(c.c_symbolic) == "3^4608·81/2 + 99/2"


def test_exponent_cap():
    five = Automaton(2, ["a"], [f"q{i}" for i in range(5)])
    with pytest.raises(ResourceLimitError):
        compute_constants(five)
    c = compute_constants(Automaton(2, ["a"], ["p", "q"]), max_exponent=64)
    assert c.big_n == 0


def test_single_state_threshold_is_not_positive():
    a = Automaton(2, ["a"], ["q"], ["q"], [("q", 0)], [("q", "a", "q", 1)])
    assert compute_constants(a).big_n <= 0


def test_ordering_of_constants(rng):
    for _ in range(30):
        a = random_automaton(rng, n_states=rng.randint(2, 3), min_weight=-3)
        c = compute_constants(a)
        if c.m_a == 0:
            continue
        n = len(a.states)
        assert c.big_c > c.big_n * n >= c.big_n
        assert c.big_n >= c.big_m


@pytest.mark.parametrize("lam", [2, 3, 4])
@pytest.mark.parametrize("m_a", [0, 1, 3])
def test_closed_form_of_gap_growth(lam, m_a):
    # x -> lam*(x + 2 m_A) has fixed point -M, so its iterates are
    # lam^k (x + M) - M; the form lam^k (x - M) + M only matches when m_A = 0
    big_m = 2 * Fraction(lam, lam - 1) * m_a
    for x in (Fraction(0), Fraction(5), Fraction(-7, 3), big_m):
        for k in range(21):
            got = iterate_growth(x, k, lam, m_a)
            assert got == lam**k * (x + big_m) - big_m
            if m_a and k:
                assert got != lam**k * (x - big_m) + big_m


def test_threshold_uses_stated_closed_form():
    a = Automaton(3, ["a"], ["p", "q"], ["p"], [("p", 0)], [("p", "a", "q", 2)])
    c = compute_constants(a)
    assert c.big_m == 6
    assert c.big_n == 3**64 * (c.big_m - c.big_m) + c.big_m == 6
