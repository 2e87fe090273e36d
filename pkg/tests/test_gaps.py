from fractions import Fraction

import pytest

from discsum import boolean_accepts, compute_constants
from discsum.gaps import GapUndefined, enumerate_gaps, find_recovery_suffix, gap, recovers
from discsum.oracle import brute_min_value
from discsum.semantics import INF

from conftest import gammas, random_automaton, random_run_pairs


def _oracle_gap(a, w, q_u, q_l):
    hi = brute_min_value(a, w, a.initial, {q_u})
    lo = brute_min_value(a, w, a.initial, {q_l})
    return a.lam ** len(w) * (hi - lo)


def test_gap_examples(fixA2):
    assert gap(fixA2, "aaa", "q0", "q2") == 4
    assert gap(fixA2, "a", "q2", "q0") == 2
    assert gap(fixA2, "a", "q0", "q2") == -2
    assert gap(fixA2, "ab", "q1", "q1") == 0


def test_gap_growth_on_a_power(fixA2):
    got = [gap(fixA2, "a" * k, "q0", "q2") for k in range(1, 7)]
    assert got == [-2, 0, 4, 12, 28, 60]
    assert got == [_oracle_gap(fixA2, "a" * k, "q0", "q2") for k in range(1, 7)]


def test_gap_matches_oracle(rng):
    for _ in range(40):
        a = random_automaton(rng, n_states=3, min_weight=-3)
        for w in ["", "a", "ab", "bba", "abab"]:
            for q_u in a.states:
                for q_l in a.states:
                    try:
                        g = gap(a, w, q_u, q_l)
                    except GapUndefined:
                        assert brute_min_value(a, w, a.initial, {q_l}) is None
                        continue
                    if g is INF:
                        assert brute_min_value(a, w, a.initial, {q_u}) is None
                    else:
                        assert g == _oracle_gap(a, w, q_u, q_l)


def test_gap_undefined(fixA2):
    with pytest.raises(GapUndefined):
        gap(fixA2, "b", "q0", "q2")
    with pytest.raises(GapUndefined):
        gap(fixA2, "a", "q2", "q1")
    assert gap(fixA2, "b", "q0", "q1") is INF


def test_recovery_suffix_examples(fixA2, fixB):
    assert find_recovery_suffix(fixA2, "aaa", "q0", "q2", 3) == ("b",)
    assert find_recovery_suffix(fixA2, "a", "q2", "q0", 3) == ("a",)
    # q1 has no outgoing transitions, so the run through q0 stays optimal on "aa"
    assert find_recovery_suffix(fixB, "a", "q0", "q1", 4) == ("a",)
    assert recovers(fixB, "a", "q0", "a")
    assert not recovers(fixB, "a", "q0", "")


def test_recovery_suffix_requires_order(fixA2):
    with pytest.raises(ValueError):
        find_recovery_suffix(fixA2, "a", "q0", "q2", 2)


def test_enumerate_fixture_a_lambda2(fixA2):
    recs = enumerate_gaps(fixA2, 5, 2)
    gaps = {r.gap for r in recs}
    assert {2, 4, 12, 28} <= gaps
    chain = {r.w: r.gap for r in recs if set(r.w) == {"a"} and r.q_u == "q0" and r.q_l == "q2"}
    assert chain == {("a",) * k: 2**k - 4 for k in range(2, 6)}
    first = [r for r in recs if r.w == ("a",) and r.q_u == "q2" and r.q_l == "q0"]
    assert [(r.gap, r.z) for r in first] == [(2, ("a",))]


def test_enumerate_fixture_a_lambda3(fixA3):
    recs = enumerate_gaps(fixA3, 6, 2)
    assert recs
    assert all(0 <= r.gap <= 3 for r in recs)


def test_enumerate_empty_word(fixA2, fixB):
    for a in (fixA2, fixB):
        recs = enumerate_gaps(a, 0, 3)
        assert all(r.w == () and r.gap == 0 for r in recs)
        assert {r.q_u for r in recs} == set(a.initial)


def test_enumerated_records_hold(rng):
    for _ in range(25):
        a = random_automaton(rng, n_states=3, min_weight=-2)
        big_m = compute_constants(a).big_m
        for r in enumerate_gaps(a, 3, 2):
            assert isinstance(r.gap, int) and r.gap >= 0
            assert r.gap == _oracle_gap(a, r.w, r.q_u, r.q_l)
            assert recovers(a, r.w, r.q_u, r.z)
            if r.gap > big_m:
                assert not boolean_accepts(a, {r.q_l}, r.z)


def test_large_gaps_only_grow():
    for a, r1, r2 in random_run_pairs(1000):
        big_m = compute_constants(a).big_m
        g1, g2 = gammas(a.lam, r1), gammas(a.lam, r2)
        d = [x - y for x, y in zip(g1, g2)]
        for n in range(len(d) - 1):
            if d[n] > big_m:
                assert d[n + 1] > d[n]


def test_no_bypass():
    for a, r1, r2 in random_run_pairs(1000):
        lam = a.lam
        v1 = sum(Fraction(x, lam**i) for i, x in enumerate(r1))
        v2 = sum(Fraction(x, lam**i) for i, x in enumerate(r2))
        if v1 > v2:
            r1, r2 = r2, r1
        big_m = compute_constants(a).big_m
        g1, g2 = gammas(lam, r1), gammas(lam, r2)
        assert all(x - y <= big_m for x, y in zip(g1, g2))
