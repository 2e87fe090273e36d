import pytest

from discsum import Automaton, auto_determinize, decide, determinize, evaluate, parse_automaton
from discsum.core import ResourceLimitError
from discsum.decide import Determinizable
from discsum.oracle import equivalent_up_to

from conftest import random_automaton

FIX_B_DDA = """\
lambda 2
alphabet a b
states v_0_inf v_2_0
# vector: v_0_inf = v(0,inf)
# vector: v_2_0 = v(2,0)
initial v_0_inf
accepting v_0_inf 0
accepting v_2_0 0
trans v_0_inf a v_2_0 0
trans v_0_inf b v_0_inf 0
trans v_2_0 a v_2_0 2
trans v_2_0 b v_0_inf 2
"""


def test_fixture_b_dda(fixB):
    d = determinize(fixB, 2)
    assert d.serialize() == FIX_B_DDA
    assert d.automaton.is_deterministic()
    assert d.labels["v_2_0"].entries == (2, 0)
    assert parse_automaton(FIX_B_DDA) == d.automaton


def test_fixture_b_equivalent(fixB):
    d = determinize(fixB, 2).automaton
    assert equivalent_up_to(fixB, d, 8) is None
    assert evaluate(d, "aab") == evaluate(fixB, "aab")


def test_fixture_a_lambda3(fixA3):
    d = determinize(fixA3, 3)
    assert len(d.automaton.states) == 3
    assert d.automaton.is_deterministic()
    assert equivalent_up_to(fixA3, d.automaton, 8) is None


def test_unrecoverable_offset_can_be_cut(fixA3):
    # q2 never carries an optimal run when lam = 3 (the a-loop costs
    # 3 * (1 - 3^-n) < 3), so dropping its offset changes no value
    for bound in (0, 2):
        d = determinize(fixA3, bound)
        assert equivalent_up_to(fixA3, d.automaton, 8) is None


def test_small_bound_breaks_fixture_a_lambda2(fixA2):
    d = determinize(fixA2, 2)
    assert equivalent_up_to(fixA2, d.automaton, 8) is not None


def test_deterministic_input_bound_zero():
    a = Automaton(2, "ab", ["p", "q"], ["p"], [("p", 1), ("q", -1)],
                  [("p", "a", "q", 3), ("q", "b", "p", -2), ("q", "a", "q", 0)])
    d = determinize(a, 0).automaton
    assert len(d.states) == 2
    assert equivalent_up_to(a, d, 8) is None


def test_negative_bound_rejected(fixB):
    with pytest.raises(ValueError):
        determinize(fixB, -1)


def test_auto(fixB, fixA2):
    d = auto_determinize(fixB)
    assert d is not None and equivalent_up_to(fixB, d.automaton, 6) is None
    assert auto_determinize(fixA2) is None


def test_completeness_preserved(rng):
    for _ in range(30):
        a = random_automaton(rng, n_states=3, complete=True, min_weight=-2)
        assert a.is_complete()
        d = determinize(a, 8).automaton
        assert d.is_deterministic() and d.is_complete()


def test_determinizable_answers_give_equivalent_dda(rng):
    seen = 0
    for _ in range(40):
        a = random_automaton(rng, n_states=2, min_weight=-2)
        outcome = decide(a, 5000)
        if not isinstance(outcome, Determinizable):
            continue
        d = determinize(a, outcome.bound, 5000).automaton
        assert d.is_deterministic()
        assert equivalent_up_to(a, d, 7) is None
        seen += 1
    assert seen > 10


def test_three_state_determinizable_answers(rng):
    for _ in range(10):
        a = random_automaton(rng, n_states=3, min_weight=-2)
        try:
            outcome = decide(a, 3000)
            if isinstance(outcome, Determinizable):
                d = determinize(a, outcome.bound, 3000).automaton
                assert equivalent_up_to(a, d, 6) is None
        except ResourceLimitError:
            continue
