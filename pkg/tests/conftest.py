import random
from pathlib import Path

import pytest

from discsum import Automaton
from discsum.fixtures import fix_a, fix_b

DATA = Path(__file__).parent / "data"


def random_automaton(rng, n_states=3, alphabet="ab", lam=None, max_weight=3,
                     density=0.4, complete=False, min_weight=0):
    """Small random NDA; ``complete`` forces a total transition relation with
    every state accepting at final weight 0."""
    states = [f"q{i}" for i in range(n_states)]
    lam = lam or rng.choice([2, 3])
    trans = []
    for p in states:
        for s in alphabet:
            dsts = [q for q in states if rng.random() < density]
            if complete and not dsts:
                dsts = [rng.choice(states)]
            for q in dsts:
                trans.append((p, s, q, rng.randint(min_weight, max_weight)))
    if complete:
        accepting = [(q, 0) for q in states]
        initial = [states[0]]
    else:
        accepting = [(q, rng.randint(min_weight, max_weight)) for q in states if rng.random() < 0.6]
        initial = [q for q in states if rng.random() < 0.4] or [states[0]]
    return Automaton(lam, list(alphabet), states, initial, accepting, trans)


def _random_run(rng, a, n):
    q = rng.choice(a.initial)
    weights = []
    for _ in range(n):
        out = [t for t in a.transitions if t.src == q]
        if not out:
            return None
        t = rng.choice(out)
        weights.append(t.weight)
        q = t.dst
    return weights


def random_run_pairs(count, seed=4242):
    """``count`` triples (automaton, weights1, weights2) of same-length random runs."""
    rng = random.Random(seed)
    made = 0
    while made < count:
        a = random_automaton(rng, n_states=3, min_weight=-4, max_weight=4, density=0.6)
        n = rng.randint(1, 10)
        r1, r2 = _random_run(rng, a, n), _random_run(rng, a, n)
        if r1 is None or r2 is None:
            continue
        made += 1
        yield a, r1, r2


def gammas(lam, weights):
    """Normalized prefix values: entry i is lam^i times the discounted sum of the first i weights."""
    g, out = 0, [0]
    for x in weights:
        g = lam * (g + x)
        out.append(g)
    return out


@pytest.fixture
def fixA2():
    return fix_a(2)


@pytest.fixture
def fixA3():
    return fix_a(3)


@pytest.fixture
def fixB():
    return fix_b()


@pytest.fixture
def rng():
    return random.Random(20261016)
