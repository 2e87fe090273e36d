"""Brute-force reference semantics.

Deliberately naive: explicit run enumeration with :class:`fractions.Fraction`
arithmetic, sharing no code with :mod:`discsum.semantics` beyond the data model.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import Automaton

MAX_RUN_WORD = 12


class OracleLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class RunRecord:
    states: tuple[str, ...]
    weight: Fraction
    accepting: bool
    # None when the run ends in a non-accepting state
    weight_with_final: Fraction | None


def enumerate_runs(a: Automaton, word, cap: int = MAX_RUN_WORD) -> list[RunRecord]:
    """All runs of ``a`` on ``word`` from initial states, sorted by state sequence."""
    word = tuple(word)
    if len(word) > cap:
        raise OracleLimitError(f"word length {len(word)} exceeds run enumeration cap {cap}")
    for s in word:
        if s not in a.alphabet:
            raise ValueError(f"symbol {s!r} not in alphabet")
    order = {q: i for i, q in enumerate(a.states)}
    partial = [((q,), Fraction(0)) for q in a.initial]
    for i, sym in enumerate(word):
        step = Fraction(1, a.lam**i)
        nxt = []
        for path, wt in partial:
            for t in a.transitions:
                if t.src == path[-1] and t.symbol == sym:
                    nxt.append((path + (t.dst,), wt + step * t.weight))
        partial = nxt
    fw = a.final_weights
    out = []
    for path, wt in partial:
        last = path[-1]
        if last in fw:
            out.append(RunRecord(path, wt, True, wt + Fraction(fw[last], a.lam ** len(word))))
        else:
            out.append(RunRecord(path, wt, False, None))
    out.sort(key=lambda r: [order[q] for q in r.states])
    return out


def brute_value(a: Automaton, word):
    """min over accepting runs of weight plus discounted final weight; None if no such run."""
    vals = [r.weight_with_final for r in enumerate_runs(a, word) if r.accepting]
    return min(vals) if vals else None


def brute_min_value(a: Automaton, word, sources, targets, with_final=False):
    """Reference ``A_[P -> P'](w)`` by enumeration from an arbitrary source set."""
    word = tuple(word)
    sub = Automaton(a.lam, a.alphabet, a.states, tuple(q for q in a.states if q in set(sources)),
                    a.accepting, a.transitions)
    targets = set(targets)
    vals = []
    for r in enumerate_runs(sub, word):
        if r.states[-1] not in targets:
            continue
        if with_final:
            if r.accepting:
                vals.append(r.weight_with_final)
        else:
            vals.append(r.weight)
    return min(vals) if vals else None


def words_up_to(alphabet, max_len: int):
    """All words of length <= max_len in length-lexicographic order."""
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)


def equivalent_up_to(a: Automaton, d: Automaton, max_len: int):
    """Shortest word (length-lex) on which the two automata disagree, or None.

    Uses the exact DP evaluator so that long words stay cheap; the run
    enumerator is cross-checked against it separately.
    """
    from .semantics import evaluate, values_equal

    if tuple(a.alphabet) != tuple(d.alphabet) and set(a.alphabet) != set(d.alphabet):
        raise ValueError("automata have different alphabets")
    for w in words_up_to(a.alphabet, max_len):
        if not values_equal(evaluate(a, w), evaluate(d, w)):
            return w
    return None
