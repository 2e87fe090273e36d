"""Weight-free operations on the underlying NFA."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import Automaton


@dataclass(frozen=True)
class SubsetPair:
    u_set: frozenset[int]
    l_set: frozenset[int]

    def accepting(self, final_mask) -> bool:
        return any(final_mask[q] for q in self.u_set) and not any(final_mask[q] for q in self.l_set)


def _step(a: Automaton, subset, sym) -> frozenset[int]:
    succ = a.successors[sym]
    return frozenset(q for p in subset for q in succ[p])


def _indices(a: Automaton, states) -> frozenset[int]:
    return frozenset(a.index[q] for q in a.check_states(states))


def boolean_accepts(a: Automaton, sources, word) -> bool:
    """True iff some run on ``word`` from ``sources`` ends in an accepting state."""
    word = a.check_word(word)
    cur = _indices(a, sources)
    for sym in word:
        if not cur:
            return False
        cur = _step(a, cur, sym)
    return any(a.final_by_index[q] is not None for q in cur)


def difference_witness(a: Automaton, u_set, l_set):
    """Shortest, then alphabetically least, word accepted from ``u_set`` but not ``l_set``.

    Breadth-first search over pairs of subsets; returns None when the
    difference language is empty.
    """
    final_mask = [f is not None for f in a.final_by_index]
    start = SubsetPair(_indices(a, u_set), _indices(a, l_set))
    if not start.u_set:
        return None
    if start.accepting(final_mask):
        return ()
    parent = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        for sym in a.alphabet:
            u = _step(a, node.u_set, sym)
            if not u:
                continue
            nxt = SubsetPair(u, _step(a, node.l_set, sym))
            if nxt in parent:
                continue
            parent[nxt] = (node, sym)
            if nxt.accepting(final_mask):
                return _trace(parent, nxt)
            queue.append(nxt)
    return None


def _trace(parent, node) -> tuple[str, ...]:
    out = []
    while parent[node] is not None:
        node, sym = parent[node]
        out.append(sym)
    return tuple(reversed(out))
