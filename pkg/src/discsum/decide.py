"""Determinizability decision with certified witnesses.

The search walks the gap-vector graph with cutoff C and, at each node, looks
for a split of the states into a lower and an upper block whose distance
exceeds N and which some suffix separates in the Boolean sense (every lower
run dies, some upper run accepts). A hit is re-checked with exact semantics
before it is reported; exhausting the graph means the automaton is
determinizable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import nfa
from .constants import ConstantSet, compute_constants, DEFAULT_MAX_EXPONENT
from .core import Automaton
from .semantics import INF, min_value, normalized_run_values, evaluate, values_equal
from .vectors import GapVector, iter_explore

DEFAULT_MAX_NODES = 10_000_000


@dataclass(frozen=True)
class SeparationWitness:
    w: tuple[str, ...]
    u_set: frozenset[str]
    l_set: frozenset[str]
    q_u: str
    z: tuple[str, ...]

    def to_json(self, a: Automaton) -> dict:
        return {
            "w": "".join(self.w) if all(len(s) == 1 for s in a.alphabet) else list(self.w),
            "U": [q for q in a.states if q in self.u_set],
            "L": [q for q in a.states if q in self.l_set],
            "q_u": self.q_u,
            "z": "".join(self.z) if all(len(s) == 1 for s in a.alphabet) else list(self.z),
        }


@dataclass(frozen=True)
class Determinizable:
    bound: int
    constants: ConstantSet | None = field(default=None, repr=False)
    nodes: int = 0


@dataclass(frozen=True)
class NotDeterminizable:
    witness: SeparationWitness
    constants: ConstantSet | None = field(default=None, repr=False)
    nodes: int = 0


def _order_key(v: GapVector, a: Automaton):
    def key(i):
        e = v.entries[i]
        if e is not INF:
            return (0, e, i)
        # reachable-but-cut-off before unreachable, then state order
        return (1 if a.states[i] in v.reach else 2, 0, i)

    return key


def check_separation(a: Automaton, v: GapVector, threshold):
    """First boundary split of ``v`` whose blocks are more than ``threshold`` apart
    and are separated by some suffix.

    Returns ``(u_set, l_set, z)`` or None. Only the upper block's reachable
    states are asked to accept ``z``; every lower state must reject it.
    """
    threshold = Fraction(threshold)
    n = len(a.states)
    order = sorted(range(n), key=_order_key(v, a))
    for cut in range(1, n):
        lower = order[:cut]
        upper = order[cut:]
        top_low = v.entries[lower[-1]]
        if top_low is INF:
            break
        bottom_up = v.entries[upper[0]]
        if bottom_up is not INF and not bottom_up - top_low > threshold:
            continue
        u_set = frozenset(a.states[i] for i in upper)
        live = u_set & v.reach
        if not live:
            continue
        l_set = frozenset(a.states[i] for i in lower)
        z = nfa.difference_witness(a, live, l_set)
        if z is not None:
            return u_set, l_set, z
    return None


def cheapest_upper_state(a: Automaton, w, u_set, z):
    """State of ``u_set`` minimising ``A_[Q0->q](w) + lam^-|w| A_[q->f alpha](z)``; ties by state order."""
    gammas = normalized_run_values(a, w, a.initial)
    best, best_q = None, None
    for i, q in enumerate(a.states):
        if q not in u_set or gammas[i] is INF:
            continue
        tail = min_value(a, z, {q}, a.states, with_final=True)
        if tail is INF:
            continue
        total = tail.discount(len(w)) + min_value(a, w, a.initial, {q})
        if best is None or total < best:
            best, best_q = total, q
    return best_q


def validate_witness(a: Automaton, wit: SeparationWitness, threshold) -> bool:
    """Re-check both separation conditions directly with exact semantics."""
    threshold = Fraction(threshold)
    u_set, l_set = frozenset(wit.u_set), frozenset(wit.l_set)
    if not u_set or not l_set or u_set & l_set or (u_set | l_set) != set(a.states):
        return False
    if wit.q_u not in u_set:
        return False
    w, z = tuple(wit.w), tuple(wit.z)
    lam = a.lam
    for qu in u_set:
        hi = min_value(a, w, a.initial, {qu})
        for ql in l_set:
            lo = min_value(a, w, a.initial, {ql})
            if hi is INF:
                if lo is INF:
                    return False
                continue
            if lo is INF:
                return False
            if not (hi - lo).to_fraction() * lam ** len(w) > threshold:
                return False
    head = min_value(a, w, a.initial, {wit.q_u})
    tail = min_value(a, z, {wit.q_u}, a.states, with_final=True)
    if head is INF or tail is INF:
        return False
    total = evaluate(a, w + z)
    if total is INF:
        return False
    return values_equal(head + tail.discount(len(w)), total)


def decide(
    a: Automaton,
    max_nodes: int = DEFAULT_MAX_NODES,
    cutoff=None,
    max_exponent: int = DEFAULT_MAX_EXPONENT,
):
    """Decide whether ``a`` has an equivalent deterministic automaton.

    ``cutoff`` replaces the sound cutoff C for experiments only; with it the
    Determinizable answer is no longer guaranteed. Raises
    :class:`~discsum.core.ResourceLimitError` rather than guessing.
    """
    consts = compute_constants(a, max_exponent)
    bound = consts.big_c if cutoff is None else Fraction(cutoff)
    threshold = consts.big_n
    count = 0
    for graph, v in iter_explore(a, bound, max_nodes):
        count = len(graph.nodes)
        hit = check_separation(a, v, threshold)
        if hit is None:
            continue
        u_set, l_set, z = hit
        w = graph.access_word(v)
        q_u = cheapest_upper_state(a, w, u_set, z)
        if q_u is None:
            continue
        wit = SeparationWitness(w, u_set, l_set, q_u, z)
        if validate_witness(a, wit, threshold):
            return NotDeterminizable(wit, consts, count)
    return Determinizable(max(consts.n_floor, 0), consts, count)
