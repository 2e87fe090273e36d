"""Deterministic automata built from the reachable gap-vector graph."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Automaton, Transition, serialize_automaton
from .semantics import INF
from .vectors import GapVector, VectorGraph, explore

DEFAULT_MAX_NODES = 10_000_000


@dataclass(frozen=True)
class DDA:
    automaton: Automaton
    labels: dict  # DDA state name -> GapVector

    def serialize(self) -> str:
        comments = {q: f"vector: {q} = {v.label()}" for q, v in self.labels.items()}
        return serialize_automaton(self.automaton, comments)


def final_weight(a: Automaton, v: GapVector):
    """Cheapest ``v_q + fval(q)`` over accepting states with a finite entry, else None."""
    best = None
    for q, f in a.accepting:
        e = v.entries[a.index[q]]
        if e is INF:
            continue
        if best is None or e + f < best:
            best = e + f
    return best


def dda_from_graph(a: Automaton, graph: VectorGraph) -> DDA:
    names = {v: v.name(a) for v in graph.nodes}
    accepting = []
    for v in graph.nodes:
        f = final_weight(a, v)
        if f is not None:
            accepting.append((names[v], f))
    transitions = [Transition(names[src], sym, names[dst], r) for src, sym, r, dst in graph.edges]
    dda = Automaton(a.lam, a.alphabet, [names[v] for v in graph.nodes], [names[graph.root]],
                    accepting, transitions)
    return DDA(dda, {names[v]: v for v in graph.nodes})


def determinize(a: Automaton, bound: int, max_nodes: int = DEFAULT_MAX_NODES) -> DDA:
    """Deterministic automaton over gap vectors capped at ``bound``.

    The result is equivalent to ``a`` whenever ``bound`` is at least every
    recoverable gap of ``a``; for smaller bounds it is still built, just not
    guaranteed equivalent.
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    return dda_from_graph(a, explore(a, bound, max_nodes))


def auto_determinize(a: Automaton, max_nodes: int = DEFAULT_MAX_NODES, **kw):
    """Decide first; determinize with bound floor(N) if determinizable, else None."""
    from .decide import Determinizable, decide

    outcome = decide(a, max_nodes, **kw)
    if not isinstance(outcome, Determinizable):
        return None
    return determinize(a, outcome.bound, max_nodes)
