"""Gap vectors: per-state normalized distance to the cheapest run, with a cutoff.

A vector reached by a word ``w`` stores, for each state ``q``, the integer
``lam**|w| * (A_[Q0->q](w) - A(w))`` as long as it stays within ``bound``;
larger distances collapse to INF. Stepping a vector by one letter yields the
successor vector and an integer offset ``r``, which is the weight of the
corresponding deterministic transition.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .core import Automaton, ResourceLimitError
from .semantics import INF


@dataclass(frozen=True)
class GapVector:
    """Entries aligned with ``Automaton.states`` plus the NFA-reachable set.

    Identity covers entries and reach; ``bound`` is carried for convenience.
    """

    entries: tuple
    reach: frozenset
    bound: Fraction = field(default=Fraction(0), compare=False, hash=False)

    def entry(self, a: Automaton, q: str):
        return self.entries[a.index[q]]

    def as_dict(self, a: Automaton) -> dict:
        return dict(zip(a.states, self.entries))

    def finite_states(self, a: Automaton) -> frozenset:
        return frozenset(q for q, e in zip(a.states, self.entries) if e is not INF)

    def label(self) -> str:
        """Readable form such as ``v(2,0)``."""
        return "v(" + ",".join(str(e) for e in self.entries) + ")"

    def name(self, a: Automaton) -> str:
        """A state token for the text format: ``v_2_0``, with the reach set
        appended when it differs from the finite entries."""
        base = "v_" + "_".join("inf" if e is INF else str(e) for e in self.entries)
        if self.reach != self.finite_states(a):
            base += "__r_" + "_".join(q for q in a.states if q in self.reach)
        return base


def initial_vector(a: Automaton, bound=0) -> GapVector:
    init = set(a.initial)
    entries = tuple(0 if q in init else INF for q in a.states)
    return GapVector(entries, frozenset(init), Fraction(bound))


def vector_step(a: Automaton, v: GapVector, sym: str, bound=None):
    """Successor of ``v`` on ``sym`` and its offset, or None if every tracked run dies.

    ``bound`` defaults to the bound stored on ``v``.
    """
    bound = v.bound if bound is None else Fraction(bound)
    a.check_word((sym,))
    lam = a.lam
    inter = [INF] * len(a.states)
    for p, q, wt in a.delta[sym]:
        e = v.entries[p]
        if e is INF:
            continue
        cand = e + wt
        if inter[q] is INF or cand < inter[q]:
            inter[q] = cand
    finite = [x for x in inter if x is not INF]
    if not finite:
        return None
    r = min(finite)
    entries = []
    for x in inter:
        if x is INF:
            entries.append(INF)
            continue
        e = lam * (x - r)
        assert e >= 0
        entries.append(e if e <= bound else INF)
    succ = a.successors[sym]
    reach = frozenset(
        a.states[q] for p in v.reach for q in succ[a.index[p]]
    )
    return GapVector(tuple(entries), reach, bound), r


@dataclass
class VectorGraph:
    """Reachable fragment of the vector automaton, in breadth-first order.

    Access words are stored as parent pointers (they can be thousands of
    letters long); :meth:`access_word` rebuilds one on demand.
    """

    root: GapVector
    nodes: list = field(default_factory=list)
    edges: list = field(default_factory=list)
    parent: dict = field(default_factory=dict)
    depth: dict = field(default_factory=dict)
    _succ: dict = field(default_factory=dict, repr=False)

    def add_node(self, v: GapVector, via=None) -> None:
        self.nodes.append(v)
        self.parent[v] = via
        self.depth[v] = 0 if via is None else self.depth[via[0]] + 1

    def add_edge(self, src: GapVector, sym: str, r: int, dst: GapVector) -> None:
        self.edges.append((src, sym, r, dst))
        self._succ[src, sym] = (dst, r)

    def successor(self, v: GapVector, sym: str):
        return self._succ.get((v, sym))

    def access_word(self, v: GapVector) -> tuple[str, ...]:
        out = []
        while self.parent[v] is not None:
            v, sym = self.parent[v]
            out.append(sym)
        return tuple(reversed(out))

    @property
    def access(self) -> dict:
        return {v: self.access_word(v) for v in self.nodes}


def iter_explore(a: Automaton, bound, max_nodes: int):
    """Breadth-first exploration from the initial vector.

    Yields ``(graph, node)`` for every node in discovery order (shortest,
    then alphabetically least, access word first). Edges leaving a node are
    recorded before any of its successors are yielded, so callers that stop
    early still hold a consistent partial graph.
    """
    bound = Fraction(bound)
    root = initial_vector(a, bound)
    graph = VectorGraph(root)
    graph.add_node(root)
    yield graph, root
    queue = deque([root])
    while queue:
        v = queue.popleft()
        fresh = []
        for sym in a.alphabet:
            step = vector_step(a, v, sym, bound)
            if step is None:
                continue
            u, r = step
            graph.add_edge(v, sym, r, u)
            if u in graph.parent:
                continue
            if len(graph.nodes) >= max_nodes:
                raise ResourceLimitError(f"vector exploration exceeded {max_nodes} nodes")
            graph.add_node(u, (v, sym))
            queue.append(u)
            fresh.append(u)
        for u in fresh:
            yield graph, u


def explore(a: Automaton, bound, max_nodes: int = 10_000_000) -> VectorGraph:
    """Closure of :func:`vector_step` from the initial vector."""
    graph = None
    for graph, _ in iter_explore(a, bound, max_nodes):
        pass
    return graph
