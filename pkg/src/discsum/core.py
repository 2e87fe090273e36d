"""Automaton data model, text format, and DOT export."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

TOKEN_RE = re.compile(r"^[A-Za-z0-9_]+$")
INT_RE = re.compile(r"^[+-]?[0-9]+$")


class AutomatonError(ValueError):
    """Base class for automaton construction and parsing errors."""


class ParseError(AutomatonError):
    """Malformed automaton text; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ValidationError(AutomatonError):
    """Structurally well-formed automaton that violates a semantic rule."""


class ResourceLimitError(RuntimeError):
    """A configured size limit was exceeded; says nothing about the answer."""


class Transition(NamedTuple):
    src: str
    symbol: str
    dst: str
    weight: int


@dataclass(frozen=True, eq=True)
class Automaton:
    """Nondeterministic discounted-sum automaton with integer weights.

    ``accepting`` is an ordered tuple of ``(state, final_weight)`` pairs; use
    :attr:`final_weights` for dictionary access. All tuples keep the order in
    which they were given so that serialization round-trips exactly.
    """

    lam: int
    alphabet: tuple[str, ...]
    states: tuple[str, ...]
    initial: tuple[str, ...] = ()
    accepting: tuple[tuple[str, int], ...] = ()
    transitions: tuple[Transition, ...] = field(default=())

    def __post_init__(self):
        # normalise lists passed by callers into tuples
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "initial", tuple(self.initial))
        object.__setattr__(self, "accepting", tuple((q, int(f)) for q, f in self.accepting))
        object.__setattr__(self, "transitions", tuple(Transition(*t) for t in self.transitions))
        self._validate()

    def _validate(self) -> None:
        if isinstance(self.lam, bool) or not isinstance(self.lam, int):
            raise ValidationError(f"lambda must be an integer, got {self.lam!r}")
        if self.lam < 2:
            raise ValidationError(f"λ < 2: lambda {self.lam} is not an integer discount factor >= 2")
        _check_distinct("symbol", self.alphabet)
        _check_distinct("state", self.states)
        known = set(self.states)
        sigma = set(self.alphabet)
        _check_distinct("initial state", self.initial)
        for q in self.initial:
            if q not in known:
                raise ValidationError(f"unknown state {q!r} in initial")
        _check_distinct("accepting state", [q for q, _ in self.accepting])
        for q, _ in self.accepting:
            if q not in known:
                raise ValidationError(f"unknown state {q!r} in accepting")
        seen = set()
        for t in self.transitions:
            if t.src not in known:
                raise ValidationError(f"unknown state {t.src!r} in transition")
            if t.dst not in known:
                raise ValidationError(f"unknown state {t.dst!r} in transition")
            if t.symbol not in sigma:
                raise ValidationError(f"unknown symbol {t.symbol!r} in transition")
            if isinstance(t.weight, bool) or not isinstance(t.weight, int):
                raise ValidationError(f"transition weight must be an integer, got {t.weight!r}")
            key = (t.src, t.symbol, t.dst)
            if key in seen:
                raise ValidationError(f"duplicate transition {t.src} {t.symbol} {t.dst}")
            seen.add(key)

    @cached_property
    def final_weights(self) -> dict[str, int]:
        return dict(self.accepting)

    @cached_property
    def index(self) -> dict[str, int]:
        return {q: i for i, q in enumerate(self.states)}

    @cached_property
    def delta(self) -> dict[str, list[tuple[int, int, int]]]:
        """symbol -> list of (src index, dst index, weight)."""
        out: dict[str, list[tuple[int, int, int]]] = {s: [] for s in self.alphabet}
        for t in self.transitions:
            out[t.symbol].append((self.index[t.src], self.index[t.dst], t.weight))
        return out

    @cached_property
    def successors(self) -> dict[str, list[list[int]]]:
        """symbol -> per-source-index list of destination indices."""
        out = {s: [[] for _ in self.states] for s in self.alphabet}
        for t in self.transitions:
            out[t.symbol][self.index[t.src]].append(self.index[t.dst])
        return out

    @cached_property
    def final_by_index(self) -> tuple[int | None, ...]:
        fw = self.final_weights
        return tuple(fw.get(q) for q in self.states)

    def is_deterministic(self) -> bool:
        if len(self.initial) != 1:
            return False
        pairs = [(t.src, t.symbol) for t in self.transitions]
        return len(pairs) == len(set(pairs))

    def is_complete(self) -> bool:
        """Total transition function and every state accepting with final weight 0."""
        fw = self.final_weights
        if any(fw.get(q) != 0 for q in self.states):
            return False
        have = {(t.src, t.symbol) for t in self.transitions}
        return all((q, s) in have for q in self.states for s in self.alphabet)

    def with_lambda(self, lam: int) -> Automaton:
        return Automaton(lam, self.alphabet, self.states, self.initial, self.accepting, self.transitions)

    def check_word(self, word: Iterable[str]) -> tuple[str, ...]:
        word = tuple(word)
        for s in word:
            if s not in self.delta:
                raise ValueError(f"symbol {s!r} not in alphabet {list(self.alphabet)}")
        return word

    def check_states(self, states: Iterable[str]) -> frozenset[str]:
        states = frozenset(states)
        for q in states:
            if q not in self.index:
                raise ValueError(f"unknown state {q!r}")
        return states


def _check_distinct(kind: str, items) -> None:
    seen = set()
    for x in items:
        if not isinstance(x, str) or not TOKEN_RE.match(x):
            raise ValidationError(f"invalid {kind} token {x!r}")
        if x in seen:
            raise ValidationError(f"duplicate {kind} {x!r}")
        seen.add(x)


# ---------------------------------------------------------------------------
# text format

_ARITY = {"lambda": 1, "accepting": 2, "trans": 4}
_VARIADIC = ("alphabet", "states", "initial")


def parse_automaton(text: str) -> Automaton:
    """Parse the line-based automaton format.

    Comments start with ``#``; blank lines are ignored. Every keyword line is
    checked for its exact token count, and nothing is repaired silently.
    """
    lam = None
    alphabet = states = initial = None
    accepting: list[tuple[str, int]] = []
    transitions: list[Transition] = []
    trans_keys: dict[tuple[str, str, str], int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        if not tokens:
            continue
        key, col = tokens[0]
        args = tokens[1:]
        if key in _ARITY:
            if len(args) != _ARITY[key]:
                raise ParseError(
                    f"{key!r} expects {_ARITY[key]} argument(s), got {len(args)}", lineno, col
                )
        elif key in _VARIADIC:
            if key != "initial" and not args:
                raise ParseError(f"{key!r} expects at least one argument", lineno, col)
        else:
            raise ParseError(f"unknown keyword {key!r}", lineno, col)

        for tok, tcol in args:
            if not TOKEN_RE.match(tok) and not (INT_RE.match(tok)):
                raise ParseError(f"invalid token {tok!r}", lineno, tcol)

        if key == "lambda":
            if lam is not None:
                raise ParseError("duplicate 'lambda' line", lineno, col)
            tok, tcol = args[0]
            if not INT_RE.match(tok):
                raise ParseError(f"lambda must be an integer, got {tok!r}", lineno, tcol)
            lam = int(tok)
            if lam < 2:
                raise ParseError(f"λ < 2: lambda {tok!r} must be an integer >= 2", lineno, tcol)
        elif key in _VARIADIC:
            names = [t for t, _ in args]
            if key == "alphabet":
                if alphabet is not None:
                    raise ParseError("duplicate 'alphabet' line", lineno, col)
                alphabet = names
            elif key == "states":
                if states is not None:
                    raise ParseError("duplicate 'states' line", lineno, col)
                states = names
            else:
                if initial is not None:
                    raise ParseError("duplicate 'initial' line", lineno, col)
                initial = names
            _check_line_refs(key, args, lineno, alphabet, states)
        elif key == "accepting":
            (q, qcol), (f, fcol) = args
            if not INT_RE.match(f):
                raise ParseError(f"final weight must be an integer, got {f!r}", lineno, fcol)
            _check_state(q, qcol, lineno, states)
            if any(q == p for p, _ in accepting):
                raise ParseError(f"duplicate accepting state {q!r}", lineno, qcol)
            accepting.append((q, int(f)))
        elif key == "trans":
            (src, scol), (sym, ycol), (dst, dcol), (wt, wcol) = args
            _check_state(src, scol, lineno, states)
            if alphabet is None or sym not in alphabet:
                raise ParseError(f"unknown symbol {sym!r}", lineno, ycol)
            _check_state(dst, dcol, lineno, states)
            if not INT_RE.match(wt):
                raise ParseError(f"weight must be an integer, got {wt!r}", lineno, wcol)
            k = (src, sym, dst)
            if k in trans_keys:
                raise ParseError(
                    f"duplicate transition {src} {sym} {dst} (first on line {trans_keys[k]})",
                    lineno,
                    scol,
                )
            trans_keys[k] = lineno
            transitions.append(Transition(src, sym, dst, int(wt)))

    if lam is None:
        raise ParseError("missing 'lambda' line", 1)
    if alphabet is None:
        raise ParseError("missing 'alphabet' line", 1)
    if states is None:
        raise ParseError("missing 'states' line", 1)
    try:
        return Automaton(lam, alphabet, states, initial or (), accepting, transitions)
    except ValidationError as e:
        raise ParseError(str(e), 1) from e


def _check_line_refs(key, args, lineno, alphabet, states):
    if key == "initial":
        for tok, tcol in args:
            _check_state(tok, tcol, lineno, states)
    seen = set()
    for tok, tcol in args:
        if not TOKEN_RE.match(tok):
            raise ParseError(f"invalid name {tok!r}", lineno, tcol)
        if tok in seen:
            raise ParseError(f"duplicate name {tok!r} in {key!r}", lineno, tcol)
        seen.add(tok)


def _check_state(name, col, lineno, states):
    if states is None:
        raise ParseError(f"state {name!r} used before 'states' line", lineno, col)
    if name not in states:
        raise ParseError(f"unknown state {name!r}", lineno, col)


def serialize_automaton(a: Automaton, comments: dict[str, str] | None = None) -> str:
    """Render ``a`` in the text format.

    ``comments`` optionally maps state names to a comment emitted after the
    ``states`` line (used for vector labels of determinized automata).
    """
    lines = [f"lambda {a.lam}", "alphabet " + " ".join(a.alphabet), "states " + " ".join(a.states)]
    if comments:
        for q in a.states:
            if q in comments:
                lines.append(f"# {comments[q]}")
    if a.initial:
        lines.append("initial " + " ".join(a.initial))
    for q, f in a.accepting:
        lines.append(f"accepting {q} {f}")
    for t in a.transitions:
        lines.append(f"trans {t.src} {t.symbol} {t.dst} {t.weight}")
    return "\n".join(lines) + "\n"


def _dot_id(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(a, labels: dict[str, str] | None = None) -> str:
    """Graphviz description of an automaton or of a DDA (anything with an
    ``automaton`` attribute; its vector labels are used as node captions)."""
    if labels is None and hasattr(a, "automaton"):
        labels = {q: v.label() for q, v in a.labels.items()}
        a = a.automaton
    labels = labels or {}
    fw = a.final_weights
    out = ["digraph automaton {", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for q in a.states:
        caption = _dot_id(labels.get(q, q))
        attrs = []
        if q in fw:
            attrs.append("shape=doublecircle")
            caption = caption[:-1] + f'\\nfinal {fw[q]}"'
        else:
            attrs.append("shape=circle")
        attrs.append(f"label={caption}")
        out.append(f"  {_dot_id(q)} [{', '.join(attrs)}];")
    for q in a.initial:
        out.append(f"  __start -> {_dot_id(q)};")
    for t in a.transitions:
        out.append(f'  {_dot_id(t.src)} -> {_dot_id(t.dst)} [label="{t.symbol},{t.weight}"];')
    out.append("}")
    return "\n".join(out) + "\n"
