"""Gap values and bounded search for recoverable gaps."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Automaton
from .oracle import words_up_to
from .semantics import INF, evaluate, min_value, normalized_diff, values_equal


class GapUndefined(ValueError):
    pass


@dataclass(frozen=True)
class GapRecord:
    w: tuple[str, ...]
    q_u: str
    q_l: str
    gap: int
    z: tuple[str, ...]

    def to_json(self) -> dict:
        return {"w": "".join(self.w), "q_u": self.q_u, "q_l": self.q_l,
                "gap": self.gap, "z": "".join(self.z)}


def gap(a: Automaton, w, q_u: str, q_l: str):
    """``lam**|w| * (A_[Q0->q_u](w) - A_[Q0->q_l](w))``; INF when only q_u is unreachable."""
    w = a.check_word(w)
    hi = min_value(a, w, a.initial, {q_u})
    lo = min_value(a, w, a.initial, {q_l})
    if hi is INF and lo is INF:
        raise GapUndefined(f"neither {q_u} nor {q_l} is reachable on {''.join(w)!r}")
    if lo is INF:
        raise GapUndefined(f"{q_l} is unreachable on {''.join(w)!r} while {q_u} is reachable")
    return normalized_diff(hi, lo, len(w), a.lam)


def recovers(a: Automaton, w, q_u: str, z) -> bool:
    """Second recoverability condition: the cheapest run to ``q_u`` extends to an optimal run on ``wz``."""
    head = min_value(a, w, a.initial, {q_u})
    if head is INF:
        return False
    tail = min_value(a, z, {q_u}, a.states, with_final=True)
    if tail is INF:
        return False
    return values_equal(head + tail.discount(len(w)), evaluate(a, tuple(w) + tuple(z)))


def find_recovery_suffix(a: Automaton, w, q_u: str, q_l: str, max_len: int):
    """Shortest (then alphabetically least) ``z`` with ``|z| <= max_len`` that recovers
    the gap ``(w, q_u, q_l)``; None if there is none within the bound.

    Raises ValueError when ``q_l`` is not at least as cheap as ``q_u`` on ``w``.
    """
    w = a.check_word(w)
    hi = min_value(a, w, a.initial, {q_u})
    lo = min_value(a, w, a.initial, {q_l})
    if not lo <= hi:
        raise ValueError(f"({''.join(w)!r}, {q_u}, {q_l}) is not a gap: {q_l} is not cheaper than {q_u}")
    if hi is INF:
        return None
    for z in words_up_to(a.alphabet, max_len):
        if recovers(a, w, q_u, z):
            return z
    return None


def enumerate_gaps(a: Automaton, max_w: int, max_z: int) -> list[GapRecord]:
    """Every recoverable gap with ``|w| <= max_w`` witnessed by some ``|z| <= max_z``.

    Exponential in ``max_w``; meant for testing and exploration.
    """
    out = []
    for w in words_up_to(a.alphabet, max_w):
        vals = {q: min_value(a, w, a.initial, {q}) for q in a.states}
        for q_u in a.states:
            if vals[q_u] is INF:
                continue
            lows = [q for q in a.states if vals[q] is not INF and vals[q] <= vals[q_u]]
            # the recovering suffix depends on q_u only
            z = next((z for z in words_up_to(a.alphabet, max_z) if recovers(a, w, q_u, z)), None)
            if z is None:
                continue
            for q_l in lows:
                out.append(GapRecord(w, q_u, q_l, gap(a, w, q_u, q_l), z))
    return out
