"""The two running-example automata as text."""

from .core import Automaton, parse_automaton

FIX_A_TEXT = """\
lambda {lam}
alphabet a b
states q0 q1 q2
initial q0
accepting q0 0
accepting q1 0
accepting q2 0
trans q0 a q0 2
trans q0 a q2 3
trans q0 b q1 0
trans q2 a q2 0
"""

FIX_B_TEXT = """\
lambda 2
alphabet a b
states q0 q1
initial q0
accepting q0 0
accepting q1 0
trans q0 a q0 1
trans q0 a q1 0
trans q0 b q0 0
"""


def fix_a(lam: int = 2) -> Automaton:
    """Guesses between looping on a at cost 2 and jumping to a free a-loop at cost 3."""
    return parse_automaton(FIX_A_TEXT.format(lam=lam))


def fix_b() -> Automaton:
    return parse_automaton(FIX_B_TEXT)
