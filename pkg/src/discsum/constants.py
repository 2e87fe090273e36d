"""The thresholds m_A, M, N and C, computed exactly.

N and C are astronomically large even for three states (thousands of bits),
so besides their exact values each is also kept in the affine form
``lam**E * coef + offset`` for compact printing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Automaton, ResourceLimitError

DEFAULT_MAX_EXPONENT = 2**20


@dataclass(frozen=True)
class Affine:
    """The rational ``lam**exponent * coef + offset``."""

    lam: int
    exponent: int
    coef: Fraction
    offset: Fraction

    @property
    def value(self) -> Fraction:
        return self.lam**self.exponent * self.coef + self.offset

    def __str__(self):
        if self.coef == 0:
            return _fmt(self.offset)
        head = f"{self.lam}^{self.exponent}"
        if self.coef != 1:
            head += f"·{_fmt(self.coef)}"
        if self.offset == 0:
            return head
        sign = "+" if self.offset > 0 else "-"
        return f"{head} {sign} {_fmt(abs(self.offset))}"


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class ConstantSet:
    m_a: int
    big_m: Fraction
    big_n: Fraction
    big_c: Fraction
    n_symbolic: Affine
    c_symbolic: Affine

    @property
    def n_floor(self) -> int:
        return self.big_n.numerator // self.big_n.denominator


def max_weight(a: Automaton) -> int:
    """Largest absolute transition or final weight (0 for an empty automaton)."""
    weights = [abs(t.weight) for t in a.transitions] + [abs(f) for _, f in a.accepting]
    return max(weights, default=0)


def steps_exponent(n_states: int) -> int:
    return n_states**2 * 2 ** (n_states**2)


def compute_constants(a: Automaton, max_exponent: int = DEFAULT_MAX_EXPONENT) -> ConstantSet:
    """m_A, M, N, C for ``a``.

    Raises :class:`ResourceLimitError` when the exponent ``|Q|^2 * 2^(|Q|^2)``
    in N exceeds ``max_exponent`` (the default admits up to four states).
    """
    n = len(a.states)
    lam = a.lam
    exponent = steps_exponent(n)
    if exponent > max_exponent:
        raise ResourceLimitError(
            f"|Q| = {n} needs lambda^{exponent}, above the exponent cap {max_exponent}"
        )
    m = max_weight(a)
    ratio = Fraction(lam, lam - 1)
    big_m = 2 * ratio * m
    n_gap = (n - 1) * big_m
    n_sym = Affine(lam, exponent, n_gap - big_m, big_m)
    c_sym = Affine(lam, exponent, ratio * n * n_sym.coef, ratio * (n * n_sym.offset + 2 * m))
    big_n = n_sym.value
    big_c = c_sym.value
    return ConstantSet(m, big_m, big_n, big_c, n_sym, c_sym)


def iterate_growth(x: Fraction, k: int, lam: int, m_a: int) -> Fraction:
    """Apply ``x -> lam * (x + 2 m_A)`` k times; the worst-case one-step gap growth."""
    for _ in range(k):
        x = lam * (x + 2 * m_a)
    return x
