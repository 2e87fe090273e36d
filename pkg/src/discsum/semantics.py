"""Exact discounted-sum evaluation.

Values of length-``n`` runs are rationals ``num / lam**n``. They are kept as
:class:`ScaledValue` (an arbitrary-precision numerator and a power of the
discount factor) so that no floating point is ever involved. Missing runs are
represented by the :data:`INF` sentinel.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Union

from .core import Automaton


class NonIntegralError(ArithmeticError):
    """A normalized difference that should be an integer is not."""


@total_ordering
class Infinity:
    """Positive infinity for extended values and extended integers."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("discsum.INF")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()


@total_ordering
@dataclass(frozen=True)
class ScaledValue:
    """The exact rational ``num * lam**(-exp)`` in canonical form.

    Canonical means ``exp == 0`` or ``lam`` does not divide ``num``; build
    instances through :meth:`make` to get it.
    """

    num: int
    exp: int
    lam: int

    @classmethod
    def make(cls, num: int, exp: int, lam: int) -> ScaledValue:
        if exp < 0:
            return cls(num * lam ** (-exp), 0, lam)
        if num == 0:
            return cls(0, 0, lam)
        while exp > 0 and num % lam == 0:
            num //= lam
            exp -= 1
        return cls(num, exp, lam)

    @classmethod
    def of_int(cls, n: int, lam: int) -> ScaledValue:
        return cls(n, 0, lam)

    def _align(self, other: ScaledValue) -> tuple[int, int, int]:
        if other.lam != self.lam:
            raise ValueError(f"cannot combine values with discount {self.lam} and {other.lam}")
        e = max(self.exp, other.exp)
        return self.num * self.lam ** (e - self.exp), other.num * self.lam ** (e - other.exp), e

    def __add__(self, other):
        if other is INF:
            return INF
        if isinstance(other, int):
            other = ScaledValue.of_int(other, self.lam)
        if not isinstance(other, ScaledValue):
            return NotImplemented
        a, b, e = self._align(other)
        return ScaledValue.make(a + b, e, self.lam)

    __radd__ = __add__

    def __neg__(self):
        return ScaledValue(-self.num, self.exp, self.lam)

    def __sub__(self, other):
        if isinstance(other, int):
            other = ScaledValue.of_int(other, self.lam)
        if not isinstance(other, ScaledValue):
            return NotImplemented
        return self + (-other)

    def discount(self, k: int) -> ScaledValue:
        """Multiply by ``lam**(-k)``."""
        return ScaledValue.make(self.num, self.exp + k, self.lam)

    def __eq__(self, other):
        if isinstance(other, ScaledValue):
            return (self.num, self.exp, self.lam) == (other.num, other.exp, other.lam)
        if isinstance(other, int):
            return self.exp == 0 and self.num == other
        if isinstance(other, Fraction):
            return self.to_fraction() == other
        return False

    def __hash__(self):
        return hash((self.num, self.exp, self.lam))

    def __lt__(self, other):
        if other is INF:
            return True
        if isinstance(other, ScaledValue):
            a, b, _ = self._align(other)
            return a < b
        if isinstance(other, (int, Fraction)):
            return self.to_fraction() < other
        return NotImplemented

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, self.lam**self.exp)

    def to_decimal(self) -> str | None:
        """Exact decimal expansion, or None if the denominator does not divide a power of ten."""
        den = self.lam**self.exp
        d, twos, fives = den, 0, 0
        while d % 2 == 0:
            d //= 2
            twos += 1
        while d % 5 == 0:
            d //= 5
            fives += 1
        if d != 1:
            return None
        digits = max(twos, fives)
        scaled = self.num * 10**digits // den
        sign = "-" if scaled < 0 else ""
        s = str(abs(scaled)).rjust(digits + 1, "0")
        if digits == 0:
            return sign + s
        return f"{sign}{s[:-digits]}.{s[-digits:]}"

    def __str__(self):
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{self.lam}^{self.exp}"

    def to_json(self) -> dict:
        return {"num": str(self.num), "lambda_exp": self.exp}


ExtendedValue = Union[ScaledValue, Infinity]


def format_value(x: ExtendedValue, decimal: bool = False) -> str:
    if x is INF:
        return "inf"
    if decimal:
        d = x.to_decimal()
        if d is not None:
            return d
    return str(x)


def value_to_json(x: ExtendedValue):
    return "inf" if x is INF else x.to_json()


# ---------------------------------------------------------------------------
# dynamic programming over (position, state)


def normalized_run_values(a: Automaton, word, sources) -> list:
    """Undiscounted minimal run values after reading ``word`` from ``sources``.

    Entry ``q`` is ``lam**len(word) * A_[sources -> q](word)``, always an
    integer, or INF if no run reaches ``q``. Working with these integers keeps
    the DP exact without any denominators.
    """
    word = a.check_word(word)
    src = a.check_states(sources)
    lam = a.lam
    cur = [0 if q in src else INF for q in a.states]
    for sym in word:
        nxt = [INF] * len(cur)
        for p, q, wt in a.delta[sym]:
            if cur[p] is INF:
                continue
            cand = lam * (cur[p] + wt)
            if nxt[q] is INF or cand < nxt[q]:
                nxt[q] = cand
        cur = nxt
    return cur


def min_value(a: Automaton, word, sources, targets, with_final: bool = False) -> ExtendedValue:
    """Weight of a minimal run on ``word`` from ``sources`` to ``targets``.

    With ``with_final`` only accepting targets count and the discounted final
    weight is added. Returns INF when no such run exists.
    """
    word = a.check_word(word)
    tgt = a.check_states(targets)
    gammas = normalized_run_values(a, word, sources)
    best = INF
    for i, q in enumerate(a.states):
        g = gammas[i]
        if g is INF or q not in tgt:
            continue
        if with_final:
            f = a.final_by_index[i]
            if f is None:
                continue
            g = g + f
        if best is INF or g < best:
            best = g
    if best is INF:
        return INF
    return ScaledValue.make(best, len(word), a.lam)


def evaluate(a: Automaton, word) -> ExtendedValue:
    """The value A*(w): minimal accepting run weight including the final weight."""
    return min_value(a, word, a.initial, a.states, with_final=True)


def normalized_diff(x: ExtendedValue, y: ExtendedValue, length: int, lam: int):
    """``lam**length * (x - y)`` as an exact integer, INF if only ``x`` is infinite."""
    if x is INF and y is INF:
        raise ValueError("normalized difference of two infinite values is undefined")
    if x is INF:
        return INF
    if y is INF:
        raise ValueError("normalized difference is negative infinity")
    diff = (x - y).to_fraction() * lam**length
    if diff.denominator != 1:
        raise NonIntegralError(f"normalized difference {diff} is not an integer")
    return diff.numerator


def values_equal(x: ExtendedValue, y: ExtendedValue) -> bool:
    if x is INF or y is INF:
        return x is y
    return x.to_fraction() == y.to_fraction()


def minimum(values: Iterable[ExtendedValue]) -> ExtendedValue:
    best = INF
    for v in values:
        if v is not INF and (best is INF or v < best):
            best = v
    return best
